#include "bvforms/substitution.hpp"

#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"

namespace bvf {

CoordinateChange CoordinateChange::identity(int n) {
  CoordinateChange c{n, {}, {}};
  for (int i = 1; i <= n; ++i) {
    c.xprime.push_back(SuperForm::generator(n, x(i)));
    c.pprime.push_back(SuperForm::generator(n, p(i)));
  }
  return c;
}

void CoordinateChange::validate() const {
  if (static_cast<int>(xprime.size()) != n || static_cast<int>(pprime.size()) != n)
    throw InvalidCoordinateChange("coordinate change needs exactly n x' and n p' components");
  auto check = [&](const SuperForm& f, int parity, const std::string& what) {
    if (f.n() != n) throw InvalidCoordinateChange(what + " lives over a different n");
    if (!f.is_function())
      throw InvalidCoordinateChange(what + " = " + print(f) + " contains differentials");
    if (f.is_zero()) return;
    if (f.parity() != parity)
      throw InvalidCoordinateChange(what + " = " + print(f) + " has the wrong parity");
  };
  for (int i = 0; i < n; ++i) {
    check(xprime[i], 0, "x'" + std::to_string(i + 1));
    check(pprime[i], 1, "p'" + std::to_string(i + 1));
  }
}

SuperForm substitute(const SuperForm& f, const CoordinateChange& c) {
  c.validate();
  require_same_context(f, c.xprime.front());
  const int n = c.n;

  // Images of the generators, in the slot layout of GeneratorKind.
  std::vector<SuperForm> images[4];
  for (int i = 0; i < n; ++i) {
    images[0].push_back(c.xprime[i]);
    images[1].push_back(c.pprime[i]);
    images[2].push_back(d(c.xprime[i]));
    images[3].push_back(d(c.pprime[i]));
  }

  SuperForm out(n);
  for (const auto& [m, coeff] : f.terms()) {
    SuperForm image = SuperForm::constant(n, coeff);
    // Even factors first, then odd ones in canonical order: the same ordered
    // product the monomial stands for.
    for (GeneratorKind kind : {GeneratorKind::X, GeneratorKind::DP}) {
      for (int i = 1; i <= n; ++i) {
        const int e = m.exponent({kind, i});
        if (e) image = mul(image, pow(images[static_cast<int>(kind)][i - 1], e));
      }
    }
    for (GeneratorKind kind : {GeneratorKind::P, GeneratorKind::DX}) {
      for (int i = 1; i <= n; ++i)
        if (m.contains({kind, i})) image = mul(image, images[static_cast<int>(kind)][i - 1]);
    }
    out += image;
  }
  return out;
}

CoordinateChange compose(const CoordinateChange& outer, const CoordinateChange& inner) {
  if (outer.n != inner.n) throw ContextMismatch("composing coordinate changes over different n");
  CoordinateChange out{outer.n, {}, {}};
  for (const auto& f : outer.xprime) out.xprime.push_back(substitute(f, inner));
  for (const auto& f : outer.pprime) out.pprime.push_back(substitute(f, inner));
  return out;
}

}  // namespace bvf
