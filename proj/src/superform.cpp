#include "bvforms/superform.hpp"

#include <ostream>

#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"

namespace bvf {

SuperForm::SuperForm(int n) : n_(n) {
  if (n < 1 || n > kMaxPairs)
    throw InvalidArgument("number of Darboux pairs must lie in 1.." +
                          std::to_string(kMaxPairs) + ", got " + std::to_string(n));
}

SuperForm SuperForm::constant(int n, const Scalar& c) { return term(n, Monomial{}, c); }

SuperForm SuperForm::generator(int n, GeneratorId g) {
  check_index(g, n);
  return term(n, Monomial::generator(g));
}

SuperForm SuperForm::term(int n, const Monomial& m, const Scalar& c) {
  if (m.max_index() > n)
    throw InvalidArgument("monomial uses generator index beyond n = " + std::to_string(n));
  SuperForm f(n);
  f.add_term(m, c);
  return f;
}

Scalar SuperForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SuperForm::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void require_same_context(const SuperForm& a, const SuperForm& b) {
  if (a.n() != b.n())
    throw ContextMismatch("forms over n = " + std::to_string(a.n()) + " and n = " +
                          std::to_string(b.n()));
}

SuperForm& SuperForm::operator+=(const SuperForm& other) {
  require_same_context(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperForm& SuperForm::operator-=(const SuperForm& other) {
  require_same_context(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperForm& SuperForm::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SuperForm operator*(const SuperForm& a, const SuperForm& b) { return mul(a, b); }

SuperForm mul(const SuperForm& a, const SuperForm& b) {
  require_same_context(a, b);
  SuperForm out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto product = multiply(ma, mb);
      if (!product) continue;
      Scalar c = ca * cb;
      if (product->first < 0) c = -c;
      out.add_term(product->second, c);
    }
  }
  return out;
}

SuperForm pow(const SuperForm& base, int k) {
  if (k < 0) throw InvalidArgument("negative exponent");
  SuperForm result = SuperForm::constant(base.n(), 1);
  SuperForm square = base;
  while (k) {
    if (k & 1) result = mul(result, square);
    k >>= 1;
    if (k) square = mul(square, square);
  }
  return result;
}

SuperForm SuperForm::filter(const std::function<bool(const Monomial&)>& keep) const {
  SuperForm out(n_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::map<int, SuperForm> SuperForm::auxdeg_components() const {
  std::map<int, SuperForm> out;
  for (const auto& [m, c] : terms_) {
    const int k = m.degrees().auxdeg();
    auto it = out.try_emplace(k, n_).first;
    it->second.terms_.emplace_hint(it->second.terms_.end(), m, c);
  }
  return out;
}

bool SuperForm::is_function() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_function()) return false;
  return true;
}

std::optional<int> SuperForm::parity() const {
  std::optional<int> common;
  for (const auto& [m, c] : terms_) {
    const int par = m.parity();
    if (common && *common != par) return std::nullopt;
    common = par;
  }
  return common.value_or(0);
}

SuperForm SuperForm::map_terms(const std::function<SuperForm(const Monomial&)>& f) const {
  SuperForm out(n_);
  for (const auto& [m, c] : terms_) {
    SuperForm image = f(m);
    image *= c;
    out += image;
  }
  return out;
}

SuperForm partial_left(GeneratorId g, const SuperForm& f) {
  check_index(g, f.n());
  SuperForm out(f.n());
  for (const auto& [m, c] : f.terms()) {
    auto removed = remove_generator(g, m);
    if (removed) out.add_term(removed->second, c * removed->first);
  }
  return out;
}

SuperForm contract(GeneratorId g, const SuperForm& f) {
  switch (g.kind) {
    case GeneratorKind::X:
      return partial_left(dx(g.index), f);
    case GeneratorKind::P:
      return partial_left(dp(g.index), f);
    default:
      throw InvalidArgument("contraction is defined for x and p vector fields only, got " +
                            to_string(g));
  }
}

Monomial top_dx(int n) {
  Monomial m;
  for (int i = 1; i <= n; ++i) m = m.with_exponent(dx(i), 1);
  return m;
}

SuperForm top_form(int n) { return SuperForm::term(n, top_dx(n)); }

std::ostream& operator<<(std::ostream& os, const SuperForm& f) { return os << print(f); }

}  // namespace bvf
