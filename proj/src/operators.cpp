#include "bvforms/operators.hpp"

#include <algorithm>

#include "bvforms/expression.hpp"

namespace bvf {

SuperForm d(const SuperForm& f) {
  const int n = f.n();
  SuperForm out(n);
  for (const auto& [m, c] : f.terms()) {
    for (int i = 1; i <= n; ++i) {
      for (auto [coord, differential] : {std::pair{x(i), dx(i)}, std::pair{p(i), dp(i)}}) {
        auto removed = remove_generator(coord, m);
        if (!removed) continue;
        auto product = multiply(Monomial::generator(differential), removed->second);
        if (!product) continue;
        out.add_term(product->second, c * (removed->first * product->first));
      }
    }
  }
  return out;
}

SuperForm omega(int n) {
  SuperForm w(n);
  for (int i = 1; i <= n; ++i) w += mul(SuperForm::generator(n, dp(i)), SuperForm::generator(n, dx(i)));
  return w;
}

SuperForm omega_wedge(const SuperForm& f) { return mul(omega(f.n()), f); }

SuperForm homotopy_L(const SuperForm& f) {
  SuperForm out(f.n());
  for (int i = 1; i <= f.n(); ++i) out += contract(x(i), contract(p(i), f));
  return out;
}

ComponentAtTopAuxdeg::ComponentAtTopAuxdeg(SuperForm component)
    : Error("component " + print(component) + " has auxdeg n; omega^ is not invertible there"),
      component_(std::move(component)) {}

NotExact::NotExact(SuperForm input, SuperForm residual)
    : Error("form " + print(input) + " is not omega^-exact (residual " + print(residual) + ")"),
      input_(std::move(input)),
      residual_(std::move(residual)) {}

SuperForm invert_omega(const SuperForm& beta) {
  const int n = beta.n();
  SuperForm alpha(n);
  for (const auto& [k, component] : beta.auxdeg_components()) {
    if (k == n) throw ComponentAtTopAuxdeg(component);
    alpha += homotopy_L(component) * ratio(1, n - k);
  }
  SuperForm residual = omega_wedge(alpha) - beta;
  if (!residual.is_zero()) throw NotExact(beta, residual);
  return alpha;
}

SuperForm bv_delta(const SuperForm& f) {
  if (!f.is_function())
    throw InvalidArgument("BV operator acts on functions; got form " + print(f));
  SuperForm out(f.n());
  for (int k = 1; k <= f.n(); ++k) out += partial_left(x(k), partial_left(p(k), f));
  return out;
}

SuperForm times_top(const SuperForm& f) {
  if (!f.is_function()) throw InvalidArgument("expected a function, got " + print(f));
  return mul(f, top_form(f.n()));
}

SuperForm canonical_rep(const SuperForm& gamma) {
  const int n = gamma.n();
  if (!omega_wedge(gamma).is_zero())
    throw NotClosed("form " + print(gamma) + " is not omega^-closed");
  // auxdeg n forces exactly n dx factors and no dp, i.e. f * dx1...dxn, and
  // p's precede dx's canonically, so stripping dx^top carries no sign.
  SuperForm f(n);
  SuperForm rest(n);
  for (const auto& [m, c] : gamma.terms()) {
    if (m.degrees().auxdeg() == n) {
      Monomial stripped = m;
      for (int i = 1; i <= n; ++i) stripped = stripped.with_exponent(dx(i), 0);
      f.add_term(stripped, c);
    } else {
      rest.add_term(m, c);
    }
  }
  invert_omega(rest);
  return f;
}

HbarForm::HbarForm(int n, std::vector<SuperForm> levels) : n_(n), levels_(std::move(levels)) {
  for (const auto& level : levels_)
    if (level.n() != n_) throw ContextMismatch("h-level over a different n");
  trim();
}

void HbarForm::trim() {
  while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
}

SuperForm HbarForm::level(std::size_t j) const {
  return j < levels_.size() ? levels_[j] : SuperForm(n_);
}

HbarForm operator+(const HbarForm& a, const HbarForm& b) {
  if (a.n() != b.n()) throw ContextMismatch("h-forms over different n");
  std::vector<SuperForm> levels;
  const std::size_t size = std::max(a.levels().size(), b.levels().size());
  for (std::size_t j = 0; j < size; ++j) levels.push_back(a.level(j) + b.level(j));
  return HbarForm(a.n(), std::move(levels));
}

HbarForm operator-(const HbarForm& a, const HbarForm& b) {
  std::vector<SuperForm> negated;
  for (const auto& level : b.levels()) negated.push_back(-level);
  return a + HbarForm(b.n(), std::move(negated));
}

HbarForm hbar_d(const HbarForm& z) {
  std::vector<SuperForm> out;
  const std::size_t size = z.levels().size() + 1;
  for (std::size_t j = 0; j < size; ++j) {
    SuperForm level = omega_wedge(z.level(j));
    if (j > 0) level += d(z.level(j - 1));
    out.push_back(std::move(level));
  }
  return HbarForm(z.n(), std::move(out));
}

}  // namespace bvf
