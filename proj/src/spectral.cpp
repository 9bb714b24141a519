#include "bvforms/spectral.hpp"

#include <variant>

#include "bvforms/cohomology.hpp"
#include "bvforms/expression.hpp"

namespace bvf {

namespace {

SuperForm strip_top(const SuperForm& top_part) {
  SuperForm f(top_part.n());
  for (const auto& [m, c] : top_part.terms()) {
    Monomial stripped = m;
    for (int i = 1; i <= top_part.n(); ++i) stripped = stripped.with_exponent(dx(i), 0);
    f.add_term(stripped, c);
  }
  return f;
}

struct Obstruction {
  int level;
  SuperForm residue;
};

std::variant<CocycleExtension, Obstruction> try_extend(const SuperForm& f) {
  const int n = f.n();
  CocycleExtension ext{f, HbarForm(n), {}};
  std::vector<SuperForm> levels{times_top(f)};
  SuperForm alpha = levels.front();
  for (int j = 1;; ++j) {
    SuperForm beta = d(alpha);
    if (beta.is_zero()) break;
    if (j > n + 1)
      throw MismatchAgainstTheorem("extension of " + print(f) + " exceeds n + 1 levels");
    auto components = beta.auxdeg_components();
    if (auto top = components.find(n); top != components.end())
      return Obstruction{j, strip_top(top->second)};
    try {
      alpha = invert_omega(beta);
    } catch (const NotExact&) {
      throw ObstructionFound(j, beta);
    }
    ext.steps.push_back({beta, alpha});
    levels.push_back(j % 2 ? -alpha : alpha);
  }
  ext.z = HbarForm(n, std::move(levels));
  return ext;
}

}  // namespace

SuperForm third_differential(const SuperForm& f) {
  SuperForm beta = d(times_top(f));
  for (const auto& [k, component] : beta.auxdeg_components())
    if (!omega_wedge(component).is_zero())
      throw NotClosed("auxdeg " + std::to_string(k) + " part of d(f dx^top) is not omega^-closed");
  return canonical_rep(d(invert_omega(beta)));
}

D3Report verify_d3_equals_delta(const AlgebraContext& ctx) {
  ctx.validate();
  D3Report report{ctx.n, 0, 0};
  for (const Monomial& m : function_monomials(ctx)) {
    const SuperForm f = SuperForm::term(ctx.n, m);
    const SuperForm lhs = third_differential(f);
    const SuperForm rhs = bv_delta(f);
    if (lhs != rhs)
      throw MismatchAgainstTheorem("third differential of " + print(f) + " is " + print(lhs) +
                                   " but Delta gives " + print(rhs));
    ++report.cases;
    if (!rhs.is_zero()) ++report.nonzero_cases;
  }
  return report;
}

ObstructionFound::ObstructionFound(int level, SuperForm residue)
    : Error("cocycle extension obstructed at h^" + std::to_string(level) + " by " + print(residue)),
      level_(level),
      residue_(std::move(residue)) {}

nlohmann::json CocycleExtension::to_json() const {
  nlohmann::json alphas = nlohmann::json::array();
  for (const auto& step : steps)
    alphas.push_back({{"beta", print(step.beta)}, {"alpha", print(step.alpha)}});
  return {{"f", print(f)},
          {"n", f.n()},
          {"z", print(z)},
          {"levels", levels()},
          {"steps", alphas},
          {"replay", {{"op", "hbar-d"}, {"input", print(z)}, {"expect", print(hbar_d(z))}}}};
}

CocycleExtension extend_cocycle(const SuperForm& f) {
  const SuperForm delta = bv_delta(f);
  if (!delta.is_zero())
    throw DeltaNotClosed("Delta(" + print(f) + ") = " + print(delta) + " is not zero");
  auto attempt = try_extend(f);
  if (auto* obstruction = std::get_if<Obstruction>(&attempt))
    throw ObstructionFound(obstruction->level, obstruction->residue);
  auto& ext = std::get<CocycleExtension>(attempt);
  if (!hbar_d(ext.z).is_zero())
    throw MismatchAgainstTheorem("extension of " + print(f) + " is not a total cocycle");
  if (ext.levels() > static_cast<std::size_t>(f.n()) + 1)
    throw MismatchAgainstTheorem("extension of " + print(f) + " needs more than n + 1 levels");
  return std::move(ext);
}

NegativeControl negative_control(const SuperForm& f) {
  const SuperForm delta = bv_delta(f);
  if (delta.is_zero())
    throw InvalidArgument("negative control needs Delta f != 0, but " + print(f) + " is Delta-closed");
  auto attempt = try_extend(f);
  auto* obstruction = std::get_if<Obstruction>(&attempt);
  if (!obstruction)
    throw MismatchAgainstTheorem("extension of non-closed " + print(f) + " unexpectedly succeeded");
  if (obstruction->residue != delta)
    throw MismatchAgainstTheorem("obstruction for " + print(f) + " is " + print(obstruction->residue) +
                                 ", Delta f is " + print(delta));
  return {f, obstruction->residue, obstruction->level};
}

DegenerationReport verify_degeneration(const AlgebraContext& ctx) {
  ctx.validate();
  const int n = ctx.n;
  DegenerationReport report{n, 0, 0, 0};
  for (int a = 0; a <= ctx.max_xdeg; ++a) {
    for (int b = 0; b <= ctx.pdeg_cap(); ++b) {
      if (ctx.max_total >= 0 && a + b > ctx.max_total) continue;
      const auto domain = function_monomials(n, a, b);
      const auto codomain = a > 0 && b > 0 ? function_monomials(n, a - 1, b - 1) : std::vector<Monomial>{};
      const RankKernel kernel = rank_kernel(operator_matrix(bv_delta, n, domain, codomain));
      for (const auto& v : kernel.kernel) {
        SuperForm f(n);
        for (std::size_t i = 0; i < v.size(); ++i) f.add_term(domain[i], v[i]);
        const CocycleExtension ext = extend_cocycle(f);
        report.max_levels = std::max(report.max_levels, ext.levels());
        ++report.closed_cases;
      }
      for (const Monomial& m : domain) {
        const SuperForm f = SuperForm::term(n, m);
        if (bv_delta(f).is_zero()) continue;
        negative_control(f);
        ++report.control_cases;
      }
    }
  }
  return report;
}

}  // namespace bvf
