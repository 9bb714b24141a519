#include "bvforms/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "bvforms/cohomology.hpp"
#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/geometry.hpp"
#include "bvforms/operators.hpp"
#include "bvforms/spectral.hpp"

namespace bvf {

namespace {

AlgebraContext context_of(const SuiteParams& params) {
  AlgebraContext ctx;
  ctx.n = params.n;
  ctx.max_xdeg = params.max_xdeg;
  return ctx;
}

int total_cap(const SuiteParams& params) {
  return params.max_total >= 0 ? params.max_total : params.max_xdeg + 2;
}

// Runs body, turning any library error into a failed check.
CheckResult run_check(const std::string& name, const std::function<std::size_t()>& body) {
  CheckResult result{name, false, 0, {}};
  try {
    result.cases = body();
    result.passed = true;
  } catch (const Error& e) {
    result.counterexample = e.what();
  }
  return result;
}

std::size_t check_bicomplex(const SuiteParams& params) {
  const int n = params.n;
  const SuperForm w = omega(n);
  std::size_t cases = 0;
  for (const Monomial& m : monomials_up_to_total(n, total_cap(params))) {
    const SuperForm f = SuperForm::term(n, m);
    if (!d(d(f)).is_zero()) throw MismatchAgainstTheorem("d^2 != 0 on " + print(f));
    if (!omega_wedge(omega_wedge(f)).is_zero())
      throw MismatchAgainstTheorem("(omega^)^2 != 0 on " + print(f));
    if (!(d(omega_wedge(f)) + omega_wedge(d(f))).is_zero())
      throw MismatchAgainstTheorem("d and omega^ do not anticommute on " + print(f));
    ++cases;
  }
  if (!d(w).is_zero()) throw MismatchAgainstTheorem("d(omega) != 0");
  return cases;
}

std::size_t check_homotopy(const SuiteParams& params) {
  const int n = params.n;
  std::size_t cases = 0;
  for (const Monomial& m : monomials_up_to_total(n, total_cap(params))) {
    const SuperForm a = SuperForm::term(n, m);
    const SuperForm lhs = homotopy_L(omega_wedge(a)) + omega_wedge(homotopy_L(a));
    const SuperForm rhs = a * Scalar(n - m.degrees().auxdeg());
    if (lhs != rhs)
      throw MismatchAgainstTheorem("homotopy identity fails on " + print(a) + ": " + print(lhs) +
                                   " vs " + print(rhs));
    ++cases;
  }
  return cases;
}

std::size_t check_delta_squared(const SuiteParams& params) {
  AlgebraContext ctx = context_of(params);
  std::size_t cases = 0;
  for (const Monomial& m : function_monomials(ctx)) {
    const SuperForm f = SuperForm::term(params.n, m);
    if (!bv_delta(bv_delta(f)).is_zero()) throw MismatchAgainstTheorem("Delta^2 != 0 on " + print(f));
    ++cases;
  }
  return cases;
}

SuperForm random_form(int n, std::mt19937_64& rng) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  SuperForm f(n);
  const int terms = pick(0, 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int i = 1; i <= n; ++i) {
      m = m.with_exponent(x(i), pick(0, 3) == 0 ? pick(1, 3) : 0);
      m = m.with_exponent(dp(i), pick(0, 4) == 0 ? pick(1, 2) : 0);
      m = m.with_exponent(p(i), pick(0, 1));
      m = m.with_exponent(dx(i), pick(0, 2) == 0 ? 1 : 0);
    }
    int den = pick(1, 4);
    f.add_term(m, ratio(pick(-9, 9), den));
  }
  return f;
}

std::size_t check_parser_roundtrip(const SuiteParams& params) {
  std::mt19937_64 rng(params.seed);
  std::size_t cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const SuperForm f = random_form(params.n, rng);
    const std::string text = print(f);
    const SuperForm back = parse(text, params.n);
    if (back != f) throw MismatchAgainstTheorem("round trip changed " + text + " into " + print(back));
    if (print(back) != text) throw MismatchAgainstTheorem("printing is not stable for " + text);
    ++cases;
  }
  return cases;
}

std::size_t check_parser_errors(const SuiteParams& params) {
  struct Bad {
    const char* text;
    std::size_t position;
  };
  const Bad cases[] = {{"x1 +", 4}, {"x1 ** p1", 4}, {"(x1 + p1", 8}, {"y1", 0},
                       {"x0", 1},   {"3/0", 2},      {"dx1 $ 2", 4}, {"x1^", 3}};
  for (const Bad& bad : cases) {
    try {
      parse(bad.text, std::max(params.n, 1));
    } catch (const ParseError& e) {
      if (e.position() != bad.position)
        throw MismatchAgainstTheorem(std::string("'") + bad.text + "' reported position " +
                                     std::to_string(e.position()) + ", expected " +
                                     std::to_string(bad.position));
      continue;
    }
    throw MismatchAgainstTheorem(std::string("'") + bad.text + "' parsed without error");
  }
  return std::size(cases);
}

using SuiteBody = std::function<void(const SuiteParams&, std::vector<CheckResult>&)>;

const std::vector<std::pair<std::string, SuiteBody>>& registry() {
  static const std::vector<std::pair<std::string, SuiteBody>> suites = {
      {"bicomplex",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("d^2 = 0, (omega^)^2 = 0, [d, omega^] = 0",
                                 [&] { return check_bicomplex(p); }));
       }},
      {"homotopy",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("L omega^ + omega^ L = (n - auxdeg) id",
                                 [&] { return check_homotopy(p); }));
       }},
      {"e1",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("H(omega^) = f dx^top at auxdeg n, 0 elsewhere",
                                 [&] { return verify_e1(context_of(p)).slices.size(); }));
       }},
      {"d1",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("d(f dx^top) is omega^-exact",
                                 [&] { return verify_d1_zero(context_of(p)).certificates.size(); }));
       }},
      {"d3",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("d o omega^-1 o d = Delta",
                                 [&] { return verify_d3_equals_delta(context_of(p)).cases; }));
       }},
      {"delta-squared",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("Delta^2 = 0", [&] { return check_delta_squared(p); }));
       }},
      {"degeneration",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("Delta-closed classes extend to total cocycles; obstruction = Delta", [&] {
           const DegenerationReport r = verify_degeneration(context_of(p));
           return r.closed_cases + r.control_cases;
         }));
       }},
      {"invariance",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         AlgebraContext ctx = context_of(p);
         ctx.max_total = p.max_xdeg;
         for (const GeneratedChange& g : standard_families(p.n, p.seed)) {
           const std::string label = to_string(g.tag) + ": " + g.description;
           out.push_back(run_check("symplectic " + label, [&]() -> std::size_t {
             const SymplecticCheck s = is_symplectomorphism(g.change);
             if (!s.ok) throw MismatchAgainstTheorem("residual " + print(s.residual));
             return 1;
           }));
           out.push_back(run_check("r^2 = Ber " + label, [&]() -> std::size_t {
             const SuperForm r = semidensity_factor(g.change);
             const SuperForm ber = berezinian(jacobian(g.change));
             if (mul(r, r) != ber)
               throw MismatchAgainstTheorem("r = " + print(r) + ", Ber = " + print(ber));
             return 1;
           }));
           out.push_back(run_check("Delta invariance " + label,
                                   [&] { return verify_delta_invariance(g.change, ctx).cases; }));
         }
         out.push_back(run_check("Ber and r multiplicative under composition", [&] {
           const auto fams = standard_families(p.n, p.seed);
           std::size_t cases = 0;
           for (const auto& outer : fams)
             for (const auto& inner : fams) {
               const CoordinateChange both = compose(outer.change, inner.change);
               const SuperForm ber = berezinian(jacobian(both));
               const SuperForm expected = mul(substitute(berezinian(jacobian(outer.change)), inner.change),
                                              berezinian(jacobian(inner.change)));
               if (ber != expected)
                 throw MismatchAgainstTheorem("Ber(" + outer.description + " o " + inner.description +
                                              ") = " + print(ber) + ", expected " + print(expected));
               const SuperForm r = semidensity_factor(both);
               const SuperForm r_expected = mul(substitute(semidensity_factor(outer.change), inner.change),
                                                semidensity_factor(inner.change));
               if (r != r_expected)
                 throw MismatchAgainstTheorem("r(" + outer.description + " o " + inner.description +
                                              ") = " + print(r) + ", expected " + print(r_expected));
               ++cases;
             }
           return cases;
         }));
       }},
      {"manin",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("constant-coefficient H(omega^) = span [dx^top]", [&] {
           return manin_fiber_check(context_of(p)).slices.size();
         }));
       }},
      {"parser",
       [](const SuiteParams& p, std::vector<CheckResult>& out) {
         out.push_back(run_check("parse(print(f)) = f", [&] { return check_parser_roundtrip(p); }));
         out.push_back(run_check("malformed input reports its position",
                                 [&] { return check_parser_errors(p); }));
       }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, body] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json CheckReport::to_json(bool include_timing) const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    checks_json.push_back(std::move(entry));
  }
  nlohmann::json out = {
      {"schema", 1},
      {"suite", suite},
      {"params", {{"n", params.n}, {"max_xdeg", params.max_xdeg}, {"max_total", params.max_total}, {"seed", params.seed}}},
      {"status", passed() ? "pass" : "fail"},
      {"checks", checks_json}};
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (n = " << params.n << ", max-xdeg = " << params.max_xdeg
     << ", seed = " << params.seed << ")\n";
  for (const auto& c : checks) {
    os << (c.passed ? "  PASS " : "  FAIL ") << c.name << " [" << c.cases << " cases]\n";
    if (!c.passed) os << "       " << c.counterexample << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << " in " << static_cast<long long>(elapsed_ms) << " ms\n";
  return os.str();
}

CheckReport run_suite(std::string_view name, const SuiteParams& params) {
  if (params.n < 1 || params.n > kMaxPairs)
    throw InvalidArgument("n must lie in 1.." + std::to_string(kMaxPairs) + ", got " +
                          std::to_string(params.n));
  if (params.max_xdeg < 0) throw InvalidArgument("max-xdeg must be non-negative");
  const auto& suites = registry();
  const bool all = name == "all";
  auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (!all && it == suites.end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");

  CheckReport report{std::string(name), params, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [suite_name, body] : suites)
    if (all || suite_name == name) body(params, report.checks);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bvf
