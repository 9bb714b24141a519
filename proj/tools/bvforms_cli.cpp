// bvforms: parse, transform and machine-check forms on odd symplectic
// superspaces in Darboux coordinates.
//
// Exit status: 0 success, 1 check failure or failed operation, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/geometry.hpp"
#include "bvforms/operators.hpp"
#include "bvforms/suites.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int cmd_parse(const std::string& expr, std::optional<int> n, bool json) {
  const bvf::HbarForm z = bvf::parse_hbar(expr, n);
  if (json && z.levels().size() <= 1) {
    std::cout << bvf::to_json(z.level(0)).dump() << "\n";
  } else {
    std::cout << bvf::print(z) << "\n";
  }
  return 0;
}

int cmd_apply(const std::string& op, int n, const std::string& expr) {
  if (op == "hbar-d") {
    std::cout << bvf::print(bvf::hbar_d(bvf::parse_hbar(expr, n))) << "\n";
    return 0;
  }
  const bvf::SuperForm f = bvf::parse(expr, n);
  bvf::SuperForm out(n);
  if (op == "d") out = bvf::d(f);
  else if (op == "omega") out = bvf::omega_wedge(f);
  else if (op == "L") out = bvf::homotopy_L(f);
  else if (op == "delta") out = bvf::bv_delta(f);
  else if (op == "invert-omega") out = bvf::invert_omega(f);
  else if (op == "reduce") out = bvf::canonical_rep(f);
  else throw bvf::InvalidArgument("unknown op '" + op + "'");
  std::cout << bvf::print(out) << "\n";
  return 0;
}

int cmd_pullback(const std::string& map_file, const std::string& expr) {
  std::ifstream in(map_file);
  if (!in) throw bvf::InvalidArgument("cannot open map file '" + map_file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw bvf::InvalidArgument(std::string("map file is not valid JSON: ") + e.what());
  }
  const bvf::CoordinateChange c = bvf::coordinate_change_from_json(j);
  std::cout << bvf::print(bvf::substitute(bvf::parse(expr, c.n), c)) << "\n";
  return 0;
}

int cmd_check(const std::string& suite, const bvf::SuiteParams& params, const std::string& format,
              bool timing) {
  const bvf::CheckReport report = bvf::run_suite(suite, params);
  if (format == "json") std::cout << report.to_json(timing).dump(2) << "\n";
  else std::cout << report.to_text();
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forms, the BV operator and the (omega^, d) bicomplex in Darboux coordinates"};
  app.require_subcommand(1);

  std::string expr;
  std::optional<int> parse_n;
  bool parse_json = false;
  auto* parse_cmd = app.add_subcommand("parse", "Normalize an expression and print it");
  parse_cmd->add_option("EXPR", expr, "Expression")->required();
  parse_cmd->add_option("--n", parse_n, "Number of Darboux pairs (default: largest index)");
  parse_cmd->add_flag("--json", parse_json, "Print the term list as JSON");

  std::string op;
  int n = 1;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to an expression");
  apply_cmd->add_option("--op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"d", "omega", "L", "delta", "invert-omega", "reduce", "hbar-d"}));
  apply_cmd->add_option("--n", n, "Number of Darboux pairs")->required();
  apply_cmd->add_option("EXPR", expr, "Expression")->required();

  std::string map_file;
  auto* pullback_cmd = app.add_subcommand("pullback", "Pull a primed expression back along a map");
  pullback_cmd->add_option("--map", map_file, "Coordinate change JSON file")->required();
  pullback_cmd->add_option("EXPR", expr, "Expression in primed coordinates")->required();

  std::string suite;
  bvf::SuiteParams params;
  std::string format = "text";
  bool timing = false;
  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("SUITE", suite, "Suite name")->required()->check(CLI::IsMember(bvf::suite_names()));
  check_cmd->add_option("--n", params.n, "Number of Darboux pairs")->required();
  check_cmd->add_option("--max-xdeg", params.max_xdeg, "Largest x-degree enumerated")->required();
  check_cmd->add_option("--max-total", params.max_total, "Total-degree cap for form-level suites");
  check_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--seed", params.seed, "Seed for sampled inputs");
  check_cmd->add_flag("--timing", timing, "Include wall-clock time in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(expr, parse_n, parse_json);
    if (*apply_cmd) return cmd_apply(op, n, expr);
    if (*pullback_cmd) return cmd_pullback(map_file, expr);
    if (*check_cmd) return cmd_check(suite, params, format, timing);
  } catch (const bvf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bvf::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bvf::InvalidCoordinateChange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bvf::Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
