#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bvf {

struct SuiteParams {
  int n = 1;
  int max_xdeg = 3;
  // Total-degree cap for the form-level suites (bicomplex, homotopy);
  // negative means max_xdeg + 2.
  int max_total = -1;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string counterexample;  // empty on success
};

struct CheckReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool passed() const;
  nlohmann::json to_json(bool include_timing = false) const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite or invalid parameters; check
// failures are recorded in the report, never thrown.
CheckReport run_suite(std::string_view name, const SuiteParams& params);

}  // namespace bvf
