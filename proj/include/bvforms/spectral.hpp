#pragma once

#include <vector>

#include <json.hpp>

#include "bvforms/operators.hpp"

namespace bvf {

// d o (omega^)^{-1} o d on the E1 class [f * dx^top], returned as the
// function of its canonical representative.
SuperForm third_differential(const SuperForm& f);

struct D3Report {
  int n = 1;
  std::size_t cases = 0;
  std::size_t nonzero_cases = 0;
};

// third_differential(f) == bv_delta(f) for every function monomial in the
// caps. Throws MismatchAgainstTheorem with the counterexample.
D3Report verify_d3_equals_delta(const AlgebraContext& ctx);

class DeltaNotClosed : public Error {
 public:
  using Error::Error;
};

// The extension stops at level `level` because the auxdeg-n part of
// d(alpha_{level-1}) is residue * dx^top, which omega^ cannot hit.
class ObstructionFound : public Error {
 public:
  ObstructionFound(int level, SuperForm residue);
  int level() const { return level_; }
  const SuperForm& residue() const { return residue_; }

 private:
  int level_;
  SuperForm residue_;
};

struct ExtensionStep {
  SuperForm beta;   // d(alpha_{j-1})
  SuperForm alpha;  // omega ^ alpha == beta
};

// A total cocycle z = sum_j (-h)^j alpha_j of h d + omega^, alpha_0 = f * dx^top.
struct CocycleExtension {
  SuperForm f;
  HbarForm z;
  std::vector<ExtensionStep> steps;

  std::size_t levels() const { return z.levels().size(); }
  nlohmann::json to_json() const;
};

// Requires bv_delta(f) == 0 (DeltaNotClosed otherwise). The result satisfies
// hbar_d(z) == 0, checked before returning.
CocycleExtension extend_cocycle(const SuperForm& f);

struct NegativeControl {
  SuperForm f;
  SuperForm residue;
  int level = 0;
};

// For f with bv_delta(f) != 0: runs the extension, asserts that it is
// obstructed and that the obstruction equals bv_delta(f). Throws
// InvalidArgument when bv_delta(f) == 0 and MismatchAgainstTheorem when the
// prediction fails.
NegativeControl negative_control(const SuperForm& f);

struct DegenerationReport {
  int n = 1;
  std::size_t closed_cases = 0;     // Delta-closed inputs extended
  std::size_t control_cases = 0;    // non-closed monomials rejected as predicted
  std::size_t max_levels = 0;
};

// Extends a basis of ker(Delta) on every (xdeg, pdeg) slice in the caps and
// runs the negative control on every monomial with Delta f != 0.
DegenerationReport verify_degeneration(const AlgebraContext& ctx);

}  // namespace bvf
