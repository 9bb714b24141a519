#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvforms/substitution.hpp"

namespace bvf {

using FormMatrix = std::vector<std::vector<SuperForm>>;

struct SymplecticCheck {
  bool ok = false;
  SuperForm residual;  // substitute(omega', c) - omega
};

SymplecticCheck is_symplectomorphism(const CoordinateChange& c);

// Super-Jacobian of x', p' with respect to x, p (rows: primed functions,
// columns: coordinates), left derivatives:
//   A = dx'/dx (even)  B = dx'/dp (odd)
//   C = dp'/dx (odd)   D = dp'/dp (even)
struct SuperMatrix {
  int n = 1;
  FormMatrix a, b, c, d;
};

SuperMatrix jacobian(const CoordinateChange& c);

// Determinant of a square matrix with even (hence mutually commuting) entries.
SuperForm determinant(const FormMatrix& m);

// 1/u for u = c (1 + nu) with c a non-zero rational and nu nilpotent;
// throws NonInvertibleD otherwise.
SuperForm invert_unit(const SuperForm& u);

// det(A - B D^{-1} C) / det(D).
SuperForm berezinian(const SuperMatrix& m);

// Function r with [substitute(dx'^top, c)] = [r dx^top]; r^2 = Ber(J).
SuperForm semidensity_factor(const CoordinateChange& c);

struct InvarianceReport {
  std::size_t cases = 0;
};

// For every function monomial f' in ctx's caps:
//   rep(substitute(Delta f' dx'^top)) == Delta(rep(substitute(f' dx'^top))).
InvarianceReport verify_delta_invariance(const CoordinateChange& c, const AlgebraContext& ctx);

enum class FamilyTag { LinearSymplectic, PointTransformation, OddShift, Composite };

std::string to_string(FamilyTag tag);

struct GeneratedChange {
  FamilyTag tag;
  std::string description;
  CoordinateChange change;
};

// x' = A x + t, p' = A^{-T} p.
GeneratedChange linear_symplectic(const std::vector<std::vector<Scalar>>& a,
                                  const std::vector<Scalar>& translation);

// x'_i = x_i + h_i(x_1..x_{i-1}), p' = (Dx'/Dx)^{-T} p.
GeneratedChange point_transformation(const std::vector<SuperForm>& h);

// x'_i = x_i + dH/dp_i, p' = p, for an odd polynomial H(p).
GeneratedChange odd_shift(const SuperForm& h);

// outer after inner.
GeneratedChange composite(const GeneratedChange& outer, const GeneratedChange& inner);

// Deterministic random member of a base family (not Composite).
GeneratedChange sample_family(FamilyTag tag, int n, std::uint64_t seed);

// One sample of each base family plus all ordered pairwise composites of
// distinct families.
std::vector<GeneratedChange> standard_families(int n, std::uint64_t seed);

// {"n": int, "xprime": [expr, ...], "pprime": [expr, ...]}
nlohmann::json to_json(const CoordinateChange& c);
CoordinateChange coordinate_change_from_json(const nlohmann::json& j);

}  // namespace bvf
