#pragma once

#include <vector>

#include "bvforms/superform.hpp"

namespace bvf {

// A polynomial Darboux-patch map: the primed coordinates x'_i (even) and p'_i
// (odd) written as functions of the unprimed (x, p).
struct CoordinateChange {
  int n = 1;
  std::vector<SuperForm> xprime;
  std::vector<SuperForm> pprime;

  static CoordinateChange identity(int n);

  // Sizes, contexts, function-degree and parities; throws
  // InvalidCoordinateChange.
  void validate() const;
};

// Pull back a form written in primed generators (x_i read as x'_i, dx_i as
// dx'_i, ...) along c. An algebra homomorphism commuting with d.
SuperForm substitute(const SuperForm& f, const CoordinateChange& c);

// The change expressing x'' in x given x'' in x' (outer) and x' in x (inner).
CoordinateChange compose(const CoordinateChange& outer, const CoordinateChange& inner);

}  // namespace bvf
