#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

#include "bvforms/generator.hpp"

namespace bvf {

struct MultiDegree {
  int xdeg = 0;
  int pdeg = 0;
  int dxcount = 0;
  int dpcount = 0;

  int auxdeg() const { return dxcount - dpcount; }
  int formdeg() const { return dxcount + dpcount; }
  int parity() const { return (pdeg + dxcount) % 2; }
  int total() const { return xdeg + pdeg + dxcount + dpcount; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

// A canonical super-monomial: commuting generators (x, dp) carry exponents,
// anticommuting generators (p, dx) are a set read in the fixed order
// p1 < ... < pn < dx1 < ... < dxn. The monomial denotes the ordered product
// (even part) * (odd part in canonical order) with coefficient +1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial generator(GeneratorId g);

  int exponent(GeneratorId g) const;
  bool contains(GeneratorId g) const { return exponent(g) > 0; }

  MultiDegree degrees() const;
  int parity() const;
  bool is_function() const;

  // Exponent bookkeeping without sign handling. `with_exponent` on an odd
  // generator accepts only 0 or 1.
  Monomial with_exponent(GeneratorId g, int e) const;

  // Bit mask of the odd generators; bit order is the canonical order.
  std::uint32_t odd_mask() const { return odd_; }
  const std::array<std::uint16_t, 2 * kMaxPairs>& even_exponents() const { return even_; }

  // Largest generator index occurring, 0 for the unit monomial.
  int max_index() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  // x_i at slot i-1, dp_i at slot kMaxPairs+i-1.
  std::array<std::uint16_t, 2 * kMaxPairs> even_{};
  // p_i at bit i-1, dx_i at bit kMaxPairs+i-1.
  std::uint32_t odd_ = 0;

  friend std::optional<std::pair<int, Monomial>> multiply(const Monomial&, const Monomial&);
  friend std::optional<std::pair<int, Monomial>> remove_generator(GeneratorId, const Monomial&);
};

// Product of two canonical monomials: (sign, result) or nullopt when an odd
// generator repeats.
std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b);

// Left derivative on a single monomial: (factor, result) or nullopt when g is
// absent. For even g the factor is the exponent; for odd g it is the Koszul
// sign of moving g to the front.
std::optional<std::pair<int, Monomial>> remove_generator(GeneratorId g, const Monomial& m);

MultiDegree degrees(const Monomial& m);

// Graded order used for storage and printing: total degree, then form
// degree, then x/dp exponents descending, then odd generators.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace bvf
