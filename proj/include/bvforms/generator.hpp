#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

namespace bvf {

// Largest supported number of Darboux pairs.
inline constexpr int kMaxPairs = 8;

enum class GeneratorKind : std::uint8_t { X, P, DX, DP };

// One of x_i, p_i, dx_i, dp_i with 1 <= index <= n.
struct GeneratorId {
  GeneratorKind kind;
  int index;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

inline GeneratorId x(int i) { return {GeneratorKind::X, i}; }
inline GeneratorId p(int i) { return {GeneratorKind::P, i}; }
inline GeneratorId dx(int i) { return {GeneratorKind::DX, i}; }
inline GeneratorId dp(int i) { return {GeneratorKind::DP, i}; }

// Total parity: function parity plus form degree mod 2.
// x and dp are even, p and dx are odd.
constexpr bool is_odd(GeneratorKind kind) {
  return kind == GeneratorKind::P || kind == GeneratorKind::DX;
}

constexpr bool is_form_generator(GeneratorKind kind) {
  return kind == GeneratorKind::DX || kind == GeneratorKind::DP;
}

// +1 for dx, -1 for dp, 0 for coordinates.
constexpr int auxdeg_weight(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::DX:
      return 1;
    case GeneratorKind::DP:
      return -1;
    default:
      return 0;
  }
}

std::string to_string(GeneratorId g);

// Throws InvalidArgument unless 1 <= g.index <= n.
void check_index(GeneratorId g, int n);

// Number of Darboux pairs plus the enumeration caps used by the
// verification routines. Arithmetic itself is never truncated.
struct AlgebraContext {
  int n = 1;
  int max_xdeg = 3;
  int max_pdeg = -1;    // negative: up to n
  int max_total = -1;   // cap on xdeg + pdeg of functions; negative: none
  std::optional<int> min_auxdeg;  // lowest auxdeg scanned; default -(n+1)

  int pdeg_cap() const { return max_pdeg < 0 ? n : std::min(max_pdeg, n); }
  int lowest_auxdeg() const { return min_auxdeg.value_or(-(n + 1)); }
  void validate() const;
};

}  // namespace bvf
