#include "bvforms/monomial.hpp"

#include <bit>
#include <limits>

#include "bvforms/errors.hpp"

namespace bvf {

namespace {

int even_slot(GeneratorId g) {
  return g.kind == GeneratorKind::X ? g.index - 1 : kMaxPairs + g.index - 1;
}

int odd_bit(GeneratorId g) {
  return g.kind == GeneratorKind::P ? g.index - 1 : kMaxPairs + g.index - 1;
}

void check_range(GeneratorId g) {
  if (g.index < 1 || g.index > kMaxPairs)
    throw InvalidArgument("generator index " + std::to_string(g.index) + " out of range");
}

}  // namespace

std::string to_string(GeneratorId g) {
  static constexpr const char* names[] = {"x", "p", "dx", "dp"};
  return names[static_cast<int>(g.kind)] + std::to_string(g.index);
}

void check_index(GeneratorId g, int n) {
  if (g.index < 1 || g.index > n)
    throw InvalidArgument("generator " + to_string(g) + " out of range for n = " +
                          std::to_string(n));
}

void AlgebraContext::validate() const {
  if (n < 1 || n > kMaxPairs)
    throw InvalidArgument("n must lie in 1.." + std::to_string(kMaxPairs) + ", got " +
                          std::to_string(n));
  if (max_xdeg < 0) throw InvalidArgument("max_xdeg must be non-negative");
}

Monomial Monomial::generator(GeneratorId g) { return Monomial{}.with_exponent(g, 1); }

int Monomial::exponent(GeneratorId g) const {
  check_range(g);
  if (is_odd(g.kind)) return (odd_ >> odd_bit(g)) & 1u;
  return even_[even_slot(g)];
}

Monomial Monomial::with_exponent(GeneratorId g, int e) const {
  check_range(g);
  Monomial out = *this;
  if (is_odd(g.kind)) {
    if (e < 0 || e > 1) throw InvalidArgument("odd generator exponent must be 0 or 1");
    const std::uint32_t bit = 1u << odd_bit(g);
    out.odd_ = e ? (odd_ | bit) : (odd_ & ~bit);
  } else {
    if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
      throw InvalidArgument("exponent out of range");
    out.even_[even_slot(g)] = static_cast<std::uint16_t>(e);
  }
  return out;
}

MultiDegree Monomial::degrees() const {
  MultiDegree d;
  for (int i = 0; i < kMaxPairs; ++i) {
    d.xdeg += even_[i];
    d.dpcount += even_[kMaxPairs + i];
  }
  constexpr std::uint32_t low = (1u << kMaxPairs) - 1;
  d.pdeg = std::popcount(odd_ & low);
  d.dxcount = std::popcount(odd_ >> kMaxPairs);
  return d;
}

MultiDegree degrees(const Monomial& m) { return m.degrees(); }

int Monomial::parity() const { return std::popcount(odd_) % 2; }

bool Monomial::is_function() const {
  if (odd_ >> kMaxPairs) return false;
  for (int i = 0; i < kMaxPairs; ++i)
    if (even_[kMaxPairs + i]) return false;
  return true;
}

int Monomial::max_index() const {
  int best = 0;
  for (int i = 0; i < kMaxPairs; ++i) {
    if (even_[i] || even_[kMaxPairs + i] || ((odd_ >> i) & 1u) ||
        ((odd_ >> (kMaxPairs + i)) & 1u))
      best = i + 1;
  }
  return best;
}

std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) {
  if (a.odd_ & b.odd_) return std::nullopt;
  // Sorting the concatenation a.odd * b.odd: every pair (u in a, v in b) with
  // u after v in the canonical order is one transposition.
  int swaps = 0;
  for (std::uint32_t rest = b.odd_; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    swaps += std::popcount(a.odd_ >> (v + 1));
  }
  Monomial out;
  for (std::size_t i = 0; i < out.even_.size(); ++i) {
    const unsigned sum = unsigned(a.even_[i]) + b.even_[i];
    if (sum > std::numeric_limits<std::uint16_t>::max())
      throw InvalidArgument("exponent overflow in monomial product");
    out.even_[i] = static_cast<std::uint16_t>(sum);
  }
  out.odd_ = a.odd_ | b.odd_;
  return std::make_pair(swaps % 2 ? -1 : 1, out);
}

std::optional<std::pair<int, Monomial>> remove_generator(GeneratorId g, const Monomial& m) {
  check_range(g);
  Monomial out = m;
  if (is_odd(g.kind)) {
    const int bit = odd_bit(g);
    if (!((m.odd_ >> bit) & 1u)) return std::nullopt;
    const int before = std::popcount(m.odd_ & ((1u << bit) - 1));
    out.odd_ &= ~(1u << bit);
    return std::make_pair(before % 2 ? -1 : 1, out);
  }
  const int slot = even_slot(g);
  const int e = m.even_[slot];
  if (e == 0) return std::nullopt;
  out.even_[slot] = static_cast<std::uint16_t>(e - 1);
  return std::make_pair(e, out);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const MultiDegree da = a.degrees();
  const MultiDegree db = b.degrees();
  if (da.total() != db.total()) return da.total() < db.total();
  if (da.formdeg() != db.formdeg()) return da.formdeg() < db.formdeg();
  const auto& ea = a.even_exponents();
  const auto& eb = b.even_exponents();
  if (ea != eb) return eb < ea;
  return a.odd_mask() < b.odd_mask();
}

}  // namespace bvf
