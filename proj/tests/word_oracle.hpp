#pragma once

// Test-only reference algebra. Elements are lists of (coefficient, word)
// where a word is an un-normalized product of generators. Signs come from
// literally bubble-sorting words and from applying derivations position by
// position, so nothing here shares code with the bit-mask implementation.

#include <utility>
#include <vector>

#include "bvforms/superform.hpp"

namespace oracle {

using bvf::GeneratorId;
using bvf::GeneratorKind;
using bvf::Scalar;

using Word = std::vector<GeneratorId>;
using Element = std::vector<std::pair<Scalar, Word>>;

inline int parity(GeneratorId g) { return bvf::is_odd(g.kind) ? 1 : 0; }

inline int word_parity(const Word& w, std::size_t upto) {
  int s = 0;
  for (std::size_t i = 0; i < upto; ++i) s += parity(w[i]);
  return s % 2;
}

// Canonical rank: odd generators p1..pn then dx1..dxn; even ones sort first
// (their position is irrelevant to the sign).
inline int rank_of(GeneratorId g) {
  switch (g.kind) {
    case GeneratorKind::X: return 0 + g.index;
    case GeneratorKind::DP: return 100 + g.index;
    case GeneratorKind::P: return 200 + g.index;
    case GeneratorKind::DX: return 300 + g.index;
  }
  return 0;
}

// Bubble sort with a sign flip on every swap of two odd generators.
inline bvf::SuperForm normalize(int n, const Element& e) {
  bvf::SuperForm out(n);
  for (auto [c, w] : e) {
    int sign = 1;
    for (std::size_t pass = 0; pass < w.size(); ++pass)
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rank_of(w[i]) > rank_of(w[i + 1])) {
          if (parity(w[i]) && parity(w[i + 1])) sign = -sign;
          std::swap(w[i], w[i + 1]);
        }
    bool vanishes = false;
    bvf::Monomial m;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (parity(w[i])) {
        if (m.contains(w[i])) vanishes = true;
        else m = m.with_exponent(w[i], 1);
      } else {
        m = m.with_exponent(w[i], m.exponent(w[i]) + 1);
      }
    }
    if (!vanishes) out.add_term(m, sign > 0 ? c : Scalar(-c));
  }
  return out;
}

// Word of a canonical monomial (even generators first, then odd ones in
// canonical order).
inline Word word_of(const bvf::Monomial& m, int n) {
  Word w;
  for (GeneratorKind k : {GeneratorKind::X, GeneratorKind::DP})
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e < m.exponent({k, i}); ++e) w.push_back({k, i});
  for (GeneratorKind k : {GeneratorKind::P, GeneratorKind::DX})
    for (int i = 1; i <= n; ++i)
      if (m.contains({k, i})) w.push_back({k, i});
  return w;
}

inline Element element_of(const bvf::SuperForm& f) {
  Element e;
  for (const auto& [m, c] : f.terms()) e.push_back({c, word_of(m, f.n())});
  return e;
}

inline Element product(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.push_back({ca * cb, w});
    }
  return out;
}

// Left derivation of parity |g|: hits each occurrence of g, picking up
// (-1)^{|g| * parity of the prefix}.
inline Element derivative(GeneratorId g, const Element& e) {
  Element out;
  for (const auto& [c, w] : e)
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!(w[i] == g)) continue;
      Word rest = w;
      rest.erase(rest.begin() + static_cast<long>(i));
      const int sign = (parity(g) && word_parity(w, i)) ? -1 : 1;
      out.push_back({sign > 0 ? c : Scalar(-c), rest});
    }
  return out;
}

// de Rham d as the odd derivation with x -> dx, p -> dp.
inline Element exterior_d(const Element& e) {
  Element out;
  for (const auto& [c, w] : e)
    for (std::size_t i = 0; i < w.size(); ++i) {
      GeneratorId replacement;
      if (w[i].kind == GeneratorKind::X) replacement = {GeneratorKind::DX, w[i].index};
      else if (w[i].kind == GeneratorKind::P) replacement = {GeneratorKind::DP, w[i].index};
      else continue;
      Word next = w;
      next[i] = replacement;
      const int sign = word_parity(w, i) ? -1 : 1;
      out.push_back({sign > 0 ? c : Scalar(-c), next});
    }
  return out;
}

inline bvf::SuperForm d(const bvf::SuperForm& f) { return normalize(f.n(), exterior_d(element_of(f))); }

inline bvf::SuperForm partial(GeneratorId g, const bvf::SuperForm& f) {
  return normalize(f.n(), derivative(g, element_of(f)));
}

inline bvf::SuperForm mul(const bvf::SuperForm& a, const bvf::SuperForm& b) {
  return normalize(a.n(), product(element_of(a), element_of(b)));
}

inline bvf::SuperForm delta(const bvf::SuperForm& f) {
  bvf::SuperForm out(f.n());
  for (int k = 1; k <= f.n(); ++k) out += partial(bvf::x(k), partial(bvf::p(k), f));
  return out;
}

}  // namespace oracle
