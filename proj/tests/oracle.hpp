#pragma once

// Naive reference implementations that read only the raw operation tables.
// They share no code with the library's lattice, kernels or caches.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using Set = std::vector<bool>;
using Triple = std::array<std::uint32_t, 3>;
using Pair = std::array<std::uint32_t, 2>;

inline std::uint32_t add(const ringlab::FiniteRing& r, std::uint32_t a, std::uint32_t b) {
  return r.add_table()[a * r.order() + b];
}
inline std::uint32_t mul(const ringlab::FiniteRing& r, std::uint32_t a, std::uint32_t b) {
  return r.mul_table()[a * r.order() + b];
}

inline bool unit(const ringlab::FiniteRing& r, std::uint32_t a) {
  for (std::uint32_t b = 0; b < r.order(); ++b)
    if (mul(r, a, b) == r.one().index) return true;
  return false;
}

inline std::vector<std::uint32_t> nonunit_indices(const ringlab::FiniteRing& r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < r.order(); ++a)
    if (!unit(r, a)) out.push_back(a);
  return out;
}

inline Set to_set(const ringlab::FiniteRing& r, const std::vector<std::uint32_t>& members) {
  Set s(r.order(), false);
  for (auto m : members) s[m] = true;
  return s;
}

inline bool is_ideal(const ringlab::FiniteRing& r, const Set& s) {
  const auto n = r.order();
  if (!s[r.zero().index]) return false;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (!s[a]) continue;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (s[b] && !s[add(r, a, b)]) return false;
      if (!s[mul(r, a, b)]) return false;
    }
  }
  return true;
}

/// Every subset of the carrier that satisfies the ideal axioms, as sorted member lists.
inline std::vector<std::vector<std::uint32_t>> subset_filter_ideals(const ringlab::FiniteRing& r) {
  std::vector<std::vector<std::uint32_t>> out;
  const auto n = r.order();
  const std::uint32_t zero = r.zero().index;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> zero) & 1U)) continue;
    Set s(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
    if (!is_ideal(r, s)) continue;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < n; ++i)
      if (s[i]) members.push_back(i);
    out.push_back(std::move(members));
  }
  return out;
}

inline Set radical_of(const ringlab::FiniteRing& r, const Set& ideal) {
  Set out(r.order(), false);
  for (std::uint32_t a = 0; a < r.order(); ++a) {
    std::uint32_t p = a;
    for (std::size_t k = 0; k <= r.order(); ++k) {
      if (ideal[p]) {
        out[a] = true;
        break;
      }
      p = mul(r, p, a);
    }
  }
  return out;
}

/// abc ∈ I ⇒ ab ∈ I or c ∈ D, over nonunits a, b, c.
inline std::optional<Triple> one_absorbing(const ringlab::FiniteRing& r, const Set& I, const Set& D) {
  const auto nu = nonunit_indices(r);
  for (auto a : nu)
    for (auto b : nu)
      for (auto c : nu) {
        const auto ab = mul(r, a, b);
        if (I[mul(r, ab, c)] && !I[ab] && !D[c]) return Triple{a, b, c};
      }
  return std::nullopt;
}

/// ab ∈ I ⇒ a ∈ I or b ∈ D, over all elements.
inline std::optional<Pair> delta_primary(const ringlab::FiniteRing& r, const Set& I, const Set& D) {
  for (std::uint32_t a = 0; a < r.order(); ++a)
    for (std::uint32_t b = 0; b < r.order(); ++b)
      if (I[mul(r, a, b)] && !I[a] && !D[b]) return Pair{a, b};
  return std::nullopt;
}

/// ab ∈ I ⇒ a ∈ D or b ∈ D.
inline std::optional<Pair> delta_semiprimary(const ringlab::FiniteRing& r, const Set& I, const Set& D) {
  for (std::uint32_t a = 0; a < r.order(); ++a)
    for (std::uint32_t b = 0; b < r.order(); ++b)
      if (I[mul(r, a, b)] && !D[a] && !D[b]) return Pair{a, b};
  return std::nullopt;
}

/// abc ∈ I ⇒ ab ∈ I or ac ∈ D or bc ∈ D, over all elements.
inline std::optional<Triple> two_absorbing_delta_primary(const ringlab::FiniteRing& r, const Set& I, const Set& D) {
  for (std::uint32_t a = 0; a < r.order(); ++a)
    for (std::uint32_t b = 0; b < r.order(); ++b)
      for (std::uint32_t c = 0; c < r.order(); ++c) {
        const auto ab = mul(r, a, b);
        if (I[mul(r, ab, c)] && !I[ab] && !D[mul(r, a, c)] && !D[mul(r, b, c)]) return Triple{a, b, c};
      }
  return std::nullopt;
}

/// abc ∈ I ⇒ ab ∈ I or ac ∈ I or bc ∈ I.
inline std::optional<Triple> two_absorbing(const ringlab::FiniteRing& r, const Set& I) {
  return two_absorbing_delta_primary(r, I, I);
}

}  // namespace oracle
