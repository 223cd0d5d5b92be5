#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ringlab {

/// Dynamic bitset over the element indices [0, universe) of one ring.
class ElementSet {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, const std::vector<std::uint32_t>& members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::uint32_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void insert(std::uint32_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::uint32_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }
  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;

  /// Smallest member >= from, or npos.
  std::uint32_t next(std::uint32_t from) const noexcept;
  std::uint32_t first() const noexcept { return next(0); }
  /// Smallest member of *this that is not in other, or npos.
  std::uint32_t first_outside(const ElementSet& other) const noexcept;
  /// Smallest member of *this ∩ mask that is not in excluded, or npos.
  std::uint32_t first_masked_outside(const ElementSet& mask, const ElementSet& excluded) const noexcept;
  /// Smallest member of *this in neither a nor b, or npos.
  std::uint32_t first_outside_both(const ElementSet& a, const ElementSet& b) const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator-=(const ElementSet& other) noexcept;
  ElementSet complement() const;

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Orders by the integer value of the bitset (element i has weight 2^i).
  static std::strong_ordering compare_value(const ElementSet& a, const ElementSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace ringlab
