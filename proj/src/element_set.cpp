#include "ringlab/element_set.hpp"

#include <bit>

namespace ringlab {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<std::uint32_t>(i));
  return s;
}

ElementSet ElementSet::of(std::size_t universe, const std::vector<std::uint32_t>& members) {
  ElementSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::uint32_t ElementSet::next(std::uint32_t from) const noexcept {
  if (from >= universe_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits != 0) return static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return npos;
    bits = words_[w];
  }
}

std::uint32_t ElementSet::first_outside(const ElementSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t bits = words_[w] & ~other.words_[w];
    if (bits != 0) return static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return npos;
}

std::uint32_t ElementSet::first_masked_outside(const ElementSet& mask, const ElementSet& excluded) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t bits = words_[w] & mask.words_[w] & ~excluded.words_[w];
    if (bits != 0) return static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return npos;
}

std::uint32_t ElementSet::first_outside_both(const ElementSet& a, const ElementSet& b) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t bits = words_[w] & ~a.words_[w] & ~b.words_[w];
    if (bits != 0) return static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return npos;
}

std::vector<std::uint32_t> ElementSet::to_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  return full(universe_) - *this;
}

std::strong_ordering ElementSet::compare_value(const ElementSet& a, const ElementSet& b) noexcept {
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

}  // namespace ringlab
