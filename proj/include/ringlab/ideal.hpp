#pragma once

// Ideals of a finite ring, the full ideal lattice, ideal arithmetic and the
// classical ideal predicates.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A subset of a ring closed under addition and multiplication by ring elements.
///
/// An Ideal keeps a non-owning pointer to its ring; the ring (held through a
/// RingPtr) must outlive it.
class Ideal {
 public:
  /// Checks the ideal axioms and throws PreconditionError if they fail.
  static Ideal from_members(const FiniteRing& ring, ElementSet members);
  /// No axiom check; for sets already known to be ideals.
  static Ideal trusted(const FiniteRing& ring, ElementSet members) { return Ideal(ring, std::move(members)); }

  const FiniteRing& ring() const noexcept { return *ring_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Element e) const noexcept { return members_.contains(e.index); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_proper() const noexcept { return !members_.contains(ring_->one().index); }
  bool is_zero() const noexcept { return members_.count() == 1; }
  bool is_subset_of(const Ideal& other) const;

  std::vector<std::uint32_t> member_list() const { return members_.to_vector(); }
  /// "(g)" with the smallest single generator when principal, otherwise a
  /// greedy generating set "(g1,g2,...)". Elements print by ring name.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  Ideal(const FiniteRing& ring, ElementSet members) : ring_(&ring), members_(std::move(members)) {}

  const FiniteRing* ring_;
  ElementSet members_;
};

/// Does the subset satisfy the ideal axioms (0 in S, S+S in S, R·S in S)?
bool satisfies_ideal_axioms(const FiniteRing& ring, const ElementSet& subset);

/// The complete ideal lattice of a ring in canonical order: by cardinality, then
/// by bitset value. Index 0 is the zero ideal, the last index the whole ring.
class IdealLattice {
 public:
  explicit IdealLattice(const FiniteRing& ring);

  const FiniteRing& ring() const noexcept { return *ring_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  /// Indices of proper ideals, ascending.
  const std::vector<std::size_t>& proper() const noexcept { return proper_; }

  std::size_t zero_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return ideals_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  /// Throws RingMismatch if the ideal belongs to another ring.
  std::size_t index_of(const Ideal& ideal) const;

  /// ideal[small] ⊆ ideal[big]
  bool contains(std::size_t big, std::size_t small) const noexcept { return contain_[big * size() + small]; }
  std::size_t principal(std::uint32_t generator) const noexcept { return principal_[generator]; }

  /// (I : x) as an element set.
  const ElementSet& colon(std::size_t ideal, std::uint32_t x) const noexcept {
    return colon_[ideal * ring_->order() + x];
  }

  std::size_t sum(std::size_t i, std::size_t j) const;
  std::size_t intersection(std::size_t i, std::size_t j) const;
  /// Memoized product table (compute-once).
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t radical(std::size_t i) const noexcept { return radical_[i]; }

  std::vector<std::size_t> maximal() const;
  bool is_maximal(std::size_t i) const;
  bool is_prime(std::size_t i) const;

 private:
  void ensure_products() const;

  const FiniteRing* ring_;
  std::vector<Ideal> ideals_;
  std::vector<std::size_t> proper_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<bool> contain_;
  std::vector<std::size_t> principal_;
  std::vector<ElementSet> colon_;
  std::vector<std::size_t> radical_;

  mutable std::once_flag products_once_;
  mutable std::vector<std::size_t> products_;
};

/// Smallest ideal containing gens.
Ideal span(const FiniteRing& ring, const std::vector<Element>& gens);
/// All ideals in canonical lattice order.
std::vector<Ideal> all_ideals(const FiniteRing& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : d) = {x : dx ∈ I}
Ideal colon(const Ideal& ideal, Element d);
/// {x : x^k ∈ I for some k <= order}
Ideal radical(const Ideal& ideal);
/// xI = {x·i : i ∈ I}
Ideal scale(Element x, const Ideal& ideal);
Ideal whole_ring(const FiniteRing& ring);
Ideal zero_ideal(const FiniteRing& ring);

// Predicates reject the whole ring with PreconditionError where properness is required.
bool is_prime(const Ideal& ideal);
bool is_maximal(const Ideal& ideal);
/// ab ∈ I ⇒ a ∈ I or b ∈ √I
bool is_primary(const Ideal& ideal);
bool is_principal(const Ideal& ideal);
bool is_radical_ideal(const Ideal& ideal);
/// x ≠ 0 and (x) is a proper prime ideal.
bool is_prime_element(const FiniteRing& ring, Element x);

// Ring-level structure computed from the lattice.
std::vector<Ideal> maximal_ideals(const FiniteRing& ring);
Ideal jacobson_radical(const FiniteRing& ring);
/// Exactly one maximal ideal.
bool is_local(const FiniteRing& ring);
/// Independent route: the nonunits form an ideal.
bool nonunits_form_ideal(const FiniteRing& ring);
bool is_chained(const FiniteRing& ring);
bool is_field(const FiniteRing& ring);
std::vector<Ideal> spectrum(const FiniteRing& ring);

}  // namespace ringlab
