#pragma once

// Finite commutative rings with identity, stored as dense operation tables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

/// An element of a FiniteRing, identified by its table index.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(Element, Element) = default;
};

class FiniteRing;
class IdealLattice;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
  struct Token {};

 public:
  /// Validates the tables (abelian group, commutativity, associativity, identity,
  /// distributivity, zero != one) and throws InvalidStructure on the first violation.
  static RingPtr create(std::string label, std::size_t order, std::vector<std::uint32_t> add_table,
                        std::vector<std::uint32_t> mul_table, std::uint32_t zero, std::uint32_t one,
                        std::vector<std::string> names = {});

  FiniteRing(Token, std::string label, std::size_t order, std::vector<std::uint32_t> add_table,
             std::vector<std::uint32_t> mul_table, std::uint32_t zero, std::uint32_t one,
             std::vector<std::string> names);
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;
  ~FiniteRing();

  const std::string& label() const noexcept { return label_; }
  std::size_t order() const noexcept { return order_; }
  Element zero() const noexcept { return Element{zero_}; }
  Element one() const noexcept { return Element{one_}; }

  /// Throws PreconditionError if e is not an element of this ring.
  void require(Element e) const;

  Element add(Element a, Element b) const { return Element{add_[a.index * order_ + b.index]}; }
  Element mul(Element a, Element b) const { return Element{mul_[a.index * order_ + b.index]}; }
  Element neg(Element a) const { return Element{neg_[a.index]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// n·1 for n >= 0.
  Element from_integer(long long n) const;
  Element power(Element a, std::size_t k) const;

  std::span<const std::uint32_t> add_row(std::uint32_t a) const {
    return {add_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const std::uint32_t> mul_row(std::uint32_t a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<std::uint32_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint32_t>& mul_table() const noexcept { return mul_; }

  bool is_unit(Element a) const noexcept { return units_.contains(a.index); }
  const ElementSet& unit_set() const noexcept { return units_; }
  const ElementSet& nonunit_set() const noexcept { return nonunits_; }
  /// Nonunits in increasing index order.
  const std::vector<std::uint32_t>& nonunit_list() const noexcept { return nonunit_list_; }

  const std::string& name(Element e) const { return names_[e.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Looks up an element by its printed name (whitespace-insensitive), or by a
  /// decimal integer n meaning n·1. Returns false if nothing matches.
  bool find_by_name(const std::string& text, Element& out) const;

  /// Memoized ideal lattice (compute-once, thread-safe).
  const IdealLattice& lattice() const;

  /// True when both rings have identical tables, identity elements and order.
  bool same_tables(const FiniteRing& other) const noexcept;

 private:
  std::string label_;
  std::size_t order_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::uint32_t zero_;
  std::uint32_t one_;
  std::vector<std::string> names_;
  ElementSet units_;
  ElementSet nonunits_;
  std::vector<std::uint32_t> nonunit_list_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<const IdealLattice> lattice_;
};

/// Z/nZ with label "Z<n>". Throws InvalidOrder for n < 2.
RingPtr make_zn(long long n);

/// Z_p[x]/(f) where coeffs lists the coefficients of f from the constant term
/// upwards. f must be monic of degree >= 1; p must be prime.
RingPtr make_poly_quotient(long long p, const std::vector<long long>& coeffs);

/// Canonical text of a polynomial over Z_p given low-to-high coefficients, e.g. "x^2+x+1".
std::string poly_to_string(const std::vector<long long>& coeffs);

bool is_prime_number(long long n);

/// units(R) as a sorted element list.
std::vector<Element> units(const FiniteRing& ring);
std::vector<Element> nonunits(const FiniteRing& ring);

}  // namespace ringlab
