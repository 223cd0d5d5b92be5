#pragma once

// Derived rings: direct products, quotients, trivial ring extensions A⋉E and
// localizations, together with their ideal-lattice correspondences.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Direct products

struct ProductRing {
  RingPtr ring;
  RingPtr left;
  RingPtr right;

  /// (a, b) is stored at index a + |R1|·b.
  Element encode(Element a, Element b) const {
    return Element{static_cast<std::uint32_t>(a.index + left->order() * b.index)};
  }
  std::pair<Element, Element> decode(Element e) const {
    return {Element{static_cast<std::uint32_t>(e.index % left->order())},
            Element{static_cast<std::uint32_t>(e.index / left->order())}};
  }

  /// Lattice index of I1 × I2 given lattice indices in the factors.
  std::size_t ideal_index(std::size_t left_ideal, std::size_t right_ideal) const;
  /// Factor lattice indices of an ideal of the product (every ideal is I1 × I2).
  std::pair<std::size_t, std::size_t> components(std::size_t ideal) const;

  RingHom projection_left() const;
  RingHom projection_right() const;
};

ProductRing make_product(const RingPtr& left, const RingPtr& right);

// ---------------------------------------------------------------------------
// Quotients

struct QuotientRing {
  RingPtr ring;
  RingPtr parent;
  ElementSet ideal;
  RingHom projection;
  /// Smallest parent element of each coset, indexed by quotient element.
  std::vector<std::uint32_t> representative;
  /// Whether a + I is a nonunit for every nonunit a (computed, never assumed).
  bool nonunit_preserving = false;

  /// Parent lattice index of the preimage of a quotient ideal.
  std::size_t lift_ideal(std::size_t quotient_ideal) const;
  /// Quotient lattice index of J/I for a parent ideal J (J need not contain I;
  /// the image of J is used).
  std::size_t push_ideal(std::size_t parent_ideal) const;
};

/// R/I for a proper ideal I. The label defaults to "<R>/(<gens>)".
QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal, std::string label = {});

// ---------------------------------------------------------------------------
// Modules and trivial ring extensions

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// A finite module E over a FiniteRing A, given by its addition table and the
/// action table A × E → E.
class FiniteModule {
  struct Token {};

 public:
  /// Validates the abelian group and module axioms; throws InvalidStructure.
  static ModulePtr create(RingPtr ring, std::size_t order, std::vector<std::uint32_t> add_table,
                          std::vector<std::uint32_t> action, std::uint32_t zero, std::vector<std::string> names,
                          std::string label);

  FiniteModule(Token, RingPtr ring, std::size_t order, std::vector<std::uint32_t> add_table,
               std::vector<std::uint32_t> action, std::uint32_t zero, std::vector<std::string> names,
               std::string label);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return order_; }
  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t add(std::uint32_t e, std::uint32_t f) const { return add_[e * order_ + f]; }
  std::uint32_t act(Element a, std::uint32_t e) const { return action_[a.index * order_ + e]; }
  const std::string& name(std::uint32_t e) const { return names_[e]; }
  /// Module part of a ring spec: "reg" or "quot:(gens)".
  const std::string& label() const noexcept { return label_; }

  bool is_submodule(const ElementSet& subset) const;
  /// Submodule generated by a set of module elements.
  ElementSet submodule_span(const ElementSet& gens) const;
  /// IE: the submodule generated by {a·e : a ∈ I, e ∈ E}.
  ElementSet ideal_times_module(const Ideal& ideal) const;
  /// All submodules, ordered by cardinality then bitset value.
  std::vector<ElementSet> submodules() const;

 private:
  RingPtr ring_;
  std::size_t order_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> action_;
  std::uint32_t zero_;
  std::vector<std::string> names_;
  std::string label_;
};

/// E = A acting on itself.
ModulePtr make_regular_module(const RingPtr& ring);
/// E = A/J.
ModulePtr make_quotient_module(const RingPtr& ring, const Ideal& ideal);

/// I⋉F is an ideal of A⋉E iff IE ⊆ F. Throws PreconditionError if F is not a submodule.
bool is_ideal_pair(const Ideal& ideal, const FiniteModule& module, const ElementSet& submodule);
/// (F : c) = {e ∈ E : c·e ∈ F}. Throws PreconditionError if F is not a submodule.
ElementSet module_colon(const FiniteModule& module, const ElementSet& submodule, Element c);

struct TrivialExtension {
  RingPtr ring;
  RingPtr base;
  ModulePtr module;

  /// (a, e) is stored at index a·|E| + e.
  Element encode(Element a, std::uint32_t e) const {
    return Element{static_cast<std::uint32_t>(a.index * module->order() + e)};
  }
  std::pair<Element, std::uint32_t> decode(Element x) const {
    return {Element{static_cast<std::uint32_t>(x.index / module->order())},
            static_cast<std::uint32_t>(x.index % module->order())};
  }

  /// {(a, e) : a ∈ I, e ∈ F} as an element set of A⋉E.
  ElementSet pair_set(const ElementSet& ideal, const ElementSet& submodule) const;
  /// Lattice index of I⋉F; throws PreconditionError unless IE ⊆ F.
  std::size_t pair_ideal(std::size_t base_ideal, const ElementSet& submodule) const;
  /// When ideal K of A⋉E has the form I⋉F, the base lattice index of I and F.
  std::optional<std::pair<std::size_t, ElementSet>> decompose(std::size_t ideal) const;
  /// Base lattice index of the first projection {a : (a, e) ∈ K}.
  std::size_t first_projection(std::size_t ideal) const;
};

TrivialExtension make_trivial_extension(const RingPtr& base, const ModulePtr& module);

// ---------------------------------------------------------------------------
// Localization

struct MultiplicativeSet {
  RingPtr ring;
  ElementSet members;

  /// Multiplicative closure of gens ∪ {1}. Throws PreconditionError when 0 ∈ S.
  static MultiplicativeSet generated_by(const RingPtr& ring, const std::vector<Element>& gens);
  /// R \ P for a prime ideal P.
  static MultiplicativeSet complement_of_prime(const RingPtr& ring, const Ideal& prime);

  /// Contains 1, is closed under products and avoids 0.
  bool is_valid() const;
  /// Greedy generating set in element order.
  std::vector<Element> generators() const;
};

/// S⁻¹R realized as R/ker with ker = {r : sr = 0 for some s ∈ S}.
struct Localization {
  RingPtr ring;
  RingPtr parent;
  MultiplicativeSet multiplicative_set;
  ElementSet kernel;
  QuotientRing quotient;

  const RingHom& canonical_map() const { return quotient.projection; }
  /// S⁻¹I as a lattice index of the localized ring.
  std::size_t extend(std::size_t parent_ideal) const { return quotient.push_ideal(parent_ideal); }
  /// Full preimage of a localized ideal.
  std::size_t contract(std::size_t local_ideal) const { return quotient.lift_ideal(local_ideal); }
  /// I ∩ S = ∅
  bool disjoint(std::size_t parent_ideal) const;
};

Localization localize(const RingPtr& ring, const MultiplicativeSet& set);

/// True when a label needs parentheses to be used as an operand of a product
/// or quotient in the ring-spec language.
bool has_top_level_product(const std::string& label);

}  // namespace ringlab
