#pragma once

// Expansion functions on a ring's ideal lattice: I ⊆ δ(I) and J ⊆ I ⇒ δ(J) ⊆ δ(I).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// First violated axiom. Axiom 1: ideal ⊄ δ(ideal) (other == ideal).
/// Axiom 2: other ⊆ ideal but δ(other) ⊄ δ(ideal).
struct AxiomViolation {
  int axiom = 0;
  std::size_t ideal = 0;
  std::size_t other = 0;
};

/// Scans lattice indices in canonical order; for each I checks axiom 1, then
/// axiom 2 against every J ⊆ I in order.
std::optional<AxiomViolation> find_axiom_violation(const FiniteRing& ring, const std::vector<std::size_t>& table);

/// A validated expansion function, stored as a table over canonical lattice indices.
class ExpansionFunction {
 public:
  /// Throws ExpansionError naming the first violation.
  static ExpansionFunction from_table(RingPtr ring, std::vector<std::size_t> table, std::string label);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::size_t at(std::size_t ideal) const { return table_[ideal]; }
  const Ideal& operator()(const Ideal& ideal) const;

  /// Same ring and same table (labels are ignored).
  bool same_map(const ExpansionFunction& other) const noexcept {
    return ring_ == other.ring_ && table_ == other.table_;
  }

 private:
  ExpansionFunction(RingPtr ring, std::vector<std::size_t> table, std::string label)
      : ring_(std::move(ring)), table_(std::move(table)), label_(std::move(label)) {}

  RingPtr ring_;
  std::vector<std::size_t> table_;
  std::string label_;
};

struct ValidationResult {
  bool valid = true;
  std::optional<AxiomViolation> violation;
  explicit operator bool() const noexcept { return valid; }
};

ValidationResult validate(const FiniteRing& ring, const std::vector<std::size_t>& table);
ValidationResult validate(const ExpansionFunction& delta);

// Families. Labels match the expansion-spec language.
ExpansionFunction make_identity(const RingPtr& ring);            // "id"
ExpansionFunction make_radical(const RingPtr& ring);             // "rad"
ExpansionFunction make_plus_fixed(const RingPtr& ring, const Ideal& fixed);  // "plus:(gens)"
ExpansionFunction make_constant_ring(const RingPtr& ring);       // "full": δ(I) = R

/// Outcome of a whole-lattice property scan with the first counterexample.
struct PropertyCheck {
  bool holds = true;
  std::optional<std::size_t> ideal;
  std::optional<std::size_t> other_ideal;
  std::optional<Element> element;
  explicit operator bool() const noexcept { return holds; }
};

/// Condition (*): δ(I) ≠ R for every proper I.
PropertyCheck satisfies_star(const ExpansionFunction& delta);
/// δ(Jac(R)) = Jac(R)
PropertyCheck preserves_jacobson(const ExpansionFunction& delta);
/// δ(xI) = xδ(I) for every proper I and every x. The witness is the first (x, I) in
/// (element, lattice) order with xI ≠ (0), else the first with xI = (0).
PropertyCheck commutes_with_scaling(const ExpansionFunction& delta);
/// δ(I ∩ J) = δ(I) ∩ δ(J) for all pairs.
PropertyCheck is_intersection_preserving(const ExpansionFunction& delta);
/// δ(δ(I)) = δ(I)
bool is_idempotent_at(const ExpansionFunction& delta, std::size_t ideal);
/// √δ(I) = δ(√I)
bool radical_commutes_at(const ExpansionFunction& delta, std::size_t ideal);

// Induced expansions on constructed rings.

/// δ×(I1 × I2) = δ1(I1) × δ2(I2)
ExpansionFunction induced_product(const ExpansionFunction& left, const ExpansionFunction& right,
                                  const ProductRing& product);
/// δ̄(J/I) = δ(J)/I
ExpansionFunction induced_quotient(const ExpansionFunction& delta, const QuotientRing& quotient);

/// δ_S(J') = S⁻¹δ(contraction of J'), plus a per-ideal record of whether
/// δ_S(S⁻¹I) = S⁻¹δ(I) holds for ideals I with I ∩ S = ∅.
struct LocalizedExpansion {
  ExpansionFunction delta;
  std::vector<std::size_t> compatible;    // parent lattice indices where the equation holds
  std::vector<std::size_t> incompatible;  // parent lattice indices where it fails
};
LocalizedExpansion induced_localization(const ExpansionFunction& delta, const Localization& localization);

/// δ⋉(I⋉F) = δ(I)⋉E; ideals not of the form I⋉F map to δ(π(K))⋉E where π(K)
/// is the first projection.
ExpansionFunction induced_trivial_extension(const ExpansionFunction& delta, const TrivialExtension& extension);

/// f is a δγ-homomorphism: δ(f⁻¹(J)) = f⁻¹(γ(J)) for every ideal J of the codomain.
/// Returns the first codomain lattice index where it fails.
PropertyCheck is_delta_gamma_hom(const RingHom& f, const ExpansionFunction& delta, const ExpansionFunction& gamma);

}  // namespace ringlab
