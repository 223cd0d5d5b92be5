#pragma once

// The absorbing/primary predicate hierarchy with witness extraction.
//
// Every 1-absorbing notion quantifies over nonunit elements of the ring;
// δ-primary, δ-semiprimary and both 2-absorbing notions quantify over all
// elements. Witnesses are the lexicographically smallest counterexample in
// element-index order.

#include <array>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/expansion.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

struct Verdict {
  bool holds = true;
  /// Counterexample elements when holds is false: (a, b) or (a, b, c).
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return holds; }

  static Verdict fail(std::vector<Element> w) { return Verdict{false, std::move(w)}; }
};

/// Counterexample to the ideal-wise form: proper ideals I1, I2, I3 (lattice
/// indices) with I1I2I3 ⊆ I, I1I2 ⊄ I and I3 ⊄ δ(I).
struct IdealwiseVerdict {
  bool holds = true;
  std::array<std::size_t, 3> ideals{};
  explicit operator bool() const noexcept { return holds; }
};

enum class Predicate {
  Prime,
  Maximal,
  Primary,
  TwoAbsorbing,
  OneAbsorbingPrime,
  OneAbsorbingPrimary,
  DeltaPrimary,
  DeltaSemiprimary,
  OneAbsorbingDeltaPrimary,
  TwoAbsorbingDeltaPrimary,
};

inline constexpr std::array<Predicate, 10> kAllPredicates = {
    Predicate::Prime,           Predicate::Maximal,          Predicate::Primary,
    Predicate::TwoAbsorbing,    Predicate::OneAbsorbingPrime, Predicate::OneAbsorbingPrimary,
    Predicate::DeltaPrimary,    Predicate::DeltaSemiprimary, Predicate::OneAbsorbingDeltaPrimary,
    Predicate::TwoAbsorbingDeltaPrimary,
};

std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);
bool depends_on_delta(Predicate p);

// ---------------------------------------------------------------------------
// Ideal-level API. Every function throws PreconditionError for the whole ring.

Verdict is_delta_primary(const Ideal& ideal, const ExpansionFunction& delta);
Verdict is_delta_semiprimary(const Ideal& ideal, const ExpansionFunction& delta);
Verdict is_1_absorbing_prime(const Ideal& ideal);
Verdict is_1_absorbing_delta_primary(const Ideal& ideal, const ExpansionFunction& delta);
Verdict is_2_absorbing(const Ideal& ideal);
Verdict is_2_absorbing_delta_primary(const Ideal& ideal, const ExpansionFunction& delta);
/// ab ∈ I or c ∈ √I for nonunits; implemented directly on the radical.
Verdict is_1_absorbing_primary(const Ideal& ideal);
/// I1I2I3 ⊆ I ⇒ I1I2 ⊆ I or I3 ⊆ δ(I) over proper ideals.
IdealwiseVerdict is_1_absorbing_delta_primary_idealwise(const Ideal& ideal, const ExpansionFunction& delta);

/// δ(I) is a prime ideal for every 1-absorbing δ-primary I. Witness: first such I.
PropertyCheck is_prime_expansion(const ExpansionFunction& delta);

// ---------------------------------------------------------------------------
// Lattice-indexed kernels. Results for δ-dependent predicates depend only on
// the pair (I, δ(I)), written (ideal, expanded).

Verdict delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded);
Verdict delta_semiprimary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded);
Verdict one_absorbing_delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded);
Verdict two_absorbing_delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded);

struct IdealFacts {
  Verdict prime;
  Verdict maximal;
  Verdict primary;
  Verdict two_absorbing;
  Verdict one_absorbing_prime;
  Verdict one_absorbing_primary;
};

struct DeltaFacts {
  Verdict delta_primary;
  Verdict delta_semiprimary;
  Verdict one_absorbing_delta_primary;
  Verdict two_absorbing_delta_primary;
};

/// Per-ring memo of predicate results keyed by lattice indices. Thread-safe;
/// each entry is computed at most once per key observed by callers.
class RingAnalysis {
 public:
  explicit RingAnalysis(RingPtr ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const FiniteRing& ring() const noexcept { return *ring_; }
  const IdealLattice& lattice() const noexcept { return *lattice_; }

  bool is_local() const noexcept { return maximal_.size() == 1; }
  const std::vector<std::size_t>& maximal() const noexcept { return maximal_; }
  std::size_t jacobson() const noexcept { return jacobson_; }

  const IdealFacts& ideal_facts(std::size_t ideal) const;
  const DeltaFacts& delta_facts(std::size_t ideal, std::size_t expanded) const;
  const IdealwiseVerdict& idealwise(std::size_t ideal, std::size_t expanded) const;

  const Verdict& verdict(Predicate p, std::size_t ideal, std::size_t expanded) const;
  bool holds(Predicate p, std::size_t ideal, std::size_t expanded) const { return verdict(p, ideal, expanded).holds; }

 private:
  // For each proper I3 (by lattice index): the smallest (I1, I2) with
  // I1I2 ⊄ I and I1I2I3 ⊆ I, if any.
  using FirstPairs = std::vector<std::optional<std::pair<std::size_t, std::size_t>>>;
  const FirstPairs& first_pairs(std::size_t ideal) const;

  RingPtr ring_;
  const IdealLattice* lattice_;
  std::vector<std::size_t> maximal_;
  std::size_t jacobson_ = 0;

  mutable std::mutex mutex_;
  mutable std::map<std::size_t, IdealFacts> ideal_facts_;
  mutable std::map<std::pair<std::size_t, std::size_t>, DeltaFacts> delta_facts_;
  mutable std::map<std::size_t, FirstPairs> first_pairs_;
  mutable std::map<std::pair<std::size_t, std::size_t>, IdealwiseVerdict> idealwise_;
};

// ---------------------------------------------------------------------------

struct ClassificationRow {
  std::size_t ideal = 0;
  std::size_t expanded = 0;
  std::array<Verdict, kAllPredicates.size()> values;
};

/// One row per proper ideal, in lattice order.
std::vector<ClassificationRow> classify(const FiniteRing& ring, const ExpansionFunction& delta);
std::vector<ClassificationRow> classify(const RingAnalysis& analysis, const ExpansionFunction& delta);

}  // namespace ringlab
