#include "ringlab/predicates.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

constexpr std::array<std::string_view, kAllPredicates.size()> kNames = {
    "prime",          "maximal",           "primary",           "2abs",
    "1abs-prime",     "1abs-primary",      "delta-primary",     "delta-semiprimary",
    "1abs-delta-primary", "2abs-delta-primary",
};

void require_proper(const Ideal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("predicate requires a proper ideal");
}

void require_same(const Ideal& ideal, const ExpansionFunction& delta) {
  if (&ideal.ring() != &delta.ring()) throw RingMismatch("ideal and expansion belong to different rings");
}

void require_proper_index(const IdealLattice& lattice, std::size_t ideal) {
  if (ideal == lattice.whole_index()) throw PreconditionError("predicate requires a proper ideal");
}

Element E(std::uint32_t i) { return Element{i}; }

// Pairs (a, b) over all elements with ab ∈ I, a ∉ I, b ∉ target.
Verdict pair_scan(const FiniteRing& ring, const ElementSet& ideal, const ElementSet& skip_a, const ElementSet& target) {
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    if (skip_a.contains(a)) continue;
    auto row = ring.mul_row(a);
    for (std::uint32_t b = 0; b < ring.order(); ++b)
      if (ideal.contains(row[b]) && !target.contains(b)) return Verdict::fail({E(a), E(b)});
  }
  return {};
}

}  // namespace

std::string_view predicate_name(Predicate p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAllPredicates[i];
  return std::nullopt;
}

bool depends_on_delta(Predicate p) {
  switch (p) {
    case Predicate::DeltaPrimary:
    case Predicate::DeltaSemiprimary:
    case Predicate::OneAbsorbingDeltaPrimary:
    case Predicate::TwoAbsorbingDeltaPrimary:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Colon-table kernels.

Verdict delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded) {
  require_proper_index(lattice, ideal);
  const auto& I = lattice[ideal].members();
  const auto& D = lattice[expanded].members();
  for (std::uint32_t a = 0; a < lattice.ring().order(); ++a) {
    if (I.contains(a)) continue;
    const auto b = lattice.colon(ideal, a).first_outside(D);
    if (b != ElementSet::npos) return Verdict::fail({E(a), E(b)});
  }
  return {};
}

Verdict delta_semiprimary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded) {
  require_proper_index(lattice, ideal);
  const auto& D = lattice[expanded].members();
  for (std::uint32_t a = 0; a < lattice.ring().order(); ++a) {
    if (D.contains(a)) continue;
    const auto b = lattice.colon(ideal, a).first_outside(D);
    if (b != ElementSet::npos) return Verdict::fail({E(a), E(b)});
  }
  return {};
}

Verdict one_absorbing_delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded) {
  require_proper_index(lattice, ideal);
  const auto& ring = lattice.ring();
  const auto& I = lattice[ideal].members();
  const auto& D = lattice[expanded].members();
  const auto& N = ring.nonunit_set();
  constexpr std::uint32_t unknown = ElementSet::npos - 1;
  // bad[p]: smallest nonunit c with pc ∈ I and c ∉ δ(I), per product p.
  std::vector<std::uint32_t> bad(ring.order(), unknown);
  for (auto a : ring.nonunit_list()) {
    auto row = ring.mul_row(a);
    for (auto b : ring.nonunit_list()) {
      const auto p = row[b];
      if (I.contains(p)) continue;
      if (bad[p] == unknown) bad[p] = lattice.colon(ideal, p).first_masked_outside(N, D);
      if (bad[p] != ElementSet::npos) return Verdict::fail({E(a), E(b), E(bad[p])});
    }
  }
  return {};
}

Verdict two_absorbing_delta_primary_at(const IdealLattice& lattice, std::size_t ideal, std::size_t expanded) {
  require_proper_index(lattice, ideal);
  const auto& ring = lattice.ring();
  const auto& I = lattice[ideal].members();
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    auto row = ring.mul_row(a);
    const auto& Da = lattice.colon(expanded, a);
    for (std::uint32_t b = 0; b < ring.order(); ++b) {
      const auto p = row[b];
      if (I.contains(p)) continue;
      const auto c = lattice.colon(ideal, p).first_outside_both(Da, lattice.colon(expanded, b));
      if (c != ElementSet::npos) return Verdict::fail({E(a), E(b), E(c)});
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Direct definitional scans for the δ-free notions.

Verdict is_1_absorbing_prime(const Ideal& ideal) {
  require_proper(ideal);
  const auto& ring = ideal.ring();
  const auto& I = ideal.members();
  const auto& N = ring.nonunit_list();
  for (auto a : N)
    for (auto b : N) {
      const Element ab = ring.mul(E(a), E(b));
      if (I.contains(ab.index)) continue;
      for (auto c : N)
        if (I.contains(ring.mul(ab, E(c)).index) && !I.contains(c)) return Verdict::fail({E(a), E(b), E(c)});
    }
  return {};
}

Verdict is_1_absorbing_primary(const Ideal& ideal) {
  require_proper(ideal);
  const auto& ring = ideal.ring();
  const auto& I = ideal.members();
  const Ideal rad = radical(ideal);
  const auto& N = ring.nonunit_list();
  for (auto a : N)
    for (auto b : N) {
      const Element ab = ring.mul(E(a), E(b));
      if (I.contains(ab.index)) continue;
      for (auto c : N)
        if (I.contains(ring.mul(ab, E(c)).index) && !rad.contains(E(c))) return Verdict::fail({E(a), E(b), E(c)});
    }
  return {};
}

Verdict is_2_absorbing(const Ideal& ideal) {
  require_proper(ideal);
  const auto& ring = ideal.ring();
  const auto& I = ideal.members();
  const auto n = static_cast<std::uint32_t>(ring.order());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const Element ab = ring.mul(E(a), E(b));
      if (I.contains(ab.index)) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (!I.contains(ring.mul(ab, E(c)).index)) continue;
        if (!I.contains(ring.mul(E(a), E(c)).index) && !I.contains(ring.mul(E(b), E(c)).index))
          return Verdict::fail({E(a), E(b), E(c)});
      }
    }
  return {};
}

Verdict is_delta_primary(const Ideal& ideal, const ExpansionFunction& delta) {
  require_same(ideal, delta);
  require_proper(ideal);
  const auto& lat = ideal.ring().lattice();
  const auto i = lat.index_of(ideal);
  return delta_primary_at(lat, i, delta.at(i));
}

Verdict is_delta_semiprimary(const Ideal& ideal, const ExpansionFunction& delta) {
  require_same(ideal, delta);
  require_proper(ideal);
  const auto& lat = ideal.ring().lattice();
  const auto i = lat.index_of(ideal);
  return delta_semiprimary_at(lat, i, delta.at(i));
}

Verdict is_1_absorbing_delta_primary(const Ideal& ideal, const ExpansionFunction& delta) {
  require_same(ideal, delta);
  require_proper(ideal);
  const auto& lat = ideal.ring().lattice();
  const auto i = lat.index_of(ideal);
  return one_absorbing_delta_primary_at(lat, i, delta.at(i));
}

Verdict is_2_absorbing_delta_primary(const Ideal& ideal, const ExpansionFunction& delta) {
  require_same(ideal, delta);
  require_proper(ideal);
  const auto& lat = ideal.ring().lattice();
  const auto i = lat.index_of(ideal);
  return two_absorbing_delta_primary_at(lat, i, delta.at(i));
}

IdealwiseVerdict is_1_absorbing_delta_primary_idealwise(const Ideal& ideal, const ExpansionFunction& delta) {
  require_same(ideal, delta);
  require_proper(ideal);
  const auto& lat = ideal.ring().lattice();
  const auto i = lat.index_of(ideal);
  const auto d = delta.at(i);
  const auto& P = lat.proper();
  for (auto i1 : P)
    for (auto i2 : P) {
      const auto prod12 = lat.product(i1, i2);
      if (lat.contains(i, prod12)) continue;
      for (auto i3 : P)
        if (lat.contains(i, lat.product(prod12, i3)) && !lat.contains(d, i3)) return IdealwiseVerdict{false, {i1, i2, i3}};
    }
  return {};
}

PropertyCheck is_prime_expansion(const ExpansionFunction& delta) {
  const auto& lat = delta.ring().lattice();
  for (auto i : lat.proper()) {
    if (!one_absorbing_delta_primary_at(lat, i, delta.at(i))) continue;
    if (!lat.is_prime(delta.at(i))) return PropertyCheck{false, i, {}, {}};
  }
  return {};
}

// ---------------------------------------------------------------------------

RingAnalysis::RingAnalysis(RingPtr ring) : ring_(std::move(ring)), lattice_(&ring_->lattice()) {
  maximal_ = lattice_->maximal();
  ElementSet jac = ElementSet::full(ring_->order());
  for (auto m : maximal_) jac &= (*lattice_)[m].members();
  jacobson_ = *lattice_->find(jac);
}

const IdealFacts& RingAnalysis::ideal_facts(std::size_t ideal) const {
  {
    std::lock_guard lock(mutex_);
    auto it = ideal_facts_.find(ideal);
    if (it != ideal_facts_.end()) return it->second;
  }
  const auto& lat = *lattice_;
  require_proper_index(lat, ideal);
  const Ideal& I = lat[ideal];
  IdealFacts f;
  f.prime = pair_scan(*ring_, I.members(), I.members(), I.members());
  f.maximal.holds = lat.is_maximal(ideal);
  f.primary = pair_scan(*ring_, I.members(), I.members(), lat[lat.radical(ideal)].members());
  f.two_absorbing = is_2_absorbing(I);
  f.one_absorbing_prime = is_1_absorbing_prime(I);
  f.one_absorbing_primary = is_1_absorbing_primary(I);
  std::lock_guard lock(mutex_);
  return ideal_facts_.emplace(ideal, std::move(f)).first->second;
}

const DeltaFacts& RingAnalysis::delta_facts(std::size_t ideal, std::size_t expanded) const {
  const auto key = std::make_pair(ideal, expanded);
  {
    std::lock_guard lock(mutex_);
    auto it = delta_facts_.find(key);
    if (it != delta_facts_.end()) return it->second;
  }
  const auto& lat = *lattice_;
  DeltaFacts f;
  f.delta_primary = delta_primary_at(lat, ideal, expanded);
  f.delta_semiprimary = delta_semiprimary_at(lat, ideal, expanded);
  f.one_absorbing_delta_primary = one_absorbing_delta_primary_at(lat, ideal, expanded);
  f.two_absorbing_delta_primary = two_absorbing_delta_primary_at(lat, ideal, expanded);
  std::lock_guard lock(mutex_);
  return delta_facts_.emplace(key, std::move(f)).first->second;
}

const RingAnalysis::FirstPairs& RingAnalysis::first_pairs(std::size_t ideal) const {
  {
    std::lock_guard lock(mutex_);
    auto it = first_pairs_.find(ideal);
    if (it != first_pairs_.end()) return it->second;
  }
  const auto& lat = *lattice_;
  FirstPairs fp(lat.size());
  const auto& P = lat.proper();
  for (auto i1 : P)
    for (auto i2 : P) {
      const auto prod12 = lat.product(i1, i2);
      if (lat.contains(ideal, prod12)) continue;
      for (auto i3 : P)
        if (!fp[i3] && lat.contains(ideal, lat.product(prod12, i3))) fp[i3] = std::make_pair(i1, i2);
    }
  std::lock_guard lock(mutex_);
  return first_pairs_.emplace(ideal, std::move(fp)).first->second;
}

const IdealwiseVerdict& RingAnalysis::idealwise(std::size_t ideal, std::size_t expanded) const {
  const auto key = std::make_pair(ideal, expanded);
  {
    std::lock_guard lock(mutex_);
    auto it = idealwise_.find(key);
    if (it != idealwise_.end()) return it->second;
  }
  require_proper_index(*lattice_, ideal);
  const auto& fp = first_pairs(ideal);
  IdealwiseVerdict v;
  // The lexicographically smallest counterexample triple is the minimum of
  // (first pair of I3, I3) over the offending I3.
  for (auto i3 : lattice_->proper()) {
    if (!fp[i3] || lattice_->contains(expanded, i3)) continue;
    const std::array<std::size_t, 3> t{fp[i3]->first, fp[i3]->second, i3};
    if (v.holds || t < v.ideals) {
      v.holds = false;
      v.ideals = t;
    }
  }
  std::lock_guard lock(mutex_);
  return idealwise_.emplace(key, v).first->second;
}

const Verdict& RingAnalysis::verdict(Predicate p, std::size_t ideal, std::size_t expanded) const {
  switch (p) {
    case Predicate::Prime: return ideal_facts(ideal).prime;
    case Predicate::Maximal: return ideal_facts(ideal).maximal;
    case Predicate::Primary: return ideal_facts(ideal).primary;
    case Predicate::TwoAbsorbing: return ideal_facts(ideal).two_absorbing;
    case Predicate::OneAbsorbingPrime: return ideal_facts(ideal).one_absorbing_prime;
    case Predicate::OneAbsorbingPrimary: return ideal_facts(ideal).one_absorbing_primary;
    case Predicate::DeltaPrimary: return delta_facts(ideal, expanded).delta_primary;
    case Predicate::DeltaSemiprimary: return delta_facts(ideal, expanded).delta_semiprimary;
    case Predicate::OneAbsorbingDeltaPrimary: return delta_facts(ideal, expanded).one_absorbing_delta_primary;
    case Predicate::TwoAbsorbingDeltaPrimary: return delta_facts(ideal, expanded).two_absorbing_delta_primary;
  }
  throw PreconditionError("unknown predicate");
}

std::vector<ClassificationRow> classify(const RingAnalysis& analysis, const ExpansionFunction& delta) {
  if (&analysis.ring() != &delta.ring()) throw RingMismatch("classify: expansion belongs to another ring");
  std::vector<ClassificationRow> rows;
  for (auto i : analysis.lattice().proper()) {
    ClassificationRow row;
    row.ideal = i;
    row.expanded = delta.at(i);
    for (std::size_t k = 0; k < kAllPredicates.size(); ++k) row.values[k] = analysis.verdict(kAllPredicates[k], i, row.expanded);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ClassificationRow> classify(const FiniteRing& ring, const ExpansionFunction& delta) {
  if (&ring != &delta.ring()) throw RingMismatch("classify: expansion belongs to another ring");
  return classify(RingAnalysis(delta.ring_ptr()), delta);
}

}  // namespace ringlab
