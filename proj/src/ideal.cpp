#include "ringlab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

ElementSet principal_set(const FiniteRing& ring, std::uint32_t g) {
  ElementSet s(ring.order());
  for (auto v : ring.mul_row(g)) s.insert(v);
  return s;
}

// Sum of two additive subgroups: {a + b}.
ElementSet subgroup_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  ElementSet out(ring.order());
  a.for_each([&](std::uint32_t x) {
    auto row = ring.add_row(x);
    b.for_each([&](std::uint32_t y) { out.insert(row[y]); });
  });
  return out;
}

// Additive subgroup generated by a set (closed under + in a finite group).
ElementSet additive_closure(const FiniteRing& ring, const ElementSet& gens) {
  ElementSet out(ring.order());
  out.insert(ring.zero().index);
  std::vector<std::uint32_t> frontier{ring.zero().index};
  const auto g = gens.to_vector();
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      auto row = ring.add_row(x);
      for (auto y : g) {
        const auto s = row[y];
        if (!out.contains(s)) {
          out.insert(s);
          next.push_back(s);
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return ElementSet::compare_value(a, b) < 0;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (&a.ring() != &b.ring()) throw RingMismatch("ideals belong to different rings");
}

void require_proper(const Ideal& ideal, const char* what) {
  if (!ideal.is_proper()) throw PreconditionError(std::string(what) + " requires a proper ideal");
}

}  // namespace

bool satisfies_ideal_axioms(const FiniteRing& ring, const ElementSet& subset) {
  if (subset.universe() != ring.order()) return false;
  if (!subset.contains(ring.zero().index)) return false;
  const auto members = subset.to_vector();
  for (auto a : members) {
    auto add_row = ring.add_row(a);
    for (auto b : members)
      if (!subset.contains(add_row[b])) return false;
    auto mul_row = ring.mul_row(a);
    for (std::size_t r = 0; r < ring.order(); ++r)
      if (!subset.contains(mul_row[r])) return false;
  }
  return true;
}

Ideal Ideal::from_members(const FiniteRing& ring, ElementSet members) {
  if (!satisfies_ideal_axioms(ring, members)) throw PreconditionError("subset is not an ideal of " + ring.label());
  return Ideal(ring, std::move(members));
}

bool Ideal::is_subset_of(const Ideal& other) const {
  require_same_ring(*this, other);
  return members_.is_subset_of(other.members_);
}

std::string Ideal::to_string() const {
  const auto& lat = ring_->lattice();
  const auto self = lat.index_of(*this);
  std::string out = "(";
  bool found = false;
  members_.for_each([&](std::uint32_t g) {
    if (!found && lat.principal(g) == self) {
      out += ring_->name(Element{g});
      found = true;
    }
  });
  if (!found) {
    // Greedy generating set in element order.
    ElementSet acc(ring_->order());
    acc.insert(ring_->zero().index);
    bool first = true;
    members_.for_each([&](std::uint32_t g) {
      if (acc.contains(g)) return;
      acc = subgroup_sum(*ring_, acc, principal_set(*ring_, g));
      if (!first) out += ",";
      out += ring_->name(Element{g});
      first = false;
    });
  }
  return out + ")";
}

IdealLattice::IdealLattice(const FiniteRing& ring) : ring_(&ring) {
  const std::size_t n = ring.order();
  std::vector<ElementSet> principals;
  principals.reserve(n);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> distinct_principals;
  for (std::uint32_t g = 0; g < n; ++g) {
    principals.push_back(principal_set(ring, g));
    if (seen.insert(principals.back()).second) distinct_principals.push_back(principals.back());
  }

  // Every ideal of a finite ring is a finite sum of principal ideals.
  std::vector<ElementSet> found(distinct_principals.begin(), distinct_principals.end());
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    for (const auto& p : distinct_principals) {
      if (p.is_subset_of(found[i])) continue;
      ElementSet s = subgroup_sum(ring, found[i], p);
      if (seen.insert(s).second) {
        found.push_back(std::move(s));
        work.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);

  ideals_.reserve(found.size());
  for (auto& s : found) {
    index_.emplace(s, ideals_.size());
    ideals_.push_back(Ideal::trusted(ring, std::move(s)));
  }
  const std::size_t L = ideals_.size();
  for (std::size_t i = 0; i < L; ++i)
    if (ideals_[i].is_proper()) proper_.push_back(i);

  contain_.assign(L * L, false);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) contain_[i * L + j] = ideals_[j].members().is_subset_of(ideals_[i].members());

  principal_.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) principal_[g] = index_.at(principals[g]);

  colon_.reserve(L * n);
  for (std::size_t i = 0; i < L; ++i) {
    const auto& m = ideals_[i].members();
    for (std::uint32_t x = 0; x < n; ++x) {
      ElementSet c(n);
      auto row = ring.mul_row(x);
      for (std::uint32_t y = 0; y < n; ++y)
        if (m.contains(row[y])) c.insert(y);
      colon_.push_back(std::move(c));
    }
  }

  radical_.resize(L);
  for (std::size_t i = 0; i < L; ++i) {
    const auto& m = ideals_[i].members();
    ElementSet r(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      Element p = ring.one();
      for (std::size_t k = 1; k <= n; ++k) {
        p = ring.mul(p, Element{x});
        if (m.contains(p.index)) {
          r.insert(x);
          break;
        }
      }
    }
    radical_[i] = index_.at(r);
  }
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const {
  if (&ideal.ring() != ring_) throw RingMismatch("ideal belongs to a different ring");
  auto it = index_.find(ideal.members());
  if (it == index_.end()) throw PreconditionError("set is not an ideal of " + ring_->label());
  return it->second;
}

std::size_t IdealLattice::sum(std::size_t i, std::size_t j) const {
  return index_.at(subgroup_sum(*ring_, ideals_[i].members(), ideals_[j].members()));
}

std::size_t IdealLattice::intersection(std::size_t i, std::size_t j) const {
  return index_.at(ideals_[i].members() & ideals_[j].members());
}

void IdealLattice::ensure_products() const {
  std::call_once(products_once_, [this] {
    const std::size_t L = size();
    std::vector<std::size_t> table(L * L);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i; j < L; ++j) {
        ElementSet gens(ring_->order());
        const auto& a = ideals_[i].members();
        const auto& b = ideals_[j].members();
        a.for_each([&](std::uint32_t x) {
          auto row = ring_->mul_row(x);
          b.for_each([&](std::uint32_t y) { gens.insert(row[y]); });
        });
        const std::size_t k = index_.at(additive_closure(*ring_, gens));
        table[i * L + j] = k;
        table[j * L + i] = k;
      }
    products_ = std::move(table);
  });
}

std::size_t IdealLattice::product(std::size_t i, std::size_t j) const {
  ensure_products();
  return products_[i * size() + j];
}

std::vector<std::size_t> IdealLattice::maximal() const {
  std::vector<std::size_t> out;
  for (auto i : proper_)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

bool IdealLattice::is_maximal(std::size_t i) const {
  if (i == whole_index()) return false;
  for (auto j : proper_)
    if (j != i && contains(j, i)) return false;
  return true;
}

bool IdealLattice::is_prime(std::size_t i) const {
  if (i == whole_index()) return false;
  const auto& m = ideals_[i].members();
  for (std::uint32_t a = 0; a < ring_->order(); ++a) {
    if (m.contains(a)) continue;
    if (!colon(i, a).is_subset_of(m)) return false;
  }
  return true;
}

// FiniteRing members that need the complete IdealLattice type.
FiniteRing::~FiniteRing() = default;

const IdealLattice& FiniteRing::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_ = std::make_unique<const IdealLattice>(*this); });
  return *lattice_;
}

Ideal span(const FiniteRing& ring, const std::vector<Element>& gens) {
  ElementSet acc(ring.order());
  acc.insert(ring.zero().index);
  for (auto g : gens) {
    ring.require(g);
    if (acc.contains(g.index)) continue;
    acc = subgroup_sum(ring, acc, principal_set(ring, g.index));
  }
  return Ideal::trusted(ring, std::move(acc));
}

std::vector<Ideal> all_ideals(const FiniteRing& ring) { return ring.lattice().ideals(); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring(), subgroup_sum(a.ring(), a.members(), b.members()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  ElementSet gens(ring.order());
  a.members().for_each([&](std::uint32_t x) {
    auto row = ring.mul_row(x);
    b.members().for_each([&](std::uint32_t y) { gens.insert(row[y]); });
  });
  return Ideal::trusted(ring, additive_closure(ring, gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring(), a.members() & b.members());
}

Ideal colon(const Ideal& ideal, Element d) {
  const auto& ring = ideal.ring();
  ring.require(d);
  ElementSet out(ring.order());
  auto row = ring.mul_row(d.index);
  for (std::uint32_t x = 0; x < ring.order(); ++x)
    if (ideal.members().contains(row[x])) out.insert(x);
  return Ideal::trusted(ring, std::move(out));
}

Ideal radical(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  ElementSet out(ring.order());
  for (std::uint32_t x = 0; x < ring.order(); ++x) {
    Element p = ring.one();
    for (std::size_t k = 1; k <= ring.order(); ++k) {
      p = ring.mul(p, Element{x});
      if (ideal.contains(p)) {
        out.insert(x);
        break;
      }
    }
  }
  return Ideal::from_members(ring, std::move(out));
}

Ideal scale(Element x, const Ideal& ideal) {
  const auto& ring = ideal.ring();
  ring.require(x);
  ElementSet out(ring.order());
  auto row = ring.mul_row(x.index);
  ideal.members().for_each([&](std::uint32_t i) { out.insert(row[i]); });
  return Ideal::trusted(ring, std::move(out));
}

Ideal whole_ring(const FiniteRing& ring) { return Ideal::trusted(ring, ElementSet::full(ring.order())); }

Ideal zero_ideal(const FiniteRing& ring) {
  ElementSet z(ring.order());
  z.insert(ring.zero().index);
  return Ideal::trusted(ring, std::move(z));
}

bool is_prime(const Ideal& ideal) {
  require_proper(ideal, "is_prime");
  const auto& ring = ideal.ring();
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    if (ideal.members().contains(a)) continue;
    auto row = ring.mul_row(a);
    for (std::uint32_t b = 0; b < ring.order(); ++b)
      if (ideal.members().contains(row[b]) && !ideal.members().contains(b)) return false;
  }
  return true;
}

bool is_maximal(const Ideal& ideal) {
  require_proper(ideal, "is_maximal");
  const auto& lat = ideal.ring().lattice();
  return lat.is_maximal(lat.index_of(ideal));
}

bool is_primary(const Ideal& ideal) {
  require_proper(ideal, "is_primary");
  const auto& ring = ideal.ring();
  const Ideal rad = radical(ideal);
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    if (ideal.members().contains(a)) continue;
    auto row = ring.mul_row(a);
    for (std::uint32_t b = 0; b < ring.order(); ++b)
      if (ideal.members().contains(row[b]) && !rad.members().contains(b)) return false;
  }
  return true;
}

bool is_principal(const Ideal& ideal) {
  const auto& lat = ideal.ring().lattice();
  const auto self = lat.index_of(ideal);
  for (std::uint32_t g = 0; g < ideal.ring().order(); ++g)
    if (lat.principal(g) == self) return true;
  return false;
}

bool is_radical_ideal(const Ideal& ideal) { return radical(ideal) == ideal; }

bool is_prime_element(const FiniteRing& ring, Element x) {
  ring.require(x);
  if (x == ring.zero()) return false;
  const Ideal p = span(ring, {x});
  return p.is_proper() && is_prime(p);
}

std::vector<Ideal> maximal_ideals(const FiniteRing& ring) {
  const auto& lat = ring.lattice();
  std::vector<Ideal> out;
  for (auto i : lat.maximal()) out.push_back(lat[i]);
  return out;
}

Ideal jacobson_radical(const FiniteRing& ring) {
  ElementSet acc = ElementSet::full(ring.order());
  for (const auto& m : maximal_ideals(ring)) acc &= m.members();
  return Ideal::trusted(ring, std::move(acc));
}

bool is_local(const FiniteRing& ring) { return ring.lattice().maximal().size() == 1; }

bool nonunits_form_ideal(const FiniteRing& ring) { return satisfies_ideal_axioms(ring, ring.nonunit_set()); }

bool is_chained(const FiniteRing& ring) {
  const auto& lat = ring.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if (!lat.contains(i, j) && !lat.contains(j, i)) return false;
  return true;
}

bool is_field(const FiniteRing& ring) { return ring.lattice().size() == 2; }

std::vector<Ideal> spectrum(const FiniteRing& ring) {
  const auto& lat = ring.lattice();
  std::vector<Ideal> out;
  for (auto i : lat.proper())
    if (lat.is_prime(i)) out.push_back(lat[i]);
  return out;
}

}  // namespace ringlab
