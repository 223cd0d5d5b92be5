#include "ringlab/constructions.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

bool has_top_level_product(const std::string& label) {
  int depth = 0;
  for (char c : label) {
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == 'x' && depth == 0) return true;
  }
  return false;
}

namespace {

std::string operand(const std::string& label) {
  return has_top_level_product(label) ? "(" + label + ")" : label;
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t ProductRing::ideal_index(std::size_t left_ideal, std::size_t right_ideal) const {
  const auto& a = left->lattice()[left_ideal].members();
  const auto& b = right->lattice()[right_ideal].members();
  ElementSet s(ring->order());
  a.for_each([&](std::uint32_t x) { b.for_each([&](std::uint32_t y) { s.insert(encode(Element{x}, Element{y}).index); }); });
  auto idx = ring->lattice().find(s);
  if (!idx) throw PreconditionError("product of ideals missing from the product lattice");
  return *idx;
}

std::pair<std::size_t, std::size_t> ProductRing::components(std::size_t ideal) const {
  ElementSet a(left->order()), b(right->order());
  ring->lattice()[ideal].members().for_each([&](std::uint32_t x) {
    auto [u, v] = decode(Element{x});
    a.insert(u.index);
    b.insert(v.index);
  });
  auto i = left->lattice().find(a);
  auto j = right->lattice().find(b);
  if (!i || !j) throw PreconditionError("ideal projection is not an ideal");
  return {*i, *j};
}

RingHom ProductRing::projection_left() const {
  RingHom f{ring, left, std::vector<std::uint32_t>(ring->order())};
  for (std::uint32_t x = 0; x < ring->order(); ++x) f.map[x] = decode(Element{x}).first.index;
  return f;
}

RingHom ProductRing::projection_right() const {
  RingHom f{ring, right, std::vector<std::uint32_t>(ring->order())};
  for (std::uint32_t x = 0; x < ring->order(); ++x) f.map[x] = decode(Element{x}).second.index;
  return f;
}

ProductRing make_product(const RingPtr& left, const RingPtr& right) {
  const std::size_t n1 = left->order(), n2 = right->order(), n = n1 * n2;
  ProductRing p{nullptr, left, right};
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    auto [a1, b1] = p.decode(Element{x});
    names[x] = "(" + left->name(a1) + "," + right->name(b1) + ")";
    for (std::uint32_t y = 0; y < n; ++y) {
      auto [a2, b2] = p.decode(Element{y});
      add[x * n + y] = p.encode(left->add(a1, a2), right->add(b1, b2)).index;
      mul[x * n + y] = p.encode(left->mul(a1, a2), right->mul(b1, b2)).index;
    }
  }
  p.ring = FiniteRing::create(left->label() + "x" + operand(right->label()), n, std::move(add), std::move(mul),
                              p.encode(left->zero(), right->zero()).index, p.encode(left->one(), right->one()).index,
                              std::move(names));
  return p;
}

// ---------------------------------------------------------------------------

std::size_t QuotientRing::lift_ideal(std::size_t quotient_ideal) const {
  const auto& target = ring->lattice()[quotient_ideal];
  auto idx = parent->lattice().find(hom_preimage(projection, target).members());
  if (!idx) throw PreconditionError("preimage is not an ideal");
  return *idx;
}

std::size_t QuotientRing::push_ideal(std::size_t parent_ideal) const {
  ElementSet s(ring->order());
  parent->lattice()[parent_ideal].members().for_each([&](std::uint32_t a) { s.insert(projection.map[a]); });
  auto idx = ring->lattice().find(s);
  if (!idx) throw PreconditionError("image is not an ideal");
  return *idx;
}

QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal, std::string label) {
  if (&ideal.ring() != ring.get()) throw RingMismatch("quotient ideal belongs to another ring");
  if (!ideal.is_proper()) throw PreconditionError("quotient requires a proper ideal");
  const std::size_t n = ring->order();
  std::vector<std::uint32_t> coset(n, ElementSet::npos);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (coset[a] != ElementSet::npos) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
    auto row = ring->add_row(a);
    ideal.members().for_each([&](std::uint32_t i) { coset[row[i]] = c; });
  }
  const std::size_t m = reps.size();
  std::vector<std::uint32_t> add(m * m), mul(m * m);
  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) {
    names[x] = "[" + ring->name(Element{reps[x]}) + "]";
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = coset[ring->add(Element{reps[x]}, Element{reps[y]}).index];
      mul[x * m + y] = coset[ring->mul(Element{reps[x]}, Element{reps[y]}).index];
    }
  }
  if (label.empty()) label = operand(ring->label()) + "/" + ideal.to_string();
  QuotientRing q;
  q.ring = FiniteRing::create(std::move(label), m, std::move(add), std::move(mul), coset[ring->zero().index],
                              coset[ring->one().index], std::move(names));
  q.parent = ring;
  q.ideal = ideal.members();
  q.projection = RingHom{ring, q.ring, coset};
  q.representative = std::move(reps);
  q.nonunit_preserving = nonunit_preserving(q.projection);
  return q;
}

// ---------------------------------------------------------------------------

ModulePtr FiniteModule::create(RingPtr ring, std::size_t order, std::vector<std::uint32_t> add_table,
                               std::vector<std::uint32_t> action, std::uint32_t zero, std::vector<std::string> names,
                               std::string label) {
  auto fail = [](const std::string& what) { throw InvalidStructure("invalid module: " + what); };
  const std::size_t n = order, r = ring->order();
  if (n == 0) fail("empty carrier");
  if (add_table.size() != n * n || action.size() != r * n) fail("table size mismatch");
  if (zero >= n) fail("zero out of range");
  for (auto v : add_table)
    if (v >= n) fail("addition entry out of range");
  for (auto v : action)
    if (v >= n) fail("action entry out of range");
  auto A = [&](std::size_t e, std::size_t f) { return add_table[e * n + f]; };
  auto act = [&](std::size_t a, std::size_t e) { return action[a * n + e]; };
  for (std::size_t e = 0; e < n; ++e) {
    if (A(e, zero) != e) fail("zero is not an identity");
    bool inv = false;
    for (std::size_t f = 0; f < n; ++f) {
      if (A(e, f) != A(f, e)) fail("addition not commutative");
      if (A(e, f) == zero) inv = true;
      for (std::size_t g = 0; g < n; ++g)
        if (A(A(e, f), g) != A(e, A(f, g))) fail("addition not associative");
    }
    if (!inv) fail("missing additive inverse");
    if (act(ring->one().index, e) != e) fail("1·e != e");
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t b = 0; b < r; ++b) {
        if (act(ring->mul(Element{static_cast<std::uint32_t>(a)}, Element{static_cast<std::uint32_t>(b)}).index, e) !=
            act(a, act(b, e)))
          fail("(ab)·e != a·(b·e)");
        if (act(ring->add(Element{static_cast<std::uint32_t>(a)}, Element{static_cast<std::uint32_t>(b)}).index, e) !=
            A(act(a, e), act(b, e)))
          fail("(a+b)·e != a·e + b·e");
      }
      for (std::size_t f = 0; f < n; ++f)
        if (act(a, A(e, f)) != A(act(a, e), act(a, f))) fail("a·(e+f) != a·e + a·f");
    }
  if (names.empty())
    for (std::size_t e = 0; e < n; ++e) names.push_back(std::to_string(e));
  return std::make_shared<const FiniteModule>(Token{}, std::move(ring), order, std::move(add_table), std::move(action),
                                              zero, std::move(names), std::move(label));
}

FiniteModule::FiniteModule(Token, RingPtr ring, std::size_t order, std::vector<std::uint32_t> add_table,
                           std::vector<std::uint32_t> action, std::uint32_t zero, std::vector<std::string> names,
                           std::string label)
    : ring_(std::move(ring)),
      order_(order),
      add_(std::move(add_table)),
      action_(std::move(action)),
      zero_(zero),
      names_(std::move(names)),
      label_(std::move(label)) {}

bool FiniteModule::is_submodule(const ElementSet& subset) const {
  if (subset.universe() != order_ || !subset.contains(zero_)) return false;
  const auto members = subset.to_vector();
  for (auto e : members) {
    for (auto f : members)
      if (!subset.contains(add(e, f))) return false;
    for (std::uint32_t a = 0; a < ring_->order(); ++a)
      if (!subset.contains(act(Element{a}, e))) return false;
  }
  return true;
}

ElementSet FiniteModule::submodule_span(const ElementSet& gens) const {
  // Close {a·g} under addition; the result is also closed under the action.
  ElementSet seeds(order_);
  gens.for_each([&](std::uint32_t g) {
    for (std::uint32_t a = 0; a < ring_->order(); ++a) seeds.insert(act(Element{a}, g));
  });
  ElementSet out(order_);
  out.insert(zero_);
  std::vector<std::uint32_t> frontier{zero_};
  const auto s = seeds.to_vector();
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier)
      for (auto y : s) {
        const auto z = add(x, y);
        if (!out.contains(z)) {
          out.insert(z);
          next.push_back(z);
        }
      }
    frontier.swap(next);
  }
  return out;
}

ElementSet FiniteModule::ideal_times_module(const Ideal& ideal) const {
  ElementSet gens(order_);
  ideal.members().for_each([&](std::uint32_t a) {
    for (std::uint32_t e = 0; e < order_; ++e) gens.insert(act(Element{a}, e));
  });
  return submodule_span(gens);
}

std::vector<ElementSet> FiniteModule::submodules() const {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> cyclic;
  for (std::uint32_t e = 0; e < order_; ++e) {
    ElementSet g(order_);
    g.insert(e);
    auto s = submodule_span(g);
    if (seen.insert(s).second) cyclic.push_back(std::move(s));
  }
  std::vector<ElementSet> found = cyclic;
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const auto i = work.front();
    work.pop_front();
    for (const auto& c : cyclic) {
      if (c.is_subset_of(found[i])) continue;
      auto s = submodule_span(found[i] | c);
      if (seen.insert(s).second) {
        found.push_back(std::move(s));
        work.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementSet::compare_value(a, b) < 0;
  });
  return found;
}

ModulePtr make_regular_module(const RingPtr& ring) {
  return FiniteModule::create(ring, ring->order(), ring->add_table(), ring->mul_table(), ring->zero().index,
                              ring->names(), "reg");
}

ModulePtr make_quotient_module(const RingPtr& ring, const Ideal& ideal) {
  QuotientRing q = make_quotient(ring, ideal);
  const std::size_t n = q.ring->order(), r = ring->order();
  std::vector<std::uint32_t> action(r * n);
  for (std::uint32_t a = 0; a < r; ++a)
    for (std::uint32_t e = 0; e < n; ++e) action[a * n + e] = q.ring->mul(Element{q.projection.map[a]}, Element{e}).index;
  return FiniteModule::create(ring, n, q.ring->add_table(), std::move(action), q.ring->zero().index, q.ring->names(),
                              "quot:" + ideal.to_string());
}

bool is_ideal_pair(const Ideal& ideal, const FiniteModule& module, const ElementSet& submodule) {
  if (&ideal.ring() != module.ring().get()) throw RingMismatch("ideal and module live over different rings");
  if (!module.is_submodule(submodule)) throw PreconditionError("F is not a submodule");
  return module.ideal_times_module(ideal).is_subset_of(submodule);
}

ElementSet module_colon(const FiniteModule& module, const ElementSet& submodule, Element c) {
  if (!module.is_submodule(submodule)) throw PreconditionError("F is not a submodule");
  module.ring()->require(c);
  ElementSet out(module.order());
  for (std::uint32_t e = 0; e < module.order(); ++e)
    if (submodule.contains(module.act(c, e))) out.insert(e);
  return out;
}

ElementSet TrivialExtension::pair_set(const ElementSet& ideal, const ElementSet& submodule) const {
  ElementSet s(ring->order());
  ideal.for_each([&](std::uint32_t a) { submodule.for_each([&](std::uint32_t e) { s.insert(encode(Element{a}, e).index); }); });
  return s;
}

std::size_t TrivialExtension::pair_ideal(std::size_t base_ideal, const ElementSet& submodule) const {
  const auto& I = base->lattice()[base_ideal];
  if (!is_ideal_pair(I, *module, submodule)) throw PreconditionError("I⋉F is an ideal only when IE ⊆ F");
  auto idx = ring->lattice().find(pair_set(I.members(), submodule));
  if (!idx) throw PreconditionError("I⋉F missing from the lattice");
  return *idx;
}

std::size_t TrivialExtension::first_projection(std::size_t ideal) const {
  ElementSet a(base->order());
  ring->lattice()[ideal].members().for_each([&](std::uint32_t x) { a.insert(decode(Element{x}).first.index); });
  auto idx = base->lattice().find(a);
  if (!idx) throw PreconditionError("projection is not an ideal");
  return *idx;
}

std::optional<std::pair<std::size_t, ElementSet>> TrivialExtension::decompose(std::size_t ideal) const {
  const auto& K = ring->lattice()[ideal].members();
  const std::size_t I = first_projection(ideal);
  ElementSet F(module->order());
  for (std::uint32_t e = 0; e < module->order(); ++e)
    if (K.contains(encode(base->zero(), e).index)) F.insert(e);
  if (pair_set(base->lattice()[I].members(), F) != K) return std::nullopt;
  return std::make_pair(I, std::move(F));
}

TrivialExtension make_trivial_extension(const RingPtr& base, const ModulePtr& module) {
  if (module->ring() != base) throw RingMismatch("module is not over the given ring");
  const std::size_t m = module->order(), n = base->order() * m;
  TrivialExtension t{nullptr, base, module};
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    auto [a, e] = t.decode(Element{x});
    names[x] = "(" + base->name(a) + "," + module->name(e) + ")";
    for (std::uint32_t y = 0; y < n; ++y) {
      auto [b, f] = t.decode(Element{y});
      add[x * n + y] = t.encode(base->add(a, b), module->add(e, f)).index;
      mul[x * n + y] = t.encode(base->mul(a, b), module->add(module->act(a, f), module->act(b, e))).index;
    }
  }
  t.ring = FiniteRing::create("triv(" + base->label() + "," + module->label() + ")", n, std::move(add), std::move(mul),
                              t.encode(base->zero(), module->zero()).index, t.encode(base->one(), module->zero()).index,
                              std::move(names));
  return t;
}

// ---------------------------------------------------------------------------

MultiplicativeSet MultiplicativeSet::generated_by(const RingPtr& ring, const std::vector<Element>& gens) {
  ElementSet s(ring->order());
  s.insert(ring->one().index);
  for (auto g : gens) {
    ring->require(g);
    s.insert(g.index);
  }
  bool grown = true;
  while (grown) {
    grown = false;
    for (auto a : s.to_vector())
      for (auto b : s.to_vector()) {
        const auto c = ring->mul(Element{a}, Element{b}).index;
        if (!s.contains(c)) {
          s.insert(c);
          grown = true;
        }
      }
  }
  if (s.contains(ring->zero().index))
    throw PreconditionError("multiplicative set contains 0; the localization would be the zero ring");
  return MultiplicativeSet{ring, std::move(s)};
}

MultiplicativeSet MultiplicativeSet::complement_of_prime(const RingPtr& ring, const Ideal& prime) {
  if (&prime.ring() != ring.get()) throw RingMismatch("prime ideal belongs to another ring");
  if (!is_prime(prime)) throw PreconditionError("complement_of_prime requires a prime ideal");
  return MultiplicativeSet{ring, prime.members().complement()};
}

bool MultiplicativeSet::is_valid() const {
  if (!members.contains(ring->one().index) || members.contains(ring->zero().index)) return false;
  bool closed = true;
  members.for_each([&](std::uint32_t a) {
    members.for_each([&](std::uint32_t b) {
      if (!members.contains(ring->mul(Element{a}, Element{b}).index)) closed = false;
    });
  });
  return closed;
}

std::vector<Element> MultiplicativeSet::generators() const {
  ElementSet acc(ring->order());
  acc.insert(ring->one().index);
  std::vector<Element> gens;
  members.for_each([&](std::uint32_t a) {
    if (acc.contains(a)) return;
    gens.push_back(Element{a});
    acc = generated_by(ring, gens).members;
  });
  return gens;
}

bool Localization::disjoint(std::size_t parent_ideal) const {
  return !parent->lattice()[parent_ideal].members().intersects(multiplicative_set.members);
}

Localization localize(const RingPtr& ring, const MultiplicativeSet& set) {
  if (set.ring != ring) throw RingMismatch("multiplicative set belongs to another ring");
  if (!set.is_valid()) throw PreconditionError("not a multiplicatively closed set avoiding 0");
  ElementSet ker(ring->order());
  for (std::uint32_t r = 0; r < ring->order(); ++r) {
    auto row = ring->mul_row(r);
    set.members.for_each([&](std::uint32_t s) {
      if (row[s] == ring->zero().index) ker.insert(r);
    });
  }
  std::string gens;
  for (auto g : set.generators()) {
    if (!gens.empty()) gens += ",";
    gens += ring->name(g);
  }
  if (gens.empty()) gens = ring->name(ring->one());
  const Ideal kernel_ideal = Ideal::from_members(*ring, ker);
  QuotientRing q = make_quotient(ring, kernel_ideal, "loc(" + ring->label() + "," + gens + ")");
  Localization loc{q.ring, ring, set, std::move(ker), std::move(q)};
  return loc;
}

}  // namespace ringlab
