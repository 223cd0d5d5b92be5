#include "ringlab/expansion.hpp"

#include <optional>

#include "ringlab/errors.hpp"

namespace ringlab {

std::optional<AxiomViolation> find_axiom_violation(const FiniteRing& ring, const std::vector<std::size_t>& table) {
  const auto& lat = ring.lattice();
  const std::size_t L = lat.size();
  if (table.size() != L) return AxiomViolation{1, 0, 0};
  for (auto v : table)
    if (v >= L) return AxiomViolation{1, 0, 0};
  for (std::size_t i = 0; i < L; ++i) {
    if (!lat.contains(table[i], i)) return AxiomViolation{1, i, i};
    for (std::size_t j = 0; j < L; ++j)
      if (lat.contains(i, j) && !lat.contains(table[i], table[j])) return AxiomViolation{2, i, j};
  }
  return std::nullopt;
}

ValidationResult validate(const FiniteRing& ring, const std::vector<std::size_t>& table) {
  auto v = find_axiom_violation(ring, table);
  return ValidationResult{!v.has_value(), v};
}

ValidationResult validate(const ExpansionFunction& delta) { return validate(delta.ring(), delta.table()); }

ExpansionFunction ExpansionFunction::from_table(RingPtr ring, std::vector<std::size_t> table, std::string label) {
  if (auto v = find_axiom_violation(*ring, table)) {
    const auto& lat = ring->lattice();
    std::string msg = "expansion '" + label + "' on " + ring->label() + " violates ";
    if (v->ideal >= lat.size()) {
      msg += "the table shape";
    } else if (v->axiom == 1) {
      msg += "I ⊆ δ(I) at I=" + lat[v->ideal].to_string();
    } else {
      msg += "monotonicity at J=" + lat[v->other].to_string() + " ⊆ I=" + lat[v->ideal].to_string();
    }
    throw ExpansionError(msg);
  }
  return ExpansionFunction(std::move(ring), std::move(table), std::move(label));
}

const Ideal& ExpansionFunction::operator()(const Ideal& ideal) const {
  const auto& lat = ring_->lattice();
  return lat[table_[lat.index_of(ideal)]];
}

ExpansionFunction make_identity(const RingPtr& ring) {
  std::vector<std::size_t> t(ring->lattice().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return ExpansionFunction::from_table(ring, std::move(t), "id");
}

ExpansionFunction make_radical(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  std::vector<std::size_t> t(lat.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = lat.radical(i);
  return ExpansionFunction::from_table(ring, std::move(t), "rad");
}

ExpansionFunction make_plus_fixed(const RingPtr& ring, const Ideal& fixed) {
  const auto& lat = ring->lattice();
  const std::size_t j = lat.index_of(fixed);
  std::vector<std::size_t> t(lat.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = lat.sum(i, j);
  return ExpansionFunction::from_table(ring, std::move(t), "plus:" + fixed.to_string());
}

ExpansionFunction make_constant_ring(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  return ExpansionFunction::from_table(ring, std::vector<std::size_t>(lat.size(), lat.whole_index()), "full");
}

PropertyCheck satisfies_star(const ExpansionFunction& delta) {
  const auto& lat = delta.ring().lattice();
  for (auto i : lat.proper())
    if (delta.at(i) == lat.whole_index()) return PropertyCheck{false, i, {}, {}};
  return {};
}

PropertyCheck preserves_jacobson(const ExpansionFunction& delta) {
  const auto& lat = delta.ring().lattice();
  const std::size_t jac = lat.index_of(jacobson_radical(delta.ring()));
  if (delta.at(jac) != jac) return PropertyCheck{false, jac, {}, {}};
  return {};
}

PropertyCheck commutes_with_scaling(const ExpansionFunction& delta) {
  const auto& ring = delta.ring();
  const auto& lat = ring.lattice();
  // Failures with xI = (0) only test δ(0) = (0); report a witness with xI ≠ (0) when one exists.
  std::optional<PropertyCheck> degenerate;
  for (std::uint32_t x = 0; x < ring.order(); ++x)
    for (auto i : lat.proper()) {
      const std::size_t xi = lat.index_of(scale(Element{x}, lat[i]));
      if (lat[delta.at(xi)].members() == scale(Element{x}, lat[delta.at(i)]).members()) continue;
      PropertyCheck fail{false, i, {}, Element{x}};
      if (xi != lat.zero_index()) return fail;
      if (!degenerate) degenerate = fail;
    }
  return degenerate ? *degenerate : PropertyCheck{};
}

PropertyCheck is_intersection_preserving(const ExpansionFunction& delta) {
  const auto& lat = delta.ring().lattice();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if (delta.at(lat.intersection(i, j)) != lat.intersection(delta.at(i), delta.at(j)))
        return PropertyCheck{false, i, j, {}};
  return {};
}

bool is_idempotent_at(const ExpansionFunction& delta, std::size_t ideal) {
  return delta.at(delta.at(ideal)) == delta.at(ideal);
}

bool radical_commutes_at(const ExpansionFunction& delta, std::size_t ideal) {
  const auto& lat = delta.ring().lattice();
  return lat.radical(delta.at(ideal)) == delta.at(lat.radical(ideal));
}

ExpansionFunction induced_product(const ExpansionFunction& left, const ExpansionFunction& right,
                                  const ProductRing& product) {
  if (left.ring_ptr() != product.left || right.ring_ptr() != product.right)
    throw RingMismatch("induced_product: expansions do not live on the product's factors");
  const auto& lat = product.ring->lattice();
  std::vector<std::size_t> t(lat.size());
  for (std::size_t k = 0; k < lat.size(); ++k) {
    auto [i, j] = product.components(k);
    t[k] = product.ideal_index(left.at(i), right.at(j));
  }
  return ExpansionFunction::from_table(product.ring, std::move(t), "prod(" + left.label() + "," + right.label() + ")");
}

ExpansionFunction induced_quotient(const ExpansionFunction& delta, const QuotientRing& quotient) {
  if (delta.ring_ptr() != quotient.parent) throw RingMismatch("induced_quotient: expansion is not on the parent ring");
  const auto& lat = quotient.ring->lattice();
  std::vector<std::size_t> t(lat.size());
  for (std::size_t q = 0; q < lat.size(); ++q) t[q] = quotient.push_ideal(delta.at(quotient.lift_ideal(q)));
  const Ideal I = Ideal::trusted(*quotient.parent, quotient.ideal);
  return ExpansionFunction::from_table(quotient.ring, std::move(t), "bar(" + delta.label() + "," + I.to_string() + ")");
}

LocalizedExpansion induced_localization(const ExpansionFunction& delta, const Localization& localization) {
  if (delta.ring_ptr() != localization.parent)
    throw RingMismatch("induced_localization: expansion is not on the parent ring");
  const auto& lat = localization.ring->lattice();
  std::vector<std::size_t> t(lat.size());
  for (std::size_t q = 0; q < lat.size(); ++q) t[q] = localization.extend(delta.at(localization.contract(q)));
  std::string gens;
  for (auto g : localization.multiplicative_set.generators()) {
    if (!gens.empty()) gens += ",";
    gens += localization.parent->name(g);
  }
  if (gens.empty()) gens = localization.parent->name(localization.parent->one());
  LocalizedExpansion out{
      ExpansionFunction::from_table(localization.ring, std::move(t), "loc(" + delta.label() + "," + gens + ")"), {}, {}};
  const auto& plat = localization.parent->lattice();
  for (std::size_t i = 0; i < plat.size(); ++i) {
    if (!localization.disjoint(i)) continue;
    const bool ok = out.delta.at(localization.extend(i)) == localization.extend(delta.at(i));
    (ok ? out.compatible : out.incompatible).push_back(i);
  }
  return out;
}

ExpansionFunction induced_trivial_extension(const ExpansionFunction& delta, const TrivialExtension& extension) {
  if (delta.ring_ptr() != extension.base)
    throw RingMismatch("induced_trivial_extension: expansion is not on the base ring");
  const auto& lat = extension.ring->lattice();
  const ElementSet whole_module = ElementSet::full(extension.module->order());
  std::vector<std::size_t> t(lat.size());
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const std::size_t image = delta.at(extension.first_projection(k));
    auto idx = lat.find(extension.pair_set(extension.base->lattice()[image].members(), whole_module));
    if (!idx) throw ExpansionError("δ(I)⋉E is not an ideal");
    t[k] = *idx;
  }
  return ExpansionFunction::from_table(extension.ring, std::move(t), "triv(" + delta.label() + ")");
}

PropertyCheck is_delta_gamma_hom(const RingHom& f, const ExpansionFunction& delta, const ExpansionFunction& gamma) {
  if (delta.ring_ptr() != f.domain || gamma.ring_ptr() != f.codomain)
    throw RingMismatch("is_delta_gamma_hom: expansions do not match the homomorphism");
  const auto& dlat = f.domain->lattice();
  const auto& clat = f.codomain->lattice();
  for (std::size_t j = 0; j < clat.size(); ++j) {
    const std::size_t pre = dlat.index_of(hom_preimage(f, clat[j]));
    const std::size_t pre_gamma = dlat.index_of(hom_preimage(f, clat[gamma.at(j)]));
    if (delta.at(pre) != pre_gamma) return PropertyCheck{false, j, {}, {}};
  }
  return {};
}

}  // namespace ringlab
