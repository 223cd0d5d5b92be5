#include "ringlab/hom.hpp"

#include "ringlab/errors.hpp"

namespace ringlab {

std::optional<HomViolation> find_hom_violation(const RingHom& f) {
  const auto& R = *f.domain;
  const auto& S = *f.codomain;
  if (f.map.size() != R.order()) return HomViolation{R.zero(), R.zero(), "map is not total"};
  for (auto v : f.map)
    if (v >= S.order()) return HomViolation{R.zero(), R.zero(), "map leaves the codomain"};
  if (f(R.zero()) != S.zero()) return HomViolation{R.zero(), R.zero(), "f(0) != 0"};
  if (f(R.one()) != S.one()) return HomViolation{R.one(), R.one(), "f(1) != 1"};
  for (std::uint32_t a = 0; a < R.order(); ++a)
    for (std::uint32_t b = a; b < R.order(); ++b) {
      const Element x{a}, y{b};
      if (f(R.add(x, y)) != S.add(f(x), f(y))) return HomViolation{x, y, "f(a+b) != f(a)+f(b)"};
      if (f(R.mul(x, y)) != S.mul(f(x), f(y))) return HomViolation{x, y, "f(ab) != f(a)f(b)"};
    }
  return std::nullopt;
}

bool validate_hom(const RingHom& f) { return !find_hom_violation(f).has_value(); }

void require_hom(const RingHom& f) {
  if (auto v = find_hom_violation(f)) {
    throw HomError(std::string("not a ring homomorphism: ") + v->rule + " at (" + std::to_string(v->a.index) + "," +
                   std::to_string(v->b.index) + ")");
  }
}

RingHom identity_hom(const RingPtr& ring) {
  RingHom f{ring, ring, std::vector<std::uint32_t>(ring->order())};
  for (std::uint32_t i = 0; i < ring->order(); ++i) f.map[i] = i;
  return f;
}

bool is_surjective(const RingHom& f) {
  ElementSet hit(f.codomain->order());
  for (auto v : f.map) hit.insert(v);
  return hit.is_full();
}

Ideal kernel(const RingHom& f) {
  ElementSet k(f.domain->order());
  for (std::uint32_t a = 0; a < f.domain->order(); ++a)
    if (f.map[a] == f.codomain->zero().index) k.insert(a);
  return Ideal::trusted(*f.domain, std::move(k));
}

Ideal hom_preimage(const RingHom& f, const Ideal& target) {
  if (&target.ring() != f.codomain.get()) throw RingMismatch("ideal is not in the codomain");
  ElementSet out(f.domain->order());
  for (std::uint32_t a = 0; a < f.domain->order(); ++a)
    if (target.members().contains(f.map[a])) out.insert(a);
  return Ideal::trusted(*f.domain, std::move(out));
}

Ideal hom_image(const RingHom& f, const Ideal& source) {
  if (&source.ring() != f.domain.get()) throw RingMismatch("ideal is not in the domain");
  if (!is_surjective(f)) throw PreconditionError("hom_image requires a surjective homomorphism");
  ElementSet out(f.codomain->order());
  source.members().for_each([&](std::uint32_t a) { out.insert(f.map[a]); });
  return Ideal::trusted(*f.codomain, std::move(out));
}

std::optional<Element> nonunit_preservation_witness(const RingHom& f) {
  for (auto a : f.domain->nonunit_list())
    if (f.codomain->is_unit(Element{f.map[a]})) return Element{a};
  return std::nullopt;
}

bool nonunit_preserving(const RingHom& f) { return !nonunit_preservation_witness(f).has_value(); }

}  // namespace ringlab
