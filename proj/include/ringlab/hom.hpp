#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A map between finite rings given by its element-index table.
struct RingHom {
  RingPtr domain;
  RingPtr codomain;
  std::vector<std::uint32_t> map;

  Element operator()(Element a) const { return Element{map[a.index]}; }
};

/// First pair (a, b) at which f fails to be additive or multiplicative; for
/// identity failures both entries are the offending identity.
struct HomViolation {
  Element a;
  Element b;
  const char* rule;
};

std::optional<HomViolation> find_hom_violation(const RingHom& f);
/// True when f is a unital ring homomorphism.
bool validate_hom(const RingHom& f);
/// Throws HomError naming a violating pair.
void require_hom(const RingHom& f);

RingHom identity_hom(const RingPtr& ring);
bool is_surjective(const RingHom& f);
Ideal kernel(const RingHom& f);

Ideal hom_preimage(const RingHom& f, const Ideal& target);
/// Pointwise image; f must be surjective (checked).
Ideal hom_image(const RingHom& f, const Ideal& source);

/// First nonunit of the domain mapped to a unit, if any.
std::optional<Element> nonunit_preservation_witness(const RingHom& f);
bool nonunit_preserving(const RingHom& f);

}  // namespace ringlab
