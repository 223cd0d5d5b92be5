#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace testing {

inline ringlab::Element el(const ringlab::FiniteRing& r, const std::string& name) {
  ringlab::Element e;
  REQUIRE_MESSAGE(r.find_by_name(name, e), "no element " << name << " in " << r.label());
  return e;
}

inline ringlab::Ideal gen(const ringlab::FiniteRing& r, std::initializer_list<const char*> names) {
  std::vector<ringlab::Element> gens;
  for (auto n : names) gens.push_back(el(r, n));
  return ringlab::span(r, gens);
}

inline std::size_t idx(const ringlab::FiniteRing& r, std::initializer_list<const char*> names) {
  return r.lattice().index_of(gen(r, names));
}

inline std::vector<std::string> names_of(const ringlab::FiniteRing& r, const std::vector<ringlab::Element>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(r.name(e));
  return out;
}

}  // namespace testing
