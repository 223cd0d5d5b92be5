#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"

using namespace ringlab;
using testing::el;
using testing::gen;

namespace {

std::vector<std::vector<std::uint32_t>> library_ideals(const FiniteRing& r) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& I : all_ideals(r)) out.push_back(I.member_list());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> oracle_ideals(const FiniteRing& r) {
  auto out = oracle::subset_filter_ideals(r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("span") {
  const auto z12 = make_zn(12);
  CHECK(gen(*z12, {"4"}).member_list() == std::vector<std::uint32_t>{0, 4, 8});
  CHECK(span(*z12, {}).is_zero());
  CHECK_FALSE(gen(*z12, {"1"}).is_proper());
  CHECK(gen(*z12, {"4", "6"}) == gen(*z12, {"2"}));
}

TEST_CASE("ideal enumeration") {
  const auto z12 = make_zn(12);
  std::vector<std::string> texts;
  for (const auto& I : all_ideals(*z12)) texts.push_back(I.to_string());
  CHECK(texts == std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"});

  const auto f4 = make_poly_quotient(2, {1, 1, 1});
  CHECK(all_ideals(*f4).size() == 2);
  CHECK(all_ideals(*make_product(make_zn(2), make_zn(2)).ring).size() == 4);

  for (long long n = 2; n <= 16; ++n) CHECK(library_ideals(*make_zn(n)) == oracle_ideals(*make_zn(n)));
  CHECK(library_ideals(*make_poly_quotient(2, {0, 0, 0, 1})) == oracle_ideals(*make_poly_quotient(2, {0, 0, 0, 1})));
}

TEST_CASE("canonical order") {
  const auto z36 = make_zn(36);
  const auto& L = z36->lattice();
  CHECK(L[L.zero_index()].is_zero());
  CHECK_FALSE(L[L.whole_index()].is_proper());
  for (std::size_t i = 1; i < L.size(); ++i) {
    const auto& a = L[i - 1].members();
    const auto& b = L[i].members();
    CHECK((a.count() < b.count() || (a.count() == b.count() && ElementSet::compare_value(a, b) < 0)));
  }
  CHECK(L.proper().size() == L.size() - 1);
}

TEST_CASE("ideal arithmetic") {
  const auto z12 = make_zn(12);
  const auto two = gen(*z12, {"2"}), three = gen(*z12, {"3"}), six = gen(*z12, {"6"});
  CHECK(ideal_product(two, three) == six);
  CHECK(ideal_intersection(two, three) == six);
  CHECK_FALSE(ideal_sum(two, three).is_proper());
  for (const auto& I : all_ideals(*z12)) {
    CHECK(ideal_product(I, whole_ring(*z12)) == I);
    CHECK(ideal_intersection(I, I) == I);
  }
  const auto& L = z12->lattice();
  CHECK(L.product(L.index_of(two), L.index_of(three)) == L.index_of(six));
  CHECK(L.sum(L.index_of(two), L.index_of(three)) == L.whole_index());
  CHECK(L.intersection(L.index_of(two), L.index_of(three)) == L.index_of(six));
  CHECK(L.contains(L.index_of(two), L.index_of(six)));
  CHECK_FALSE(L.contains(L.index_of(six), L.index_of(two)));

  CHECK_THROWS_AS(ideal_sum(two, gen(*make_zn(12), {"2"})), RingMismatch);
}

TEST_CASE("colon, radical, scale") {
  const auto z12 = make_zn(12);
  const auto four = gen(*z12, {"4"});
  CHECK(colon(four, el(*z12, "2")) == gen(*z12, {"2"}));
  CHECK(colon(four, el(*z12, "1")) == four);
  CHECK_FALSE(colon(four, el(*z12, "0")).is_proper());
  CHECK(radical(four) == gen(*z12, {"2"}));
  CHECK_FALSE(radical(whole_ring(*z12)).is_proper());
  const auto z36 = make_zn(36);
  CHECK(radical(gen(*z36, {"6"})) == gen(*z36, {"6"}));

  const auto z8 = make_zn(8);
  CHECK(scale(el(*z8, "2"), gen(*z8, {"2"})) == gen(*z8, {"4"}));
  for (const auto& I : all_ideals(*z8)) {
    CHECK(scale(z8->one(), I) == I);
    CHECK(scale(z8->zero(), I).is_zero());
  }

  for (long long n = 2; n <= 24; ++n) {
    const auto r = make_zn(n);
    for (const auto& I : all_ideals(*r)) {
      const auto expected = oracle::radical_of(*r, oracle::to_set(*r, I.member_list()));
      CHECK(oracle::to_set(*r, radical(I).member_list()) == expected);
      CHECK(r->lattice()[r->lattice().radical(r->lattice().index_of(I))] == radical(I));
    }
  }
}

TEST_CASE("classical predicates") {
  const auto z12 = make_zn(12);
  CHECK(is_prime(gen(*z12, {"2"})));
  CHECK(is_maximal(gen(*z12, {"2"})));
  CHECK(is_primary(gen(*z12, {"4"})));
  CHECK_FALSE(is_prime(gen(*z12, {"4"})));
  CHECK_FALSE(is_primary(gen(*z12, {"6"})));
  CHECK(is_principal(gen(*z12, {"6"})));
  CHECK(is_radical_ideal(gen(*z12, {"6"})));
  CHECK_FALSE(is_radical_ideal(gen(*z12, {"4"})));
  CHECK(is_prime(zero_ideal(*make_zn(7))));
  CHECK(is_prime(zero_ideal(*make_poly_quotient(3, {1, 0, 1}))));
  CHECK_THROWS_AS(is_prime(whole_ring(*z12)), PreconditionError);
  CHECK_THROWS_AS(is_maximal(whole_ring(*z12)), PreconditionError);
  CHECK_THROWS_AS(is_primary(whole_ring(*z12)), PreconditionError);

  CHECK(is_prime_element(*z12, el(*z12, "2")));
  CHECK_FALSE(is_prime_element(*z12, el(*z12, "4")));
  CHECK_FALSE(is_prime_element(*z12, el(*z12, "0")));
  CHECK_FALSE(is_prime_element(*z12, el(*z12, "5")));

  const auto z2x2 = make_product(make_zn(2), make_zn(2));
  CHECK(is_principal(zero_ideal(*z2x2.ring)));

  // The maximal ideal of Z2[x]/(x^2) ⋉ Z2[x]/(x^2) needs two generators.
  const auto c4 = make_poly_quotient(2, {0, 0, 1});
  const auto t = make_trivial_extension(c4, make_regular_module(c4));
  bool some_non_principal = false;
  for (const auto& I : all_ideals(*t.ring)) some_non_principal |= !is_principal(I);
  CHECK(some_non_principal);
}

TEST_CASE("ideal validation") {
  const auto z12 = make_zn(12);
  CHECK_THROWS_AS(Ideal::from_members(*z12, ElementSet::of(12, {0, 3})), PreconditionError);
  CHECK_NOTHROW(Ideal::from_members(*z12, ElementSet::of(12, {0, 4, 8})));
  CHECK(satisfies_ideal_axioms(*z12, ElementSet::of(12, {0, 6})));
  CHECK_FALSE(satisfies_ideal_axioms(*z12, ElementSet::of(12, {6})));
  CHECK_THROWS_AS(z12->lattice().index_of(gen(*make_zn(12), {"2"})), RingMismatch);
}
