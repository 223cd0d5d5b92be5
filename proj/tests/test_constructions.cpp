#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expansion.hpp"
#include "ringlab/predicates.hpp"

using namespace ringlab;
using testing::el;
using testing::gen;
using testing::idx;

TEST_CASE("direct products") {
  const auto p23 = make_product(make_zn(2), make_zn(3));
  CHECK(p23.ring->order() == 6);
  CHECK(p23.ring->lattice().size() == 4);
  CHECK(p23.ring->lattice().size() == make_zn(6)->lattice().size());
  CHECK(p23.ring->label() == "Z2xZ3");

  const auto p22 = make_product(make_zn(2), make_zn(2));
  CHECK(p22.ring->lattice().size() == 4);
  CHECK(p22.ring->lattice()[0].is_proper());

  const auto a = el(*p22.left, "1"), b = el(*p22.right, "0");
  CHECK(p22.encode(a, b).index == 1);
  CHECK(p22.ring->name(p22.encode(a, b)) == "(1,0)");
  CHECK(p22.decode(p22.encode(a, b)) == std::pair{a, b});

  const auto p4f = make_product(make_zn(4), make_zn(5));
  for (auto k = std::size_t{0}; k < p4f.ring->lattice().size(); ++k) {
    const auto [i1, i2] = p4f.components(k);
    CHECK(p4f.ideal_index(i1, i2) == k);
    CHECK((i2 == 0 || i2 == p4f.right->lattice().whole_index()));
  }
  CHECK(validate_hom(p4f.projection_left()));
  CHECK(validate_hom(p4f.projection_right()));

  CHECK(make_product(p22.ring, make_zn(3)).ring->label() == "Z2xZ2xZ3");
  CHECK(make_product(make_zn(3), p22.ring).ring->label() == "Z3x(Z2xZ2)");
}

TEST_CASE("quotients") {
  const auto z12 = make_zn(12);
  const auto q = make_quotient(z12, gen(*z12, {"4"}));
  CHECK(q.ring->order() == 4);
  CHECK(q.ring->lattice().size() == 3);
  CHECK(q.ring->label() == "Z12/(4)");
  CHECK(q.representative == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(q.lift_ideal(1) == idx(*z12, {"2"}));
  CHECK(q.push_ideal(idx(*z12, {"2"})) == 1);
  CHECK(q.push_ideal(idx(*z12, {"6"})) == 1);

  const auto same = make_quotient(z12, zero_ideal(*z12));
  CHECK(same.ring->order() == 12);
  CHECK(same.ring->lattice().size() == z12->lattice().size());

  const auto z6 = make_zn(6);
  const auto q3 = make_quotient(z6, gen(*z6, {"3"}));
  CHECK(q3.ring->order() == 3);
  CHECK(q3.ring->lattice().size() == 2);

  const auto z8 = make_zn(8);
  CHECK(make_quotient(z8, gen(*z8, {"4"})).nonunit_preserving);
  CHECK_THROWS_AS(make_quotient(z8, whole_ring(*z8)), PreconditionError);
}

TEST_CASE("modules and trivial extensions") {
  const auto z2 = make_zn(2);
  const auto t2 = make_trivial_extension(z2, make_regular_module(z2));
  CHECK(t2.ring->order() == 4);
  CHECK(is_local(*t2.ring));
  const auto x = t2.encode(el(*z2, "0"), 1);
  CHECK(t2.ring->mul(x, x) == t2.ring->zero());
  CHECK(t2.ring->label() == "triv(Z2,reg)");

  const auto z4 = make_zn(4);
  const auto E = make_regular_module(z4);
  const auto t4 = make_trivial_extension(z4, E);
  CHECK(t4.ring->order() == 16);
  const auto two = ElementSet::of(4, {0, 2});
  CHECK(is_ideal_pair(gen(*z4, {"2"}), *E, two));
  CHECK(is_ideal_pair(whole_ring(*z4), *E, ElementSet::full(4)));
  CHECK_FALSE(is_ideal_pair(whole_ring(*z4), *E, two));
  CHECK(module_colon(*E, two, el(*z4, "3")) == two);
  CHECK(module_colon(*E, two, el(*z4, "2")) == ElementSet::full(4));
  CHECK_THROWS_AS(module_colon(*E, ElementSet::of(4, {0, 1}), el(*z4, "1")), PreconditionError);

  const auto K = t4.pair_ideal(idx(*z4, {"2"}), two);
  CHECK(t4.ring->lattice()[K].members() == t4.pair_set(gen(*z4, {"2"}).members(), two));
  const auto parts = t4.decompose(K);
  REQUIRE(parts.has_value());
  CHECK(parts->first == idx(*z4, {"2"}));
  CHECK(parts->second == two);
  CHECK(t4.first_projection(K) == idx(*z4, {"2"}));
  CHECK_THROWS_AS(t4.pair_ideal(idx(*z4, {"2"}), ElementSet::of(4, {0})), PreconditionError);

  for (std::uint32_t e = 0; e < 4; ++e) CHECK(t4.ring->is_unit(t4.encode(z4->one(), e)));
  for (std::uint32_t i = 0; i < 16; ++i) {
    const auto [a, e] = t4.decode(Element{i});
    CHECK(t4.encode(a, e).index == i);
  }

  const auto Q = make_quotient_module(z4, gen(*z4, {"2"}));
  CHECK(Q->order() == 2);
  CHECK(Q->submodules().size() == 2);
  CHECK(E->submodules().size() == 3);
  CHECK(E->ideal_times_module(gen(*z4, {"2"})) == two);
  const auto tq = make_trivial_extension(z4, Q);
  CHECK(tq.ring->label() == "triv(Z4,quot:(2))");

  // Lattice agrees with the subset filter.
  std::vector<std::vector<std::uint32_t>> lib;
  for (const auto& I : all_ideals(*t4.ring)) lib.push_back(I.member_list());
  auto orc = oracle::subset_filter_ideals(*t4.ring);
  std::sort(lib.begin(), lib.end());
  std::sort(orc.begin(), orc.end());
  CHECK(lib == orc);
}

TEST_CASE("multiplicative sets and localization") {
  const auto z12 = make_zn(12);
  const auto units_only = MultiplicativeSet::generated_by(z12, {});
  CHECK(units_only.members.to_vector() == std::vector<std::uint32_t>{1});
  const auto l0 = localize(z12, units_only);
  CHECK(l0.kernel.count() == 1);
  CHECK(l0.ring->order() == 12);

  const auto S = MultiplicativeSet::generated_by(z12, {el(*z12, "3")});
  CHECK(S.is_valid());
  const auto l = localize(z12, S);
  CHECK(l.ring->order() == 4);
  CHECK(l.kernel == gen(*z12, {"4"}).members());
  CHECK(validate_hom(l.canonical_map()));
  CHECK(l.disjoint(idx(*z12, {"4"})));
  CHECK_FALSE(l.disjoint(idx(*z12, {"3"})));
  CHECK(l.extend(idx(*z12, {"3"})) == l.ring->lattice().whole_index());
  CHECK(l.contract(0) == idx(*z12, {"4"}));
  CHECK(l.ring->label() == "loc(Z12,3)");

  const auto P = MultiplicativeSet::complement_of_prime(z12, gen(*z12, {"2"}));
  CHECK(P.members.to_vector() == std::vector<std::uint32_t>{1, 3, 5, 7, 9, 11});
  CHECK(localize(z12, P).ring->order() == 4);
  CHECK_THROWS_AS(MultiplicativeSet::complement_of_prime(z12, gen(*z12, {"4"})), PreconditionError);
}

TEST_CASE("localization example on Z36") {
  const auto z36 = make_zn(36);
  const auto S = MultiplicativeSet::complement_of_prime(z36, gen(*z36, {"2"}));
  const auto loc = localize(z36, S);
  CHECK(loc.kernel == gen(*z36, {"4"}).members());
  CHECK(loc.ring->order() == 4);
  const auto plus3 = make_plus_fixed(z36, gen(*z36, {"3"}));
  const auto I = gen(*z36, {"6"});
  const auto v = is_1_absorbing_delta_primary(I, plus3);
  CHECK_FALSE(v.holds);
  CHECK(testing::names_of(*z36, v.witness) == std::vector<std::string>{"3", "3", "2"});
  const auto dS = induced_localization(plus3, loc).delta;
  const auto& LL = loc.ring->lattice();
  CHECK(is_1_absorbing_delta_primary(LL[loc.extend(z36->lattice().index_of(I))], dS));
}

TEST_CASE("product labels need parentheses") {
  CHECK(has_top_level_product("Z2xZ3"));
  CHECK_FALSE(has_top_level_product("Z2[x]/(x^2)"));
  CHECK_FALSE(has_top_level_product("triv(Z2xZ2,reg)"));
}
