#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/constructions.hpp"

using namespace ringlab;
using testing::el;
using testing::gen;
using testing::names_of;

TEST_CASE("Z_n construction") {
  const auto z2 = make_zn(2);
  CHECK(z2->order() == 2);
  CHECK(z2->label() == "Z2");
  CHECK(z2->is_unit(el(*z2, "1")));
  CHECK(is_field(*z2));

  const auto z4 = make_zn(4);
  CHECK(is_local(*z4));
  CHECK(maximal_ideals(*z4).front().member_list() == std::vector<std::uint32_t>{0, 2});
  const auto jac = jacobson_radical(*z4);
  CHECK(ideal_product(jac, jac).is_zero());

  const auto z8 = make_zn(8);
  CHECK(z8->lattice().size() == 4);
  CHECK(is_chained(*z8));

  CHECK_THROWS_AS(make_zn(1), InvalidOrder);
  CHECK_THROWS_AS(make_zn(0), InvalidOrder);
}

TEST_CASE("arithmetic and names") {
  const auto z12 = make_zn(12);
  CHECK(z12->name(z12->add(el(*z12, "7"), el(*z12, "8"))) == "3");
  CHECK(z12->name(z12->mul(el(*z12, "5"), el(*z12, "7"))) == "11");
  CHECK(z12->name(z12->neg(el(*z12, "5"))) == "7");
  CHECK(z12->name(z12->from_integer(25)) == "1");
  CHECK(z12->name(z12->power(el(*z12, "2"), 3)) == "8");
  Element e;
  CHECK_FALSE(z12->find_by_name("x", e));
  CHECK_THROWS_AS(z12->require(Element{12}), PreconditionError);
}

TEST_CASE("units") {
  CHECK(names_of(*make_zn(12), units(*make_zn(12))) == std::vector<std::string>{"1", "5", "7", "11"});
  CHECK(names_of(*make_zn(2), units(*make_zn(2))) == std::vector<std::string>{"1"});
  CHECK(names_of(*make_zn(4), units(*make_zn(4))) == std::vector<std::string>{"1", "3"});
  for (long long n = 2; n <= 30; ++n) {
    const auto r = make_zn(n);
    std::vector<Element> expected;
    for (long long a = 0; a < n; ++a)
      if (std::gcd(a, n) == 1) expected.push_back(el(*r, std::to_string(a)));
    CHECK(units(*r) == expected);
    CHECK(units(*r).size() + nonunits(*r).size() == r->order());
  }
}

TEST_CASE("polynomial quotients") {
  const auto f4 = make_poly_quotient(2, {1, 1, 1});
  CHECK(f4->order() == 4);
  CHECK(is_field(*f4));
  CHECK(f4->label() == "Z2[x]/(x^2+x+1)");

  const auto c4 = make_poly_quotient(2, {0, 0, 1});
  CHECK(c4->order() == 4);
  CHECK(is_local(*c4));
  CHECK(is_chained(*c4));
  REQUIRE(c4->lattice().size() == 3);
  CHECK(c4->lattice()[1].to_string() == "(x)");

  const auto z3 = make_poly_quotient(3, {0, 1});
  CHECK(z3->order() == 3);
  CHECK(z3->same_tables(*make_zn(3)));

  CHECK_FALSE(is_field(*make_poly_quotient(2, {1, 0, 1})));  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(make_poly_quotient(4, {1, 1}), InvalidModulus);
  CHECK_THROWS_AS(make_poly_quotient(2, {1, 0, 2}), InvalidPolynomial);
  CHECK_THROWS_AS(make_poly_quotient(2, {1}), InvalidPolynomial);
  CHECK(poly_to_string({1, 0, 1}) == "x^2+1");
  CHECK(poly_to_string({0, 1, 0, 1}) == "x^3+x");
}

TEST_CASE("table validation") {
  // Z2 addition with a multiplication table lacking an identity.
  std::vector<std::uint32_t> add = {0, 1, 1, 0};
  std::vector<std::uint32_t> mul_bad = {0, 0, 0, 0};
  CHECK_THROWS_AS(FiniteRing::create("bad", 2, add, mul_bad, 0, 1), InvalidStructure);
  std::vector<std::uint32_t> mul = {0, 0, 0, 1};
  CHECK_NOTHROW(FiniteRing::create("ok", 2, add, mul, 0, 1));
  CHECK_THROWS_AS(FiniteRing::create("zero", 2, add, mul, 0, 0), InvalidStructure);
  std::vector<std::uint32_t> add_bad = {0, 1, 1, 1};
  CHECK_THROWS_AS(FiniteRing::create("bad-add", 2, add_bad, mul, 0, 1), InvalidStructure);
  CHECK_THROWS_AS(FiniteRing::create("short", 2, {0, 1}, mul, 0, 1), InvalidStructure);
}

TEST_CASE("local rings, Jacobson radical, chained, spectrum") {
  const auto z12 = make_zn(12);
  std::vector<std::string> max;
  for (const auto& m : maximal_ideals(*z12)) max.push_back(m.to_string());
  CHECK(max == std::vector<std::string>{"(3)", "(2)"});
  CHECK(jacobson_radical(*z12) == gen(*z12, {"6"}));
  CHECK_FALSE(is_local(*z12));
  CHECK_FALSE(is_chained(*z12));
  CHECK(spectrum(*z12).size() == 2);

  const auto z8 = make_zn(8);
  CHECK(maximal_ideals(*z8).size() == 1);
  CHECK(jacobson_radical(*z8) == gen(*z8, {"2"}));
  CHECK(is_local(*z8));
  CHECK(is_chained(*z8));
  REQUIRE(spectrum(*z8).size() == 1);
  CHECK(spectrum(*z8)[0] == gen(*z8, {"2"}));

  const auto f4 = make_poly_quotient(2, {1, 1, 1});
  CHECK(jacobson_radical(*f4).is_zero());
  CHECK(is_local(*f4));
  CHECK(is_chained(*f4));

  const auto p = make_product(make_zn(2), make_zn(2));
  const auto spec = spectrum(*p.ring);
  REQUIRE(spec.size() == 2);
  for (const auto& s : spec) CHECK(s.size() == 2);
  CHECK(spec[0] != spec[1]);

  for (long long n = 2; n <= 40; ++n) CHECK(is_local(*make_zn(n)) == nonunits_form_ideal(*make_zn(n)));
}

TEST_CASE("homomorphisms") {
  const auto z12 = make_zn(12);
  const auto q = make_quotient(z12, gen(*z12, {"4"}));
  CHECK(validate_hom(q.projection));
  CHECK(is_surjective(q.projection));
  CHECK(kernel(q.projection) == gen(*z12, {"4"}));
  CHECK(hom_preimage(q.projection, gen(*q.ring, {"[2]"})) == gen(*z12, {"2"}));
  CHECK(hom_image(q.projection, gen(*z12, {"2"})) == gen(*q.ring, {"[2]"}));

  const auto id = identity_hom(z12);
  for (const auto& J : z12->lattice().ideals()) CHECK(hom_preimage(id, J) == J);
  CHECK(nonunit_preserving(id));

  const auto z6 = make_zn(6);
  const auto q6 = make_quotient(z6, gen(*z6, {"3"}));
  CHECK_FALSE(nonunit_preserving(q6.projection));
  REQUIRE(nonunit_preservation_witness(q6.projection).has_value());
  CHECK(z6->name(*nonunit_preservation_witness(q6.projection)) == "2");
  CHECK(q6.ring->is_unit(q6.projection(el(*z6, "4"))));
  CHECK_FALSE(q6.nonunit_preserving);

  RingHom bad{z12, z12, std::vector<std::uint32_t>(12, 0)};
  CHECK_FALSE(validate_hom(bad));
  CHECK_THROWS_AS(require_hom(bad), HomError);
  RingHom doubling{z12, z12, {}};
  for (std::uint32_t a = 0; a < 12; ++a) doubling.map.push_back(z12->add(Element{a}, Element{a}).index);
  const auto v = find_hom_violation(doubling);
  REQUIRE(v.has_value());
}
