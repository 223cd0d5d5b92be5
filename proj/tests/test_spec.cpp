#include "doctest.h"
#include "helpers.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/query.hpp"
#include "ringlab/ring_spec.hpp"

using namespace ringlab;

TEST_CASE("ring specs") {
  CHECK(parse_ring("Z12")->ring->order() == 12);
  CHECK(parse_ring(" Z12 ")->ring->label() == "Z12");
  CHECK(parse_ring("Z2[x]/(x^2+x+1)")->ring->order() == 4);
  CHECK(parse_ring("Z2[x]/(x^2 + x + 1)")->ring->label() == "Z2[x]/(x^2+x+1)");

  const auto p = parse_ring("Z4xZ9");
  CHECK(p->kind == BuiltRing::Kind::Product);
  CHECK(p->ring->order() == 36);
  CHECK(p->left->ring->label() == "Z4");

  const auto q = parse_ring("Z12/(4)");
  CHECK(q->kind == BuiltRing::Kind::Quotient);
  CHECK(q->ring->order() == 4);

  const auto qp = parse_ring("(Z2xZ4)/((0,2))");
  CHECK(qp->ring->order() == 4);

  const auto t = parse_ring("triv(Z4,reg)");
  CHECK(t->kind == BuiltRing::Kind::Trivial);
  CHECK(t->ring->order() == 16);
  CHECK(parse_ring("triv(Z4,quot:(2))")->ring->order() == 8);

  const auto l = parse_ring("loc(Z12,3)");
  CHECK(l->kind == BuiltRing::Kind::Localization);
  CHECK(l->ring->order() == 4);

  CHECK(parse_ring("Z2xZ2xZ2")->ring->order() == 8);
  CHECK(parse_ring(parse_ring("(Z2xZ2)xZ3")->provenance())->ring->same_tables(*parse_ring("(Z2xZ2)xZ3")->ring));
}

TEST_CASE("ring spec errors") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_ring(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
  };
  CHECK(position_of("Q3") == 0);
  CHECK(position_of("Z12)") == 3);
  CHECK(position_of("Z12/(5)") == 4);
  CHECK(position_of("Z12/(q)") == 5);
  CHECK(position_of("triv(Z4,foo)") == 8);
  CHECK(position_of("Z4x") == 3);
  CHECK(position_of("Z") == 1);
  CHECK(position_of("loc(Z12,0)") == 8);
  CHECK_THROWS_AS(parse_ring("Z1"), InvalidOrder);
  CHECK_THROWS_AS(parse_ring("Z4[x]/(x^2)"), InvalidModulus);
}

TEST_CASE("polynomials") {
  CHECK(parse_polynomial("x^2+x+1") == std::vector<long long>{1, 1, 1});
  CHECK(parse_polynomial("x^3") == std::vector<long long>{0, 0, 0, 1});
  CHECK(parse_polynomial("2*x + 3") == std::vector<long long>{3, 2});
  CHECK(parse_polynomial("x^2 - 1") == std::vector<long long>{-1, 0, 1});
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x y"), ParseError);
}

TEST_CASE("expansion specs") {
  const auto z36 = parse_ring("Z36");
  CHECK(parse_expansion("id", *z36).label() == "id");
  CHECK(parse_expansion("rad", *z36).label() == "rad");
  CHECK(parse_expansion("full", *z36).label() == "full");
  const auto plus = parse_expansion("plus:(2)", *z36);
  CHECK(plus.label() == "plus:(2)");
  CHECK(plus.at(testing::idx(*z36->ring, {"6"})) == testing::idx(*z36->ring, {"2"}));

  const auto p = parse_ring("Z4xZ9");
  CHECK(parse_expansion("prod(rad,id)", *p).label() == "prod(rad,id)");
  CHECK(parse_expansion("prod(plus:(2),full)", *p).at(0) == p->product->ideal_index(1, 2));

  const auto q = parse_ring("Z12/(6)");
  CHECK(parse_expansion("bar(rad)", *q).label() == "bar(rad,(6))");
  CHECK(parse_expansion("bar(rad,(6))", *q).at(0) == 0);
  CHECK_THROWS_AS(parse_expansion("bar(rad,(4))", *q), ParseError);

  const auto l = parse_ring("loc(Z12,3)");
  CHECK(parse_expansion("loc(id)", *l).label() == "loc(id,3)");
  CHECK_NOTHROW(parse_expansion("loc(id,3,9)", *l));
  CHECK_THROWS_AS(parse_expansion("loc(id,5)", *l), ParseError);

  const auto t = parse_ring("triv(Z4,reg)");
  CHECK(parse_expansion("triv(rad)", *t).label() == "triv(rad)");

  CHECK_THROWS_AS(parse_expansion("prod(id,id)", *z36), ParseError);
  CHECK_THROWS_AS(parse_expansion("sqrt", *z36), ParseError);
  CHECK_THROWS_AS(parse_expansion("plus:(x)", *z36), ParseError);
  CHECK_THROWS_AS(parse_expansion("id id", *z36), ParseError);
}

TEST_CASE("queries") {
  const auto q = Query::parse("1abs-delta-primary & !delta-primary");
  CHECK(q.depends_on_delta());
  CHECK(q.predicates().size() == 2);
  auto eval = [&](const Query& query, bool a, bool b) {
    return query.evaluate([&](Predicate p) { return p == Predicate::OneAbsorbingDeltaPrimary ? a : b; });
  };
  CHECK(eval(q, true, false));
  CHECK_FALSE(eval(q, true, true));
  CHECK_FALSE(eval(q, false, false));

  const auto prec = Query::parse("prime | maximal & !prime");
  const auto by_name = [](bool prime, bool maximal) {
    return [=](Predicate p) { return p == Predicate::Prime ? prime : maximal; };
  };
  CHECK(prec.evaluate(by_name(true, false)));
  CHECK(prec.evaluate(by_name(false, true)));
  CHECK_FALSE(prec.evaluate(by_name(false, false)));
  CHECK_FALSE(Query::parse("prime & (maximal | 2abs)").depends_on_delta());
  CHECK(Query::parse("!!prime").evaluate(by_name(true, false)));

  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      Query::parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
  };
  CHECK(position_of("prime &") == 7);
  CHECK(position_of("primes") == 0);
  CHECK(position_of("(prime") == 6);
  CHECK(position_of("prime maximal") == 6);
  CHECK(position_of("") == 0);
}
