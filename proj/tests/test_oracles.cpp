#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewnomial/oracles.hpp"

using namespace fewnomial;

namespace {

QPoint q(std::initializer_list<const char*> xs) {
  QPoint out;
  for (const char* x : xs) out.push_back(BigRational::parse(x));
  return out;
}

}  // namespace

TEST_CASE("binomial systems") {
  const auto b = binomial_system(parse_system("x1^2 - 5; x2 - 5*x1", 2), 5);
  const auto s = binomial_solve(b);
  REQUIRE(s);
  CHECK(s->v == q({"1/2", "3/2"}));
  CHECK(s->count == 2);

  const auto one = binomial_solve(binomial_system(parse_system("x1 - 250", 1), 5));
  REQUIRE(one);
  CHECK(one->v == q({"3"}));
  CHECK(one->count == 1);

  const auto laurent = binomial_solve(binomial_system(parse_system("x1*x2 - 1; x1*x2^-1 - 7", 2, true), 7));
  REQUIRE(laurent);
  CHECK(laurent->v == q({"1/2", "-1/2"}));
  CHECK(laurent->count == 2);

  CHECK_FALSE(binomial_solve(binomial_system(parse_system("x1*x2 - 1; x1^2*x2^2 - 3", 2), 3)));
  CHECK_THROWS_AS(binomial_system(parse_system("x1 + x2 + 1; x1 - x2", 2), 3), std::invalid_argument);
  CHECK_THROWS_AS(binomial_system(parse_system("x1 - 1", 1), 9), std::invalid_argument);
}

TEST_CASE("product polynomials") {
  const auto a = product_polynomial({BigRational(5), BigRational::parse("1/5"), BigRational(3)}, 5);
  CHECK_FALSE(a.support_collapsed);
  REQUIRE(a.expected.size() == 3);
  CHECK(a.expected[0] == PolygonSegment{BigRational(-1), 1});
  CHECK(a.expected[1] == PolygonSegment{BigRational(0), 1});
  CHECK(a.expected[2] == PolygonSegment{BigRational(1), 1});
  CHECK(univariate_polygon(a.polynomial, 5) == a.expected);

  const auto b = product_polynomial({BigRational(5), BigRational(5)}, 5);
  REQUIRE(b.expected.size() == 1);
  CHECK(b.expected[0] == PolygonSegment{BigRational(1), 2});

  const auto c = product_polynomial({BigRational(2), BigRational(3)}, 5);
  REQUIRE(c.expected.size() == 1);
  CHECK(c.expected[0] == PolygonSegment{BigRational(0), 2});

  // (x - 1)(x + 1) = x^2 - 1: the linear coefficient cancels.
  CHECK(product_polynomial({BigRational(1), BigRational(-1)}, 3).support_collapsed);
  CHECK_THROWS_AS(product_polynomial({BigRational(0)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(product_polynomial({}, 3), std::invalid_argument);
}

TEST_CASE("mod p^k counts") {
  const auto boolean = exhaustive_count_mod_pk(parse_system("x1^2 - x1; x2^2 - x2", 2), 2, 3);
  CHECK(boolean.certified == 4);
  CHECK(boolean.uncertified == 0);
  CHECK(boolean.certified_torus == 1);

  CHECK(exhaustive_count_mod_pk(parse_system("x1^2 - 2", 1), 5, 2).certified == 0);
  CHECK(exhaustive_count_mod_pk(parse_system("x1 - 7", 1), 3, 2).certified == 1);
  // x^2 - 4 has the two roots +-2 in Z_3.
  CHECK(exhaustive_count_mod_pk(parse_system("x1^2 - 4", 1), 3, 3).certified == 2);

  // x^2 has a double root: residues exist but none is certified.
  const auto dbl = exhaustive_count_mod_pk(parse_system("x1^2", 1), 3, 2);
  CHECK(dbl.certified == 0);
  CHECK(dbl.uncertified == dbl.residues);
  CHECK(dbl.residues == 3);  // 0, 3, 6 square to 0 mod 9

  CHECK_THROWS_AS(exhaustive_count_mod_pk(parse_system("x1 - 1; x2 - 1", 2), 5, 6), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_count_mod_pk(parse_system("1/2*x1 - 1", 1), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_count_mod_pk(parse_system("3@1*x1 - 1", 1), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_count_mod_pk(parse_system("x1 - x2", 2), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_count_mod_pk(parse_system("x1 - 1", 1), 4, 1), std::invalid_argument);
}
