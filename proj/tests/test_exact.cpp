#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewnomial/exact.hpp"
#include "fewnomial/linalg.hpp"

using namespace fewnomial;

TEST_CASE("rationals are canonical") {
  CHECK(BigRational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
  CHECK(BigRational(BigInt(0), BigInt(7)) == BigRational(0));
  CHECK(BigRational::parse("10/4") == BigRational(BigInt(5), BigInt(2)));
  CHECK(BigRational::parse("-7").is_integer());
  CHECK(BigRational::parse("+3/9").to_string() == "1/3");
  CHECK_THROWS_AS(BigRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(BigRational::parse(""), ParseError);
}

TEST_CASE("rational arithmetic and ordering") {
  const BigRational a = BigRational::parse("1/3"), b = BigRational::parse("-1/6");
  CHECK(a + b == BigRational::parse("1/6"));
  CHECK(a * b == BigRational::parse("-1/18"));
  CHECK(a / b == BigRational(-2));
  CHECK(b < a);
  CHECK(b.abs() == BigRational::parse("1/6"));
  CHECK(b.sign() == -1);
  BigRational c = a;
  CHECK_THROWS_AS(c /= BigRational(0), std::domain_error);
}

TEST_CASE("ord_p") {
  CHECK(ord_p(BigRational(50), 5).value() == BigRational(2));
  CHECK(ord_p(BigRational(BigInt(3), BigInt(125)), 5).value() == BigRational(-3));
  CHECK(ord_p(BigRational(7), 5).value() == BigRational(0));
  CHECK(ord_p(BigRational(0), 5).is_infinite());
  CHECK(ord_p(BigRational(0), 5).to_string() == "+inf");
  CHECK(ord_p_nonzero(BigRational(109375), 5) == 6);
  CHECK_THROWS_AS(ord_p(BigRational(4), 6), std::invalid_argument);
  CHECK_THROWS_AS(ord_p(BigRational(4), 1), std::invalid_argument);
}

TEST_CASE("extended valuations") {
  const auto inf = ExtendedValuation::infinity();
  const ExtendedValuation two(BigRational(2));
  CHECK(two < inf);
  CHECK((two + inf).is_infinite());
  CHECK((two + two).value() == BigRational(4));
  CHECK_THROWS(inf.value());
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("integer helpers") {
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(3, 4) == 0);
  CHECK(pow_int(BigInt(5), 6) == 15625);
}

TEST_CASE("linear algebra") {
  const QMatrix a = {{BigRational(2), BigRational(0)}, {BigRational(-1), BigRational(1)}};
  CHECK(determinant(a) == BigRational(2));
  const auto x = solve_square(a, {BigRational(1), BigRational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == BigRational::parse("1/2"));
  CHECK((*x)[1] == BigRational::parse("3/2"));
  const QMatrix singular = {{BigRational(1), BigRational(2)}, {BigRational(2), BigRational(4)}};
  CHECK_FALSE(solve_square(singular, {BigRational(1), BigRational(0)}));
  CHECK(rank(singular, 2) == 1);
  const auto ns = nullspace(singular, 2);
  REQUIRE(ns.size() == 1);
  CHECK(dot(singular[0], ns[0]).is_zero());
}

TEST_CASE("affine frames") {
  const std::vector<QPoint> collinear = {{BigRational(0), BigRational(0), BigRational(1)},
                                         {BigRational(1), BigRational(2), BigRational(1)},
                                         {BigRational(2), BigRational(4), BigRational(1)}};
  const AffineFrame f = affine_frame(collinear);
  CHECK(f.dim == 1);
  CHECK(f.coordinates.size() == 1);
}
