#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewnomial/sparse.hpp"

using namespace fewnomial;

namespace {
const char* const kF = "50*x1^18 - 3125*x2^9 - 162*x2; 49*x2^18 - 35*x1^9 - 109375*x1";
}

TEST_CASE("parse the worked example") {
  const auto g = parse_system(kF, 2);
  REQUIRE(g.size() == 2);
  CHECK(g.is_square());
  CHECK(g[0].size() == 3);
  CHECK(g[0].terms().at({18, 0}).coefficient == BigRational(50));
  CHECK(g[0].terms().at({0, 1}).coefficient == BigRational(-162));
  CHECK(g[1].terms().at({1, 0}).coefficient == BigRational(-109375));
  CHECK(sparsity(g) == 6);
  CHECK(total_term_count(g) == 6);
}

TEST_CASE("printing round-trips") {
  const auto g = parse_system(kF, 2);
  CHECK(parse_system(g.to_string(), 2) == g);
  const auto h = parse_system("x1 - 2; 3/4*x2^2 + x1*x2 + 1", 2);
  CHECK(parse_system(h.to_string(), 2) == h);
}

TEST_CASE("like terms combine") {
  const auto g = parse_system("x1 + 2*x1 - x2 + x2 + 1", 2);
  CHECK(g[0].size() == 2);
  CHECK(g[0].terms().at({1, 0}).coefficient == BigRational(3));
  CHECK_THROWS_AS(parse_system("x1 - x1", 1), ParseError);
}

TEST_CASE("newline separators and repeated factors") {
  const auto g = parse_system("x1*x1*x2\nx2^2 - 1", 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0].terms().count({2, 1}) == 1);
}

TEST_CASE("valuation overrides") {
  const auto g = parse_system("3@5/2*x1 + 7", 1);
  CHECK(g.has_valuation_override());
  const Term& t = g[0].terms().at({1});
  REQUIRE(t.valuation_override);
  CHECK(SparsePolynomial::term_valuation(t, 5) == BigRational::parse("5/2"));
  CHECK(SparsePolynomial::term_valuation(g[0].terms().at({0}), 7) == BigRational(1));
}

TEST_CASE("laurent exponents") {
  CHECK_THROWS_AS(parse_system("x1^-1 + 1", 1), ParseError);
  const auto g = parse_system("x1*x2^-1 - 3; x1^(-2) + x2", 2, true);
  CHECK(g.has_negative_exponent());
  CHECK(g[1].terms().count({-2, 0}) == 1);
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse_system("x3 + 1", 2), ParseError);
  CHECK_THROWS_AS(parse_system("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_system("0", 1), ParseError);
  CHECK_THROWS_AS(parse_system("0@1*x1 + 1", 1), ParseError);
  CHECK(parse_system("0*x1 + 1", 1)[0].is_constant());
  CHECK_THROWS_AS(parse_system("2*y1", 1), ParseError);
  try {
    parse_system("x1 + x1^^2", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("generic reduction") {
  const auto g = parse_system("x1 + x2 - 1; x1 - x2; x1*x2 - 3", 2);
  const Reduction a = generic_reduce(g, 7);
  const Reduction b = generic_reduce(g, 7);
  const Reduction c = generic_reduce(g, 8);
  CHECK(a.system.is_square());
  CHECK(a.system == b.system);
  CHECK_FALSE(a.system == c.system);
  CHECK(a.seed == 7);
  REQUIRE(a.multipliers.size() == 2);
  CHECK(a.multipliers[0].size() == 3);

  const auto square = parse_system("x1 - 1; x2 - 1", 2);
  CHECK(generic_reduce(square, 0).system == square);
  const auto under = parse_system("x1 - x2", 2);
  CHECK(generic_reduce(under, 3).underdetermined);
  CHECK_THROWS_AS(generic_reduce(parse_system("2@1*x1 - 1; x1 - 2", 1), 5), std::invalid_argument);
}

TEST_CASE("specialization to coordinate subspaces") {
  const auto g = parse_system("x1^2 - x1; x2^2 - x2 + x1", 2);
  const Specialization s = specialize_zero(g, {0});
  CHECK(s.surviving_variables == std::vector<std::size_t>{1});
  CHECK(s.any_vanished());
  CHECK_FALSE(s.polynomials[0]);
  REQUIRE(s.polynomials[1]);
  CHECK(s.polynomials[1]->variables() == 1);
  CHECK(s.nonzero().size() == 1);
  CHECK_THROWS_AS(specialize_zero(parse_system("x1^-1 + x2", 2, true), {0}), std::invalid_argument);
}
