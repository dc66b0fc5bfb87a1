#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fewnomial/bounds.hpp"

using namespace fewnomial;

namespace {

double approx(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("field descriptors") {
  CHECK_NOTHROW((FieldDescriptor{2, 4, 2, 2}.validate()));
  CHECK_THROWS_AS((FieldDescriptor{2, 4, 2, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FieldDescriptor{6, 1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FieldDescriptor{2, 0, 0, 1}.validate()), std::invalid_argument);
}

TEST_CASE("descartes") {
  CHECK(descartes_bound(1) == 1);
  CHECK(descartes_bound(2) == 3);
  CHECK(descartes_bound(10) == 19);
  CHECK_THROWS_AS(descartes_bound(0), std::invalid_argument);
}

TEST_CASE("lenstra local") {
  CHECK(lenstra_local(FieldDescriptor{7, 3, 3, 1}, 1) == 1);
  CHECK(lenstra_local(FieldDescriptor{7, 3, 3, 1}, 0) == 1);
  CHECK(approx(lenstra_local(FieldDescriptor{2, 1, 1, 1}, 2)) == doctest::Approx(3.41851).epsilon(1e-5));
  const double ln3 = std::log(3.0);
  CHECK(approx(lenstra_local(FieldDescriptor{3, 2, 1, 2}, 2)) ==
        doctest::Approx(1 + 1.582 * 8 * (1 + std::log(1 / ln3) / ln3)));
  CHECK_THROWS_AS(lenstra_local(FieldDescriptor{3, 2, 2, 2}, 2), std::invalid_argument);
}

TEST_CASE("lenstra global") {
  CHECK(lenstra_global(1, 1) == 1);
  CHECK(approx(lenstra_global(1, 2)) == doctest::Approx(1 + 4.566 * 11 * 2 * 0.367));
  CHECK(approx(lenstra_global(2, 3)) == doctest::Approx(1 + 4.566 * 4 * 12 * 4 * (std::log(4.0) + 0.367)));
  CHECK_THROWS_AS(lenstra_global(0, 3), std::invalid_argument);
}

TEST_CASE("beta1 and gamma") {
  CHECK(beta1_default(0) == 0);
  CHECK(beta1_default(1) == 0);
  CHECK(approx(beta1_default(2)) == doctest::Approx(1.582 * (1 + 1.443 * 0.367)));
  CHECK(approx(beta1_default(3)) == doctest::Approx(1.582 * 2 * (1 + 1.443 * (std::log(2.0) + 0.367))));
  const auto oracle = default_beta_oracle();
  const auto g12 = gamma_bound(1, 2, oracle);
  REQUIRE(g12);
  CHECK(approx(*g12) == doctest::Approx(1 + approx(beta1_default(2))));
  CHECK_FALSE(gamma_bound(2, 2, oracle));
  for (unsigned n = 1; n <= 5; ++n) CHECK(*gamma_bound(n, 1, oracle) == 1);
  // Plugging beta'(2, 2) makes gamma(2, 2) effective:
  // 1 + C(2,1) C(2,2) beta'(1,2) + C(2,2) C(4,3) beta'(2,2).
  const auto plugged = gamma_bound(2, 2, beta_oracle_with({{{2, 2}, Real(3)}}));
  REQUIRE(plugged);
  CHECK(approx(*plugged) == doctest::Approx(1 + 2 * approx(beta1_default(2)) + 4 * 3));
  // User values cannot override beta'(n, 1) = 0.
  CHECK(*gamma_bound(2, 1, beta_oracle_with({{{2, 1}, Real(9)}})) == 1);
}

TEST_CASE("theorem and corollary bounds") {
  const Real g("2.5");
  CHECK(theorem_local_bound(FieldDescriptor{2, 1, 1, 1}, 1, g) == g);
  CHECK(theorem_local_bound(FieldDescriptor{2, 1, 1, 1}, 4, g) == g);
  CHECK(theorem_local_bound(FieldDescriptor{5, 1, 1, 1}, 2, g) == 16 * g);
  CHECK(theorem_local_bound(FieldDescriptor{2, 2, 1, 2}, 1, g) == 3 * g);
  CHECK(corollary_global_bound(1, 3, g) == g);
  CHECK(corollary_global_bound(2, 1, g) == 3 * g);
  CHECK(corollary_global_bound(2, 1, g, 1u) == 2 * g);
  CHECK_THROWS_AS(corollary_global_bound(2, 1, g, 3u), std::invalid_argument);
  CHECK_THROWS_AS(corollary_global_bound(2, 1, g, 0u), std::invalid_argument);
}

TEST_CASE("degree-bounded bounds") {
  const Real g(7);
  CHECK(degree_bounded_bound(2, 1, 1, 1, g, false) == g);
  CHECK(approx(degree_bounded_bound(3, 2, 1, 2, g, false)) == doctest::Approx(36 * 7));
  CHECK(degree_bounded_bound(5, 1, 1, 3, g, true) == corollary_global_bound(1, 3, g));
  CHECK_THROWS_AS(degree_bounded_bound(3, 0, 1, 2, g, false), std::invalid_argument);
}

TEST_CASE("counting formulas") {
  CHECK(valuation_count_bound(2, 6) == 220);
  CHECK(valuation_count_bound(1, 2) == 1);
  CHECK(valuation_count_bound(3, 1) == 0);
  CHECK(leading_class_count(FieldDescriptor{5, 1, 1, 1}) == 4);
  CHECK(leading_class_count(FieldDescriptor{2, 2, 2, 1}) == 2);
  CHECK(leading_class_count(FieldDescriptor{2, 2, 1, 2}) == 3);
  CHECK(leading_class_count(FieldDescriptor{3, 6, 3, 2}) == 8 * 81);
}

TEST_CASE("bounds are monotone in m") {
  for (unsigned m = 1; m < 12; ++m) {
    CHECK(lenstra_local(FieldDescriptor{3, 2, 2, 1}, m) <= lenstra_local(FieldDescriptor{3, 2, 2, 1}, m + 1));
    CHECK(lenstra_global(3, m) <= lenstra_global(3, m + 1));
    CHECK(*gamma_bound(1, m, default_beta_oracle()) <= *gamma_bound(1, m + 1, default_beta_oracle()));
    CHECK(lenstra_local(FieldDescriptor{2, 1, 1, 1}, m) >= 1);
  }
}

TEST_CASE("formula dispatch") {
  BoundParameters p;
  p.p = 2;
  p.d = 1;
  p.e = 1;
  p.f = 1;
  p.m = 2;
  const BoundReport r = evaluate_bound("lenstra-local", p);
  CHECK(r.value_text() == "3.41851");
  CHECK(r.inputs.size() == 5);

  BoundParameters g;
  g.n = 2;
  g.m = 2;
  CHECK(evaluate_bound("gamma", g).value_text() == "non-effective");
  g.beta[{2, 2}] = Real(1);
  CHECK(evaluate_bound("gamma", g).value);

  BoundParameters lc;
  lc.p = 5;
  lc.d = 1;
  lc.e = 1;
  lc.f = 1;
  CHECK(evaluate_bound("leading-classes", lc).value_text() == "4");

  BoundParameters t = lc;
  t.n = 2;
  t.m = 2;
  CHECK(evaluate_bound("theorem-local", t).value_text() == "non-effective");
  t.gamma = Real(1);
  CHECK(evaluate_bound("theorem-local", t).value_text() == "16");

  BoundParameters bad = lc;
  bad.e = 2;
  CHECK_THROWS_AS(evaluate_bound("leading-classes", bad), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_bound("no-such-formula", lc), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_bound("descartes", lc), std::invalid_argument);  // m missing
  CHECK(bound_formulas().size() == 10);
}

TEST_CASE("formatting") {
  CHECK(format_real(Real(1)) == "1");
  CHECK(format_real(Real("37.86591")) == "37.8659");
  CHECK(format_real(Real(0)) == "0");
}
