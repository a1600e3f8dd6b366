#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "elicit/domain.hpp"
#include "elicit/functional.hpp"
#include "elicit/rng.hpp"
#include "oracles.hpp"

using namespace elicit;

TEST_CASE("T of a point mass is (c, c)") {
  const auto spec = FunctionalSpec::var_es(0.05);
  const Vec t = evaluate_T(spec, Distribution::point_mass(0.0));
  CHECK(t[0] == 0.0);
  CHECK(t[1] == 0.0);
  const Vec t3 = evaluate_T(spec, Distribution::point_mass(3.0));
  CHECK(t3[0] == 3.0);
  CHECK(t3[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("T reference values") {
  const auto spec = FunctionalSpec::var_es(0.05);
  const Vec t = evaluate_T(spec, Distribution::normal(0.2, 0.1));
  CHECK(std::fabs(t[0] - 0.0355) <= 5e-4);
  CHECK(std::fabs(t[1] - (-0.0063)) <= 5e-4);

  const Vec ts = evaluate_T(spec, Distribution::normal(0.0, 1.0));
  CHECK(std::fabs(ts[0] - (-1.64)) <= 5e-3);
  CHECK(std::fabs(ts[1] - (-2.06)) <= 5e-3);
  // tail mean of the standard normal: -pdf(q)/alpha
  CHECK(ts[1] ==
        doctest::Approx(-oracle::std_normal_pdf(ts[0]) / 0.05).epsilon(1e-9));
}

TEST_CASE("tail component cross-checked against quadrature") {
  const auto spec = FunctionalSpec::var_es(0.1);
  for (const auto& d : {Distribution::normal(0.3, 0.7),
                        Distribution::normal(-1.0, 2.0)}) {
    const Vec t = evaluate_T(spec, d);
    const double tail_mean =
        oracle::simpson(
            [&](double y) {
              const double z = (y - d.normal_mu()) / d.normal_sigma();
              return y * oracle::std_normal_pdf(z) / d.normal_sigma();
            },
            d.normal_mu() - 14.0 * d.normal_sigma(), t[0], 1e-12) /
        0.1;
    CHECK(t[1] == doctest::Approx(tail_mean).epsilon(1e-7));
  }
}

TEST_CASE("T lies in the maximal action domain") {
  Rng rng(21);
  const auto spec2 = FunctionalSpec::var_es(0.05);
  const auto spec3 = FunctionalSpec::make({0.1, 0.5}, {0.4, 0.6});
  const Domain a02 = Domain::a0(spec2);
  const Domain a03 = Domain::a0(spec3);
  for (int it = 0; it < 100; ++it) {
    const Distribution d = oracle::random_distribution(rng);
    CHECK(a02.contains(evaluate_T(spec2, d)));
    const Vec t3 = evaluate_T(spec3, d);
    // allow one ulp of slack on the A0 boundary
    CHECK(t3[0] <= t3[1] + 1e-12);
    CHECK(t3[2] <= 0.4 * t3[0] + 0.6 * t3[1] + 1e-12);
    (void)a03;
  }
}

TEST_CASE("location equivariance on normals") {
  const auto spec = FunctionalSpec::var_es(0.05);
  Rng rng(22);
  for (int it = 0; it < 20; ++it) {
    const double mu = rng.uniform(-2.0, 2.0);
    const double sigma = rng.uniform(0.2, 2.0);
    const double c = rng.uniform(-3.0, 3.0);
    const Vec a = evaluate_T(spec, Distribution::normal(mu, sigma));
    const Vec b = evaluate_T(spec, Distribution::normal(mu + c, sigma));
    CHECK(b[0] == doctest::Approx(a[0] + c).epsilon(1e-9));
    CHECK(b[1] == doctest::Approx(a[1] + c).epsilon(1e-9));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(FunctionalSpec::make({0.5, 0.1}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionalSpec::make({0.1, 0.1}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionalSpec::make({0.1}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(FunctionalSpec::make({0.1, 0.2}, {0.5, 0.6}),
                  std::invalid_argument);
  // the normalization check can be relaxed explicitly
  const auto s = FunctionalSpec::make({0.1, 0.2}, {0.5, 0.6}, false);
  CHECK(s.k() == 3);
  CHECK_THROWS_AS(FunctionalSpec::make({1.2}, {1.0}), std::invalid_argument);
}
