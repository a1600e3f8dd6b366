#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "elicit/rng.hpp"
#include "elicit/score.hpp"
#include "oracles.hpp"

using namespace elicit;

namespace {

const double kAlpha = 0.05;

ScoreSpec cone_score() { return ScoreSpec::counterexample_cone(kAlpha); }

// Random score spec over catalogue functions whose tail domain is all of R.
ScoreSpec random_score(Rng& rng) {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(rng.uniform(0.03, 0.4));
  switch (rng.uniform_int(0, 2)) {
    case 0:
      s.g.push_back(ScoreFn::zero());
      break;
    case 1:
      s.g.push_back(ScoreFn::linear(rng.uniform(-1, 1), rng.uniform(0, 2)));
      break;
    default:
      s.g.push_back(ScoreFn::exponential());
      break;
  }
  s.gk = ScoreFn::exponential();
  return s;
}

}  // namespace

TEST_CASE("cone counterexample pointwise values") {
  const ScoreSpec s = cone_score();
  CHECK(eval_score(s, Vec{0.0, 0.0}, 0.0) == -2.0);
  CHECK(std::fabs(eval_score(s, Vec{2.0, -1.8}, 0.0) - (-11.610109)) < 5e-4);
  CHECK(eval_score(s, Vec{0.0, 0.0}, 1.0) == -2.0);
}

TEST_CASE("general form specializes to the hand-expanded counterexample formula") {
  const ScoreSpec s = cone_score();
  Rng rng(31);
  for (int it = 0; it < 300; ++it) {
    const double x1 = rng.uniform(-1.0, 3.0);
    const double x2 = rng.uniform(-3.0, 2.0);
    const double y = rng.uniform(-3.0, 3.0);
    const double lhs = eval_score(s, Vec{x1, x2}, y);
    const double rhs = oracle::counterexample_pointwise(kAlpha, x1, x2, y);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
  }
}

TEST_CASE("score domain violations throw") {
  const ScoreSpec s = ScoreSpec::var_es_log(kAlpha);
  CHECK_THROWS_AS(eval_score(s, Vec{0.0, 0.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_score(s, Vec{0.0, 0.5}, 0.0), std::domain_error);
  CHECK_NOTHROW(eval_score(s, Vec{0.0, -0.5}, 0.0));
}

TEST_CASE("expected score under a point mass equals the pointwise score") {
  Rng rng(32);
  for (int it = 0; it < 50; ++it) {
    const ScoreSpec s = random_score(rng);
    const double c = rng.uniform(-2.0, 2.0);
    const Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double lhs = expected_score(s, x, Distribution::point_mass(c));
    const double rhs = eval_score(s, x, c);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
  }
}

// Dual route: adaptive quadrature inside expected_score against the textbook
// partial-moment closed form. The frozen constants were produced by the
// closed-form oracle and pin the implementation.
TEST_CASE("counterexample expected scores, quadrature vs closed form") {
  const ScoreSpec s = cone_score();
  const Distribution f = Distribution::normal(0.2, 0.1);
  const Vec t = evaluate_T(s.functional, f);

  const double at_t = expected_score(s, t, f, 1e-11);
  const double at_t_oracle =
      oracle::counterexample_expected_score(kAlpha, t[0], t[1], 0.2, 0.1);
  CHECK(at_t == doctest::Approx(at_t_oracle).epsilon(1e-8));
  CHECK(at_t == doctest::Approx(-2.0007471585).epsilon(1e-8));

  const double at_alt = expected_score(s, Vec{2.0, -1.8}, f, 1e-11);
  const double at_alt_oracle =
      oracle::counterexample_expected_score(kAlpha, 2.0, -1.8, 0.2, 0.1);
  CHECK(at_alt == doctest::Approx(at_alt_oracle).epsilon(1e-8));
  CHECK(at_alt == doctest::Approx(-8.7279974671).epsilon(1e-8));

  // the inconsistency inequality
  CHECK(at_alt < at_t);
}

TEST_CASE("expected score agrees with the closed-form route everywhere") {
  const ScoreSpec s = cone_score();
  Rng rng(37);
  for (int it = 0; it < 50; ++it) {
    const double mu = rng.uniform(-1.0, 1.0);
    const double sigma = rng.uniform(0.1, 1.5);
    const Vec x{rng.uniform(-2.0, 3.0), rng.uniform(-3.0, 2.0)};
    const Distribution f = Distribution::normal(mu, sigma);
    const double got = expected_score(s, x, f, 1e-11);
    const double want =
        oracle::counterexample_expected_score(kAlpha, x[0], x[1], mu, sigma);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("expected score under atomic laws is the weighted pointwise sum") {
  Rng rng(38);
  for (int it = 0; it < 50; ++it) {
    const ScoreSpec s = random_score(rng);
    Vec atoms, weights;
    const int n = rng.uniform_int(2, 5);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      atoms.push_back(rng.uniform(-4.0, 4.0));
      weights.push_back(rng.uniform(0.1, 1.0));
      total += weights.back();
    }
    for (double& w : weights) w /= total;
    double fix = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) fix += weights[i];
    weights.back() = 1.0 - fix;
    const Distribution d = Distribution::discrete(atoms, weights);
    const Vec x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    double byhand = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      byhand += d.weights()[i] * eval_score(s, x, d.atom_values()[i]);
    }
    const double got = expected_score(s, x, d);
    CHECK(got == doctest::Approx(byhand).epsilon(1e-12));
  }
}

TEST_CASE("b_bound values and tail invariance") {
  const auto spec = FunctionalSpec::var_es(kAlpha);
  const Vec t{0.0, 0.0};
  CHECK(b_bound(spec, t, t) == 0.0);
  CHECK(b_bound(spec, Vec{2.0, 0.7}, t) == 38.0);
  CHECK(b_bound(spec, Vec{-1.0, 0.7}, t) == 1.0);
  // exact independence of the tail coordinate
  CHECK(b_bound(spec, Vec{2.0, -123.0}, t) ==
        b_bound(spec, Vec{2.0, 456.0}, t));
  const Vec tt{1.0, -1.5};
  CHECK(b_bound(spec, tt, tt) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("c_bound values and tail invariance") {
  const auto spec = FunctionalSpec::var_es(kAlpha);
  const auto sn = Distribution::normal(0.0, 1.0);
  const Vec t = evaluate_T(spec, sn);
  CHECK(c_bound(spec, t, sn) == doctest::Approx(-t[1]).epsilon(1e-12));
  CHECK(c_bound(spec, t, sn) == doctest::Approx(2.0627).epsilon(1e-4));
  CHECK(c_bound(spec, Vec{2.0, 9.0}, Distribution::point_mass(0.0)) == 38.0);
  CHECK(c_bound(spec, Vec{2.0, -1.0}, sn) == c_bound(spec, Vec{2.0, 7.0}, sn));
}

TEST_CASE("sandwich inequality over randomized laws and points") {
  Rng rng(33);
  const auto spec = FunctionalSpec::var_es(kAlpha);
  for (int it = 0; it < 1000; ++it) {
    const Distribution d = oracle::random_distribution(rng);
    const Vec t = evaluate_T(spec, d);
    const Vec z{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    const double c = c_bound(spec, z, d);
    const double b = b_bound(spec, z, t);
    CHECK(-t[1] <= c + 1e-9);
    CHECK(c <= b + 1e-9);
  }
  // equalities at z = t
  for (int it = 0; it < 50; ++it) {
    const Distribution d = oracle::random_distribution(rng);
    const Vec t = evaluate_T(spec, d);
    CHECK(std::fabs(c_bound(spec, t, d) + t[1]) <= 1e-9);
    CHECK(std::fabs(b_bound(spec, t, t) + t[1]) <= 1e-9);
  }
}

TEST_CASE("decomposition of a zero move is zero") {
  const ScoreSpec s = cone_score();
  const auto d = Distribution::normal(0.0, 1.0);
  const auto dec = score_diff_decomposition(s, Vec{1.0, -0.5}, Vec{1.0, -0.5},
                                            -0.5, d);
  CHECK(dec.r1 == 0.0);
  CHECK(dec.r2 == 0.0);
}

TEST_CASE("decomposition recovers the point-mass score difference") {
  const ScoreSpec s = cone_score();
  const auto d = Distribution::point_mass(0.0);
  const auto dec = score_diff_decomposition(s, Vec{2.0, -1.8}, Vec{0.0, 0.0},
                                            -1.8, d);
  CHECK(std::fabs(dec.total() - (-9.610109)) < 0.01);
}

TEST_CASE("decomposition equals the direct expected-score difference") {
  Rng rng(34);
  for (int it = 0; it < 200; ++it) {
    const ScoreSpec s = random_score(rng);
    const Distribution d = oracle::random_distribution(rng);
    const Vec zp{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const Vec z{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const double w =
        rng.uniform01() < 0.7 ? std::min(zp[1], z[1]) : rng.uniform(-3.0, 3.0);
    const auto dec = score_diff_decomposition(s, zp, z, w, d, 1e-10);
    const double direct =
        expected_score(s, zp, d, 1e-10) - expected_score(s, z, d, 1e-10);
    const double scale =
        std::max({1.0, std::fabs(expected_score(s, zp, d, 1e-10)),
                  std::fabs(expected_score(s, z, d, 1e-10))});
    CHECK(std::fabs(dec.total() - direct) <= 1e-6 * scale);
  }
}

TEST_CASE("decomposition handles atoms sitting exactly on the endpoints") {
  // I(a,b) is half-open: mass at the open endpoint stays out, mass at the
  // closed endpoint counts. Atoms are placed exactly at z_1 and z'_1.
  const ScoreSpec s = cone_score();
  const auto d = Distribution::discrete({0.25, 1.0, 2.0}, {0.4, 0.3, 0.3});
  for (const auto& [zp1, z1] : std::vector<std::pair<double, double>>{
           {2.0, 1.0}, {1.0, 2.0}, {0.25, 2.0}}) {
    const Vec zp{zp1, -0.7};
    const Vec z{z1, -1.1};
    const double w = std::min(zp[1], z[1]);
    const auto dec = score_diff_decomposition(s, zp, z, w, d);
    const double direct = expected_score(s, zp, d) - expected_score(s, z, d);
    CHECK(dec.total() == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("half-open slope intervals exclude the lower endpoint") {
  const ScoreSpec s = cone_score();
  // the derivative vanishes exactly at y = 0.5 for w = -0.5
  const auto closed = monotone_53(s, 1, -0.5, Interval::oriented(0.5, 2.0), 4);
  CHECK(closed.kind == Monotonicity::Increasing);
  Interval half = Interval::oriented(0.5, 2.0, Interval::Closure::HalfOpen);
  const auto open = monotone_53(s, 1, -0.5, half, 4);
  CHECK(open.kind == Monotonicity::StrictlyIncreasing);
}

TEST_CASE("decomposition for the normal counterexample pair") {
  const ScoreSpec s = cone_score();
  const auto f = Distribution::normal(0.2, 0.1);
  const Vec t = evaluate_T(s.functional, f);
  const Vec alt{2.0, -1.8};
  const double w = std::min(alt[1], t[1]);
  const auto dec = score_diff_decomposition(s, alt, t, w, f, 1e-11);
  const double direct =
      expected_score(s, alt, f, 1e-11) - expected_score(s, t, f, 1e-11);
  CHECK(dec.total() == doctest::Approx(direct).epsilon(1e-7));
  // computed difference of the two frozen values above
  CHECK(dec.total() == doctest::Approx(-6.7272503086).epsilon(1e-7));
}

TEST_CASE("slope-function classification") {
  const ScoreSpec s = cone_score();
  // derivative is (exp(w) - exp(-y))/alpha: positive iff y > -w
  const auto strict = monotone_53(s, 1, -0.5,
                                  Interval::oriented(0.6, 2.0), 101);
  CHECK(strict.kind == Monotonicity::StrictlyIncreasing);
  const auto boundary = monotone_53(s, 1, -0.5,
                                    Interval::oriented(0.5, 2.0), 101);
  CHECK(boundary.kind == Monotonicity::Increasing);
  const auto violated = monotone_53(s, 1, -0.5,
                                    Interval::oriented(0.0, 2.0), 101);
  CHECK(violated.kind == Monotonicity::Violated);
  CHECK(violated.violation_point < 0.5);

  ScoreSpec flat;
  flat.functional = FunctionalSpec::var_es(0.5);
  flat.g.push_back(ScoreFn::zero());
  flat.gk = ScoreFn::linear(0.0, 0.0);
  const auto constant =
      monotone_53(flat, 1, 0.0, Interval::oriented(-1.0, 1.0), 11);
  CHECK(constant.kind == Monotonicity::Increasing);
}

TEST_CASE("componentwise diagonal differences") {
  std::vector<ScoreFn> g{ScoreFn::linear(1.0, 0.0)};  // g == 1
  std::vector<std::function<double(double, double)>> V{
      [](double v, double y) { return (y <= v ? 1.0 : 0.0) - 0.5; }};
  CHECK(diagonal_score_diff(g, V, Vec{2.0}, Vec{2.0}, 1.0) == 0.0);
  CHECK(std::fabs(diagonal_score_diff(g, V, Vec{2.0}, Vec{0.0}, 1.0)) <=
        1e-12);
  CHECK(diagonal_score_diff(g, V, Vec{2.0}, Vec{0.0}, 3.0) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("potential-based differences reproduce squared error") {
  PhiFunction phi{
      [](std::span<const double> v) { return v[0] * v[0]; },
      [](std::span<const double> v) { return Vec{2.0 * v[0]}; }};
  const ScoreFn one = ScoreFn::linear(1.0, 0.0);
  const std::vector<ScoreFn> p{ScoreFn::linear(0.0, 1.0)};  // p(y) = y
  Rng rng(35);
  for (int it = 0; it < 100; ++it) {
    const double x = rng.uniform(-3, 3), z = rng.uniform(-3, 3),
                 y = rng.uniform(-3, 3);
    const double got = phi_score_diff(phi, one, p, Vec{x}, Vec{z}, y);
    const double want = (x - y) * (x - y) - (z - y) * (z - y);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(phi_score_diff(phi, one, p, Vec{1.0}, Vec{1.0}, 0.3) == 0.0);
}

TEST_CASE("potential differences are invariant under affine shifts of phi") {
  Rng rng(36);
  for (int k = 1; k <= 3; ++k) {
    for (int it = 0; it < 34; ++it) {
      Vec beta(k);
      for (double& b : beta) b = rng.uniform(-2.0, 2.0);
      const double alpha0 = rng.uniform(-2.0, 2.0);
      PhiFunction phi{
          [](std::span<const double> v) {
            double s = 0.0;
            for (double vi : v) s += vi * vi;
            return s;
          },
          [](std::span<const double> v) {
            Vec g(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) g[i] = 2.0 * v[i];
            return g;
          }};
      PhiFunction shifted{
          [beta, alpha0](std::span<const double> v) {
            double s = alpha0;
            for (std::size_t i = 0; i < v.size(); ++i) {
              s += v[i] * v[i] + beta[i] * v[i];
            }
            return s;
          },
          [beta](std::span<const double> v) {
            Vec g(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
              g[i] = 2.0 * v[i] + beta[i];
            }
            return g;
          }};
      const ScoreFn one = ScoreFn::linear(1.0, 0.0);
      std::vector<ScoreFn> p;
      for (int m = 1; m <= k; ++m) {
        p.push_back(ScoreFn::custom(
            "y^" + std::to_string(m),
            [m](double y) { return std::pow(y, m); }, {}, {}, false, false));
      }
      Vec x(k), z(k);
      for (int i = 0; i < k; ++i) {
        x[i] = rng.uniform(-2.0, 2.0);
        z[i] = rng.uniform(-2.0, 2.0);
      }
      const double y = rng.uniform(-2.0, 2.0);
      const double a = phi_score_diff(phi, one, p, x, z, y);
      const double b = phi_score_diff(shifted, one, p, x, z, y);
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }
}

TEST_CASE("score function catalogue") {
  const ScoreFn nl = ScoreFn::neg_log_neg();
  CHECK(nl.value(-1.0) == 0.0);
  CHECK(nl.deriv(-2.0) == 0.5);
  CHECK(!nl.in_domain(0.0));
  CHECK_THROWS_AS(nl.require_domain(0.5), std::domain_error);

  const ScoreFn pw = ScoreFn::power(0.5);  // -sqrt(-x)
  CHECK(pw.value(-4.0) == -2.0);
  CHECK(pw.deriv(-4.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(pw.strictly_convex);
  const ScoreFn inv = ScoreFn::power(-1.0);  // -1/x
  CHECK(inv.value(-2.0) == 0.5);
  CHECK(inv.deriv(-2.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(ScoreFn::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ScoreFn::power(1.5), std::invalid_argument);

  CHECK(ScoreFn::from_tag("exp").tag == "exp");
  CHECK(ScoreFn::from_tag("power:0.5").value(-4.0) == -2.0);
  CHECK(ScoreFn::from_tag("linear:1,2").value(2.0) == 5.0);
  CHECK_THROWS_AS(ScoreFn::from_tag("nope"), ConfigError);
}

TEST_CASE("spec validation rejects non-convex tail potentials") {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(0.05);
  s.g.push_back(ScoreFn::zero());
  s.gk = ScoreFn::custom("concave", [](double x) { return -x * x; },
                         [](double x) { return -2.0 * x; },
                         [](double) { return -2.0; }, false, false);
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.gk = ScoreFn::exponential();
  CHECK_NOTHROW(s.validate());
  s.g.clear();
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("offset a(y) shifts scores but not differences") {
  ScoreSpec s = cone_score();
  s.offset = ScoreFn::linear(0.3, 0.0);
  CHECK(eval_score(s, Vec{0.0, 0.0}, 0.0) == doctest::Approx(-1.7));
  const auto d = Distribution::normal(0.2, 0.1);
  ScoreSpec plain = cone_score();
  const double diff_with =
      expected_score(s, Vec{2.0, -1.8}, d) - expected_score(s, Vec{1.0, -0.5}, d);
  const double diff_plain = expected_score(plain, Vec{2.0, -1.8}, d) -
                            expected_score(plain, Vec{1.0, -0.5}, d);
  CHECK(diff_with == doctest::Approx(diff_plain).epsilon(1e-9));
}
