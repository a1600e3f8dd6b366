#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "elicit/osband.hpp"
#include "elicit/rng.hpp"
#include "oracles.hpp"

using namespace elicit;

namespace {

const double kAlpha = 0.05;

std::vector<Distribution> probes() {
  return {Distribution::normal(0.0, 1.0), Distribution::normal(1.0, 1.5)};
}

double expected_identification(const FunctionalSpec& spec,
                               const Distribution& d, const Vec& x, int m) {
  // quadrature route, independent of vbar's closed forms
  Vec jumps(x.begin(), x.end() - 1);
  return d.expect({[&spec, &x, m](double y) {
                     return identification_eval(spec, x, y)[m];
                   },
                   jumps},
                  1e-10);
}

}  // namespace

TEST_CASE("identification has zero mean at the functional value") {
  const auto spec = FunctionalSpec::var_es(kAlpha);
  for (const auto& d : {Distribution::normal(0.2, 0.1),
                        Distribution::normal(0.0, 1.0),
                        Distribution::normal(-1.0, 2.0)}) {
    const Vec t = evaluate_T(spec, d);
    const Vec closed = vbar(spec, t, d);
    for (int m = 0; m < 2; ++m) {
      CHECK(std::fabs(closed[m]) <= 1e-10);
      CHECK(std::fabs(expected_identification(spec, d, t, m)) <= 1e-7);
    }
  }
}

TEST_CASE("tail identification mean is x2 - t2 at the quantile") {
  const auto spec = FunctionalSpec::var_es(kAlpha);
  const auto sn = Distribution::normal(0.0, 1.0);
  const Vec t = evaluate_T(spec, sn);
  for (double x2 : {-3.0, -1.0, 2.0}) {
    const Vec v = vbar(spec, Vec{t[0], x2}, sn);
    CHECK(v[1] == doctest::Approx(x2 - t[1]).epsilon(1e-9));
    CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("recovered h matches the hand-derived diagonals") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  for (const Vec& x : {Vec{1.0, -0.5}, Vec{2.0, -1.8}, Vec{0.7, 0.2}}) {
    const HMatrix rec = recover_h(cone, x, probes());
    double h11, h22;
    oracle::counterexample_h(kAlpha, x[0], x[1], &h11, &h22);
    CHECK(rec.h.at(0, 0) == doctest::Approx(h11).epsilon(1e-4));
    CHECK(rec.h.at(1, 1) == doctest::Approx(h22).epsilon(1e-4));
    CHECK(std::fabs(rec.h.at(0, 1)) <= 1e-4);
    CHECK(std::fabs(rec.h.at(1, 0)) <= 1e-4);
    const HMatrix ana = analytic_h(cone, x);
    CHECK(ana.h.at(0, 0) == doctest::Approx(h11).epsilon(1e-12));
    CHECK(ana.h.at(1, 1) == doctest::Approx(h22).epsilon(1e-12));
  }

  const ScoreSpec log_score = ScoreSpec::var_es_log(kAlpha);
  for (const Vec& x : {Vec{-1.0, -2.0}, Vec{0.5, -1.0}}) {
    const HMatrix rec = recover_h(log_score, x, probes());
    double h11, h22;
    oracle::var_es_log_h(kAlpha, x[1], &h11, &h22);
    CHECK(rec.h.at(0, 0) == doctest::Approx(h11).epsilon(1e-4));
    CHECK(rec.h.at(1, 1) == doctest::Approx(h22).epsilon(1e-4));
    CHECK(std::fabs(rec.h.at(0, 1)) <= 1e-4);
    CHECK(std::fabs(rec.h.at(1, 0)) <= 1e-4);
  }
}

TEST_CASE("recovery is stable across probe families") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  const Vec x{1.2, -0.8};
  const HMatrix a = recover_h(cone, x, probes());
  const HMatrix b = recover_h(
      cone, x, {Distribution::normal(-0.5, 0.6), Distribution::normal(0.7, 2.0)});
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(std::fabs(a.h.at(r, c) - b.h.at(r, c)) <= 1e-5);
    }
  }
}

TEST_CASE("three-component recovery matches the analytic diagonal") {
  ScoreSpec s;
  s.functional = FunctionalSpec::make({0.1, 0.5}, {0.4, 0.6});
  s.g = {ScoreFn::exponential(), ScoreFn::linear(0.0, 1.0)};
  s.gk = ScoreFn::exponential();
  const Vec x{-0.5, 0.3, -0.2};
  const std::vector<Distribution> ps{Distribution::normal(0.0, 1.0),
                                     Distribution::normal(0.8, 1.5),
                                     Distribution::normal(-0.7, 0.6)};
  // zero mean at the functional value, componentwise
  for (const auto& d : ps) {
    const Vec t = evaluate_T(s.functional, d);
    for (double v : vbar(s.functional, t, d)) CHECK(std::fabs(v) <= 1e-10);
  }
  const HMatrix rec = recover_h(s, x, ps);
  const HMatrix ana = analytic_h(s, x);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(std::fabs(rec.h.at(r, c) - ana.h.at(r, c)) <=
            1e-4 * std::max(1.0, std::fabs(ana.h.at(r, c))));
    }
  }
  // hand values: h_rr = G_r'(x_r) + (p_r/q_r) exp(x_3), h_33 = exp(x_3)
  CHECK(ana.h.at(0, 0) ==
        doctest::Approx(std::exp(-0.5) + 4.0 * std::exp(-0.2)).epsilon(1e-12));
  CHECK(ana.h.at(1, 1) ==
        doctest::Approx(1.0 + 1.2 * std::exp(-0.2)).epsilon(1e-12));
  CHECK(ana.h.at(2, 2) == doctest::Approx(std::exp(-0.2)).epsilon(1e-12));
}

TEST_CASE("a linear tail potential has vanishing h_kk") {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(kAlpha);
  s.g.push_back(ScoreFn::exponential());
  s.gk = ScoreFn::linear(0.0, 1.0);
  const HMatrix rec = recover_h(s, Vec{0.5, -0.5}, probes());
  CHECK(std::fabs(rec.h.at(1, 1)) <= 1e-5);
  CHECK(analytic_h(s, Vec{0.5, -0.5}).h.at(1, 1) == 0.0);
}

TEST_CASE("degenerate probe families are rejected") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  CHECK_THROWS_AS(
      recover_h(cone, Vec{1.0, -0.5},
                {Distribution::normal(0.0, 1.0), Distribution::normal(0.0, 1.0)}),
      RecoveryError);
  CHECK_THROWS_AS(recover_h(cone, Vec{1.0, -0.5},
                            {Distribution::normal(0.0, 1.0)}),
                  std::invalid_argument);
}

TEST_CASE("path integral reconstructs expected-score differences") {
  const ScoreSpec log_score = ScoreSpec::var_es_log(kAlpha);
  const auto sn = Distribution::normal(0.0, 1.0);
  PathPolyline path;
  path.vertices = {{-1.0, -3.0}, {0.5, -3.0}, {0.5, -1.2}};
  const double got =
      path_integral_diff(log_score, log_score.functional, path, sn);
  const double want = expected_score(log_score, Vec{0.5, -1.2}, sn, 1e-11) -
                      expected_score(log_score, Vec{-1.0, -3.0}, sn, 1e-11);
  CHECK(got == doctest::Approx(want).epsilon(1e-7));

  // degenerate path
  PathPolyline still;
  still.vertices = {{-1.0, -3.0}, {-1.0, -3.0}};
  CHECK(path_integral_diff(log_score, log_score.functional, still, sn) == 0.0);
}

TEST_CASE("closed loops integrate to zero") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  const auto f = Distribution::normal(0.2, 0.5);
  PathPolyline loop;
  loop.vertices = {{1.0, -0.5}, {2.5, -0.7}, {1.7, 0.4}, {1.0, -0.5}};
  CHECK(std::fabs(path_integral_diff(cone, cone.functional, loop, f)) <= 1e-6);
}

TEST_CASE("path independence inside a simply connected region") {
  const ScoreSpec log_score = ScoreSpec::var_es_log(kAlpha);
  const auto sn = Distribution::normal(0.0, 1.0);
  PathPolyline a, b;
  a.vertices = {{-2.0, -3.0}, {1.0, -3.0}, {1.0, -0.8}};
  b.vertices = {{-2.0, -3.0}, {-2.0, -0.8}, {1.0, -0.8}};
  const double va = path_integral_diff(log_score, log_score.functional, a, sn);
  const double vb = path_integral_diff(log_score, log_score.functional, b, sn);
  CHECK(va == doctest::Approx(vb).epsilon(1e-6));
}

TEST_CASE("path integral with recovered h agrees with analytic h") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  const auto f = Distribution::normal(0.2, 0.5);
  PathPolyline path;
  path.vertices = {{1.0, -0.5}, {2.0, -0.5}};
  PathIntegralOptions rec;
  rec.h_source = HSource::Recovered;
  rec.probe_dists = probes();
  rec.min_subdiv = 4;
  rec.max_subdiv = 64;
  const double via_rec = path_integral_diff(cone, cone.functional, path, f, rec);
  const double via_ana = path_integral_diff(cone, cone.functional, path, f);
  CHECK(via_rec == doctest::Approx(via_ana).epsilon(1e-5));
}

TEST_CASE("pointwise reconstruction matches score differences") {
  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  PathPolyline path;
  path.vertices = {{1.0, -0.5}, {2.0, -0.5}};
  const double got =
      pointwise_path_diff(cone, cone.functional, path, 0.0);
  const double want = eval_score(cone, Vec{2.0, -0.5}, 0.0) -
                      eval_score(cone, Vec{1.0, -0.5}, 0.0);
  CHECK(got == doctest::Approx(want).epsilon(1e-6));

  // crossing x1 = y exactly at a vertex still reconstructs
  PathPolyline cross;
  cross.vertices = {{1.0, -0.5}, {1.5, -0.5}, {2.0, -0.5}};
  const double got2 = pointwise_path_diff(cone, cone.functional, cross, 1.5);
  const double want2 = eval_score(cone, Vec{2.0, -0.5}, 1.5) -
                       eval_score(cone, Vec{1.0, -0.5}, 1.5);
  CHECK(got2 == doctest::Approx(want2).epsilon(1e-6));

  PathPolyline still;
  still.vertices = {{1.0, -0.5}, {1.0, -0.5}};
  CHECK(pointwise_path_diff(cone, cone.functional, still, 0.3) == 0.0);
}

TEST_CASE("finite differences converge at second order") {
  const ScoreSpec log_score = ScoreSpec::var_es_log(kAlpha);
  const auto sn = Distribution::normal(0.0, 1.0);
  const Vec x{-1.0, -2.0};
  const HMatrix ana = analytic_h(log_score, x);
  const Vec v = vbar(log_score.functional, x, sn);
  Vec exact(2, 0.0);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) exact[r] += ana.h.at(r, c) * v[c];
  }
  Vec errs;
  for (double h : {1e-3, 1e-4, 1e-5}) {
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      Vec hi = x, lo = x;
      hi[i] += h;
      lo[i] -= h;
      const double grad = (expected_score(log_score, hi, sn, 1e-13) -
                           expected_score(log_score, lo, sn, 1e-13)) /
                          (2.0 * h);
      err = std::max(err, std::fabs(grad - exact[i]));
    }
    errs.push_back(err);
  }
  // slope ~ 2 per decade; generous bounds absorb the fp noise floor
  CHECK(errs[0] / errs[1] > 20.0);
  CHECK(errs[0] / errs[1] < 500.0);
  CHECK(errs[1] / errs[2] > 5.0);
}

TEST_CASE("psd scans of both preset scores") {
  const std::vector<Distribution> ps = probes();

  const ScoreSpec log_score = ScoreSpec::var_es_log(kAlpha);
  const Domain dom =
      Domain::a0(log_score.functional).intersect(Domain::half_strip());
  const PsdReport a = psd_scan(log_score, dom, Box::cube(2, -4.0, -0.2),
                               {13, 13}, ps, 1e-8, Exec::Serial);
  CHECK(a.failures == 0);
  CHECK(!a.points.empty());
  CHECK(a.min_eigenvalue >= -1e-6);
  CHECK(a.fraction_positive > 0.99);

  const ScoreSpec cone = ScoreSpec::counterexample_cone(kAlpha);
  const PsdReport b =
      psd_scan(cone, Domain::cone_counterexample(), Box::cube(2, -2.8, 2.8),
               {13, 13}, ps, 1e-8, Exec::Serial);
  CHECK(!b.points.empty());
  // h stays positive semi-definite on the cone interior even though the
  // score is inconsistent there: the local condition does not imply
  // consistency.
  CHECK(b.min_eigenvalue >= -1e-6);

  const std::string json = a.to_json();
  CHECK(json.find("fraction_positive") != std::string::npos);
}

TEST_CASE("psd scan with a linear tail reports the zero direction") {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(kAlpha);
  s.g.push_back(ScoreFn::exponential());
  s.gk = ScoreFn::linear(0.0, 1.0);
  const PsdReport rep = psd_scan(s, Domain::full(2), Box::cube(2, -1.0, 1.0),
                                 {5, 5}, probes(), 1e-8, Exec::Serial);
  CHECK(rep.min_eigenvalue >= -1e-6);
  CHECK(rep.min_eigenvalue <= 1e-6);
  CHECK(rep.fraction_positive == 0.0);
}
