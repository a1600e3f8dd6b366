#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "elicit/consistency.hpp"
#include "elicit/osband.hpp"
#include "elicit/parallel.hpp"
#include "elicit/path_cert.hpp"

using namespace elicit;

TEST_CASE("thread cap round trip") {
  set_thread_cap(3);
  CHECK(thread_cap() == 3);
  set_thread_cap(0);
  CHECK(thread_cap() == 0);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(10007, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

// The OpenMP kernels write one independent slot per index, so they must be
// bitwise-identical to the serial reference loops.
TEST_CASE("grid kernel: serial reference equals the parallel kernel") {
  const ScoreSpec score = ScoreSpec::counterexample_cone(0.05);
  const Distribution d = Distribution::normal(0.2, 0.5);
  const Domain dom = Domain::cone_counterexample();
  const Box box = Box::cube(2, -3.0, 3.0);
  const GridScores s = grid_expected_scores(score, d, dom, box, {41, 41},
                                            1e-9, Exec::Serial);
  const GridScores p = grid_expected_scores(score, d, dom, box, {41, 41},
                                            1e-9, Exec::Parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isnan(s.values[i])) {
      CHECK(std::isnan(p.values[i]));
    } else {
      CHECK(s.values[i] == p.values[i]);
    }
  }
  CHECK(s.integration_failures == p.integration_failures);
}

TEST_CASE("psd kernel: serial reference equals the parallel kernel") {
  const ScoreSpec score = ScoreSpec::var_es_log(0.05);
  const Domain dom = Domain::half_strip();
  const std::vector<Distribution> probes{Distribution::normal(0.0, 1.0),
                                         Distribution::normal(1.0, 1.5)};
  const Box box = Box::cube(2, -3.0, -0.3);
  const PsdReport s =
      psd_scan(score, dom, box, {9, 9}, probes, 1e-8, Exec::Serial);
  const PsdReport p =
      psd_scan(score, dom, box, {9, 9}, probes, 1e-8, Exec::Parallel);
  REQUIRE(s.points.size() == p.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK(s.points[i].min_eigenvalue == p.points[i].min_eigenvalue);
    CHECK(s.points[i].x == p.points[i].x);
  }
  CHECK(s.min_eigenvalue == p.min_eigenvalue);
  CHECK(s.fraction_positive == p.fraction_positive);
}

TEST_CASE("certification kernel: serial reference equals the parallel kernel") {
  const FunctionalSpec spec = FunctionalSpec::var_es(0.05);
  SamplerConfig sampler;
  sampler.seed = 5;
  const CertReport s =
      certify_domain(Domain::band(1.0), spec, sampler, 150, Exec::Serial);
  const CertReport p =
      certify_domain(Domain::band(1.0), spec, sampler, 150, Exec::Parallel);
  CHECK(s.verdict == p.verdict);
  CHECK(s.failures == p.failures);
  CHECK(s.max_path_length == p.max_path_length);
  CHECK(s.to_json() == p.to_json());
}
