// Benchmark comparing the OpenMP kernels against the serial reference loops:
// expected-score grids, PSD scans, and certification sampling.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "elicit/consistency.hpp"
#include "elicit/osband.hpp"
#include "elicit/parallel.hpp"
#include "elicit/path_cert.hpp"

using namespace elicit;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

struct Timing {
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  double max_diff = 0.0;
};

void report(const std::string& name, const Timing& t) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   max|diff| %.3g\n",
              name.c_str(), t.serial_ms, t.parallel_ms,
              t.parallel_ms > 0 ? t.serial_ms / t.parallel_ms : 0.0,
              t.max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  int scale = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--threads" && i + 1 < argc) {
      set_thread_cap(std::atoi(argv[++i]));
    } else if (arg == "--scale" && i + 1 < argc) {
      scale = std::atoi(argv[++i]);
    }
  }

  {
    const ScoreSpec score = ScoreSpec::counterexample_cone(0.05);
    const Distribution d = Distribution::normal(0.2, 0.5);
    const Domain dom = Domain::full(2);
    const Box box = Box::cube(2, -3.0, 3.0);
    const std::vector<int> shape{64 * scale, 64 * scale};
    Timing t;
    double t0 = now_ms();
    GridScores s = grid_expected_scores(score, d, dom, box, shape, 1e-9,
                                        Exec::Serial);
    t.serial_ms = now_ms() - t0;
    t0 = now_ms();
    GridScores p = grid_expected_scores(score, d, dom, box, shape, 1e-9,
                                        Exec::Parallel);
    t.parallel_ms = now_ms() - t0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::isnan(s.values[i]) != std::isnan(p.values[i])) t.max_diff = 1.0;
      if (!std::isnan(s.values[i])) {
        t.max_diff = std::max(t.max_diff,
                              std::fabs(s.values[i] - p.values[i]));
      }
    }
    report("expected-score grid", t);
  }

  {
    const ScoreSpec score = ScoreSpec::counterexample_cone(0.05);
    const Domain dom = Domain::cone_counterexample();
    const Box box = Box::cube(2, 0.2, 3.0);
    const std::vector<int> shape{24 * scale, 24 * scale};
    const std::vector<Distribution> probes{Distribution::normal(0.0, 1.0),
                                           Distribution::normal(1.0, 1.5)};
    Timing t;
    double t0 = now_ms();
    PsdReport s = psd_scan(score, dom, box, shape, probes, 1e-8, Exec::Serial);
    t.serial_ms = now_ms() - t0;
    t0 = now_ms();
    PsdReport p = psd_scan(score, dom, box, shape, probes, 1e-8,
                           Exec::Parallel);
    t.parallel_ms = now_ms() - t0;
    for (std::size_t i = 0; i < s.points.size() && i < p.points.size(); ++i) {
      t.max_diff = std::max(t.max_diff,
                            std::fabs(s.points[i].min_eigenvalue -
                                      p.points[i].min_eigenvalue));
    }
    report("psd scan", t);
  }

  {
    const FunctionalSpec fun = FunctionalSpec::var_es(0.05);
    const Domain dom = Domain::band(1.0);
    SamplerConfig sampler;
    Timing t;
    double t0 = now_ms();
    CertReport s = certify_domain(dom, fun, sampler, 2000 * scale,
                                  Exec::Serial);
    t.serial_ms = now_ms() - t0;
    t0 = now_ms();
    CertReport p = certify_domain(dom, fun, sampler, 2000 * scale,
                                  Exec::Parallel);
    t.parallel_ms = now_ms() - t0;
    t.max_diff = std::fabs(static_cast<double>(s.failures - p.failures)) +
                 std::fabs(static_cast<double>(s.max_path_length -
                                               p.max_path_length));
    report("path certification", t);
  }

  return 0;
}
