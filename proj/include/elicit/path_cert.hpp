#pragma once

#include <span>
#include <string>

#include "elicit/domain.hpp"
#include "elicit/parallel.hpp"

namespace elicit {

// Finite sequence z(0)..z(N); consecutive points differ in exactly one
// coordinate when N >= 1.
struct PathSequence {
  std::vector<Vec> points;
  int n_steps() const { return static_cast<int>(points.size()) - 1; }
};

struct PathFailure {
  int blocking_coordinate = -1;  // 0-based; k-1 for the tail coordinate
  std::string reason;
  Vec stall_point;
  std::vector<int> active_constraints;
};

struct PathOutcome {
  bool ok = false;
  PathSequence seq;
  PathFailure failure;
};

// Greedy coordinate sweeps: move each quantile coordinate toward t_r as far
// as membership allows, then the tail coordinate (capped by -B when moving
// upward), until the section condition holds or a sweep stalls.
PathOutcome construct_path(const Domain& A, const FunctionalSpec& spec,
                           std::span<const double> x,
                           std::span<const double> t, int max_sweeps = 64);

struct PathChecks {
  bool starts_at_x = false;
  bool sections_ok = false;     // t_r and z_r lie in the final w-section
  bool steps_monotone = false;  // single-coordinate moves toward t
  bool tail_bound_ok = false;   // upward tail moves capped by -B, B constant
  bool all_in_domain = false;
  std::string detail;

  bool all() const {
    return starts_at_x && sections_ok && steps_monotone && tail_bound_ok &&
           all_in_domain;
  }
};

// Re-checks every condition independently of construct_path.
PathChecks verify_path(const Domain& A, const FunctionalSpec& spec,
                       const PathSequence& seq, std::span<const double> x,
                       std::span<const double> t);

enum class CertVerdict { Holds, Fails, Vacuous };

std::string to_string(CertVerdict v);

struct SamplerConfig {
  double x_box = 10.0;  // x sampled from [-x_box, x_box]^k (intersect A)
  double t_box = 10.0;  // t sampled from [-t_box, t_box]^k (intersect A, A0)
  std::uint64_t seed = 1;
  int max_rejections = 20000;
  // Certification runs a generous sweep budget: near some domain edges the
  // number of admissible steps grows like distance/margin even though every
  // sampled pair admits a finite path (the band domain is the canonical
  // case).
  int max_sweeps = 200000;
  // When positive, every second reference point is pulled toward its
  // tightest strict constraint, with the slack resampled log-uniformly down
  // to this floor. Keep the floor well above 19 * the strict-move backoff
  // (~2e-6), the resolution below which clamped moves eat the margin.
  double margin_floor = 0.0;
};

struct CertWitness {
  Vec x, t;
  bool ok = false;
  int n_steps = 0;
  std::string trace;
};

struct CertReport {
  CertVerdict verdict = CertVerdict::Vacuous;
  std::string domain;
  std::string note;  // records the t in (A intersect A0) sampling choice
  int samples = 0;
  int failures = 0;
  int max_path_length = 0;
  double x_acceptance = 0.0, t_acceptance = 0.0;
  bool low_acceptance_warning = false;
  std::vector<CertWitness> witnesses;  // failures first, canonical order

  std::string to_json() const;
};

// Samples x from A and t from A n A0; holds iff construct_path succeeds for
// every pair, vacuous when no admissible t exists.
CertReport certify_domain(const Domain& A, const FunctionalSpec& spec,
                          const SamplerConfig& sampler, int n,
                          Exec exec = Exec::Parallel);

struct WSweepRow {
  double w = 0.0;
  CertVerdict verdict = CertVerdict::Vacuous;
};

// Certification across the {x_2 > W x_1} cone family. The defaults differ
// from certify_domain's: a deep x-box (1e3), boundary-margin stratified
// reference points, and a tight sweep budget. At the slope boundary
// W = (alpha-1)/alpha the number of required steps grows like depth/margin
// (while away from the boundary it grows only with log(depth/margin)), so
// bounded-effort deep-and-thin probes separate the two regimes
// deterministically; plain shallow sampling cannot.
inline SamplerConfig w_sweep_sampler() {
  SamplerConfig s;
  s.x_box = 1e3;
  s.t_box = 10.0;
  s.max_sweeps = 256;
  s.margin_floor = 1e-4;
  return s;
}

std::vector<WSweepRow> w_sweep(double alpha, const Vec& ws, int n,
                               SamplerConfig sampler = w_sweep_sampler(),
                               Exec exec = Exec::Parallel);

}  // namespace elicit
