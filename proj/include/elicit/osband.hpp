#pragma once

#include <span>

#include "elicit/consistency.hpp"
#include "elicit/domain.hpp"
#include "elicit/linalg.hpp"
#include "elicit/parallel.hpp"
#include "elicit/score.hpp"

namespace elicit {

// Componentwise identification: V_m(x,y) = 1{y<=x_m} - q_m for m < k and
// V_k(x,y) = x_k + sum_m (p_m/q_m)((x_m - y)1{y<=x_m} - q_m x_m), the affine
// bracket already present in the score. E_F V(T(F), Y) = 0.
Vec identification_eval(const FunctionalSpec& spec, std::span<const double> x,
                        double y);

// Componentwise expectation: (F(x_m) - q_m, ..., x_k + C(x,F)).
Vec vbar(const FunctionalSpec& spec, std::span<const double> x,
         const Distribution& d);

struct HMatrix {
  linalg::Matrix h;
  double condition = 0.0;  // of the V-bar system for recovered matrices
};

class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves  [grad S(x, d_i)] = h(x) [Vbar(x, d_i)]  for h(x) from k test
// distributions, with central finite-difference gradients. Throws
// RecoveryError when the V-bar system is ill-conditioned (> 1e8).
HMatrix recover_h(const ScoreSpec& score, std::span<const double> x,
                  const std::vector<Distribution>& dists,
                  double fd_step = 1e-5, double quad_tol = 1e-12);

// Exact diagonal form from the catalogue derivatives:
// h_rr = G_r'(x_r) + (p_r/q_r) G_k(x_k), h_kk = curly G_k''(x_k).
HMatrix analytic_h(const ScoreSpec& score, std::span<const double> x);

enum class HSource { Recovered, Analytic };

// Integration path through int(A), traversed affinely between vertices.
struct PathPolyline {
  std::vector<Vec> vertices;
};

struct PathIntegralOptions {
  HSource h_source = HSource::Analytic;
  std::vector<Distribution> probe_dists;  // for recovered h
  double fd_step = 1e-5;
  double quad_tol = 1e-12;
  double tol = 1e-8;
  int min_subdiv = 8;   // per-segment composite refinement floor
  int max_subdiv = 4096;
};

// Reconstructs S-bar(gamma(1), F) - S-bar(gamma(0), F) as the line integral
// of (h Vbar)^T gamma'; segments are split at the atoms of d.
double path_integral_diff(const ScoreSpec& score, const FunctionalSpec& spec,
                          const PathPolyline& path, const Distribution& d,
                          const PathIntegralOptions& options = {});

// Pointwise analogue with V(., y); segments are split where a quantile
// coordinate crosses y.
double pointwise_path_diff(const ScoreSpec& score, const FunctionalSpec& spec,
                           const PathPolyline& path, double y,
                           const PathIntegralOptions& options = {});

struct PsdPoint {
  Vec x;
  double min_eigenvalue = kNaN;
  double condition = kNaN;
  bool failed = false;
};

struct PsdReport {
  std::vector<PsdPoint> points;
  double min_eigenvalue = kInf;
  double fraction_positive = 0.0;  // min eigenvalue > positivity_tol
  double positivity_tol = 1e-8;
  int failures = 0;
  Vec eigenvalue_quantiles;  // min/q25/median/q75/max over the grid

  std::string to_json() const;
};

// Recovers h over a lattice restricted to int(A) and reports the minimum
// eigenvalue of the symmetrized matrix per point.
PsdReport psd_scan(const ScoreSpec& score, const Domain& A, const Box& box,
                   const std::vector<int>& shape,
                   const std::vector<Distribution>& dists,
                   double positivity_tol = 1e-8, Exec exec = Exec::Parallel);

}  // namespace elicit
