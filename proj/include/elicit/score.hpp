#pragma once

#include <functional>
#include <span>
#include <string>

#include "elicit/common.hpp"
#include "elicit/distribution.hpp"
#include "elicit/functional.hpp"

namespace elicit {

// One entry of the scoring-function catalogue. Values, derivatives and
// convexity flags are exact for catalogue members; custom() accepts
// user-supplied triples for the library API (configs stay catalogue-only so
// they remain serializable).
struct ScoreFn {
  std::string tag;
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> deriv2;  // may be empty for custom functions
  bool convex = false;
  bool strictly_convex = false;
  double domain_hi = kInf;  // open upper bound; catalogue needs nothing else
  bool domain_hi_strict = false;

  bool in_domain(double x) const {
    return domain_hi_strict ? x < domain_hi : x <= domain_hi;
  }
  void require_domain(double x) const;

  static ScoreFn zero();
  static ScoreFn linear(double a, double b);
  static ScoreFn exponential();
  static ScoreFn neg_log_neg();            // -log(-x), x < 0
  static ScoreFn power(double beta);       // -sgn(beta) * (-x)^beta, x < 0
  static ScoreFn custom(std::string tag, std::function<double(double)> value,
                        std::function<double(double)> deriv,
                        std::function<double(double)> deriv2, bool convex,
                        bool strictly_convex, double domain_hi = kInf,
                        bool domain_hi_strict = false);

  static ScoreFn from_tag(const std::string& spec);  // "exp", "power:0.5", ...
};

// Scoring-function family
//   S(x,y) = sum_{r<k} [(1{y<=x_r} - q_r) G_r(x_r) - 1{y<=x_r} G_r(y)]
//          + G_k(x_k) [x_k + sum_m (p_m/q_m)((x_m - y)1{y<=x_m} - q_m x_m)]
//          - curly_G_k(x_k) + a(y),
// with G_k the derivative of the convex curly_G_k.
struct ScoreSpec {
  FunctionalSpec functional;
  std::vector<ScoreFn> g;  // G_r, r = 1..k-1
  ScoreFn gk;              // curly G_k; gk.deriv is G_k
  ScoreFn offset = ScoreFn::zero();  // a(y); never affects score differences

  int k() const { return functional.k(); }
  void validate() const;

  // The convex cone counterexample instance: G_1(s) = exp(-s)/alpha,
  // curly G_2 = exp, a = 0.
  static ScoreSpec counterexample_cone(double alpha);
  // G_1 = 0, curly G_2(x) = -log(-x) on x < 0.
  static ScoreSpec var_es_log(double alpha);
};

struct Interval {
  enum class Closure { HalfOpen, Closed };  // (lo,hi] vs [lo,hi]
  double lo = 0.0, hi = 0.0;
  Closure closure = Closure::Closed;

  static Interval oriented(double a, double b,
                           Closure c = Closure::Closed) {
    Interval iv;
    iv.lo = std::min(a, b);
    iv.hi = std::max(a, b);
    iv.closure = c;
    return iv;
  }
};

double eval_score(const ScoreSpec& spec, std::span<const double> x, double y);

double expected_score(const ScoreSpec& spec, std::span<const double> x,
                      const Distribution& d, double rel_tol = 1e-9);

// B(x,t) = -t_k + sum_{m<k} (p_m/q_m)(t_m - x_m)(q_m - 1{t_m < x_m});
// independent of x_k.
double b_bound(const FunctionalSpec& spec, std::span<const double> x,
               std::span<const double> t);

// C(z,F) = sum_{m<k} (p_m/q_m)(lpm(F, z_m) - q_m z_m); independent of z_k.
double c_bound(const FunctionalSpec& spec, std::span<const double> z,
               const Distribution& d);

// Expected-score difference split into the quantile part R1 and the tail
// part R2 around a reference point w; r1 + r2 equals the direct difference
// for any admissible w.
struct ScoreDiffDecomposition {
  double r1 = 0.0;
  double r2 = 0.0;
  double w = 0.0;
  double total() const { return r1 + r2; }
};

ScoreDiffDecomposition score_diff_decomposition(const ScoreSpec& spec,
                                                std::span<const double> z_prime,
                                                std::span<const double> z,
                                                double w,
                                                const Distribution& d,
                                                double rel_tol = 1e-9);

enum class Monotonicity { Increasing, StrictlyIncreasing, Violated };

struct MonotoneReport {
  Monotonicity kind = Monotonicity::Increasing;
  double violation_point = kNaN;
  double min_derivative = kInf;
};

// Classifies y -> G_r(y) + (p_r/q_r) G_k(w) y on the interval via its exact
// derivative on an n-point grid (r is 1-based).
MonotoneReport monotone_53(const ScoreSpec& spec, int r, double w,
                           const Interval& interval, int n);

// sum_m integral_{z_m}^{x_m} g_m(v) V_m(v, y) dv with per-component bounds.
double diagonal_score_diff(
    const std::vector<ScoreFn>& g,
    const std::vector<std::function<double(double, double)>>& V,
    std::span<const double> x, std::span<const double> z, double y);

// Twice-differentiable convex potential with gradient, for the affine
// identification family V_m(x,y) = q(y) x_m - p_m(y).
struct PhiFunction {
  std::function<double(std::span<const double>)> value;
  std::function<Vec(std::span<const double>)> gradient;
};

// [sum_m d_m phi(x)(q(y) x_m - p_m(y)) - phi(x) q(y)] minus the same at z;
// invariant under phi -> phi + beta.x + alpha.
double phi_score_diff(const PhiFunction& phi, const ScoreFn& q,
                      const std::vector<ScoreFn>& p, std::span<const double> x,
                      std::span<const double> z, double y);

}  // namespace elicit
