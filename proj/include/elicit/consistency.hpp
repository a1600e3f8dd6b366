#pragma once

#include <optional>
#include <string>

#include "elicit/domain.hpp"
#include "elicit/parallel.hpp"
#include "elicit/score.hpp"

namespace elicit {

struct Box {
  Vec lo, hi;  // per-coordinate

  static Box around(const Vec& center, double radius) {
    Box b;
    for (double c : center) {
      b.lo.push_back(c - radius);
      b.hi.push_back(c + radius);
    }
    return b;
  }
  static Box cube(int k, double lo, double hi) {
    Box b;
    b.lo.assign(k, lo);
    b.hi.assign(k, hi);
    return b;
  }
};

// Row-major lattice point over a box (last coordinate fastest).
Vec lattice_point(const Box& box, const std::vector<int>& shape,
                  std::size_t flat_index);

// Expected score on a rectangular lattice over box intersect domain; cells
// outside the domain or the score's domain of definition are NaN, cells
// whose integration failed are also NaN and counted. This is the OpenMP
// kernel; Exec::Serial runs the plain reference loop.
struct GridScores {
  Box box;
  std::vector<int> shape;  // points per coordinate
  Vec values;              // row-major, NaN for empty cells
  int integration_failures = 0;

  Vec point(std::size_t flat_index) const {
    return lattice_point(box, shape, flat_index);
  }
  std::size_t size() const { return values.size(); }
};

GridScores grid_expected_scores(const ScoreSpec& score, const Distribution& d,
                                const Domain& A, const Box& box,
                                const std::vector<int>& shape,
                                double rel_tol = 1e-9,
                                Exec exec = Exec::Parallel);

struct ConsistencyConfig {
  double box_radius = 8.0;  // box is t +- radius unless explicit box given
  std::optional<Box> box;
  int resolution = 33;       // grid points per coordinate
  double gap_tol = 1e-7;     // S(x,F) >= S(t,F) - gap_tol
  double loc_tol = 1e-3;     // |x* - t| for the consistent verdict
  double quad_tol = 1e-9;
  double search_step_min = 1e-6;
  Exec exec = Exec::Parallel;
};

struct DistRecord {
  std::string dist;
  Vec t;
  Vec x_star;
  double score_at_t = kNaN;
  double score_at_x_star = kNaN;
  double worst_gap = kInf;  // min over grid of S(x,F) - S(t,F)
  bool skipped = false;     // t outside the domain
  bool consistent_here = false;
  std::optional<Vec> violation_witness;
  double witness_score = kNaN;
  int integration_failures = 0;
};

struct ConsistencyReport {
  bool consistent = false;
  bool strict_claim = false;  // strictness hypotheses verified
  std::vector<DistRecord> records;
  int skipped = 0;

  std::string to_json() const;
};

// Grid + derivative-free pattern-search minimization of the expected score
// per distribution; consistent iff no grid point beats S(t,F) beyond the
// tolerance and every local argmin lands on t.
ConsistencyReport check_consistency(const ScoreSpec& score, const Domain& A,
                                    const std::vector<Distribution>& dists,
                                    const ConsistencyConfig& config = {});

struct CounterexampleValues {
  double score_at_t_pointmass;   // S(0,0,0)
  double score_at_alt_pointmass; // S(2,-1.8,0)
  Vec t_normal;                  // T(normal(0.2,0.1))
  double expected_at_t;          // mean score at T(F) under the normal
  double expected_at_alt;        // mean score at (2,-1.8)
};

// The five headline numbers of the cone counterexample at level alpha.
CounterexampleValues reproduce_counterexample(double alpha);

struct OrderSensitivityResult {
  bool pass = false;
  double turning_point = kNaN;  // -C(z,F)
  std::vector<std::pair<double, double>> curve;  // (z_k, expected score)
  std::string detail;
};

// Checks that the expected score decreases along the tail coordinate up to
// -C(z,F) and increases after it.
OrderSensitivityResult order_sensitivity_k(const ScoreSpec& score,
                                           const Distribution& d, const Vec& z,
                                           const Vec& zk_grid,
                                           double tol = 1e-7);

struct Figure1Data {
  Vec z1;        // curve abscissae
  Vec neg_c;     // -C((z1,.), F)
  Vec neg_b;     // -B((z1,.), t)
  GridScores grid;
  Vec t;

  std::string curves_csv() const;  // z1,neg_C,neg_B
  std::string grid_csv() const;    // z1,z2,score with empty missing cells
};

// Bound curves and the expected-score surface for k = 2.
Figure1Data figure1_grid(const ScoreSpec& score, const Distribution& d,
                         const Box& box, int resolution,
                         Exec exec = Exec::Parallel);

}  // namespace elicit
