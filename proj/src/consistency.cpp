#include "elicit/consistency.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace elicit {

Vec lattice_point(const Box& box, const std::vector<int>& shape,
                  std::size_t flat_index) {
  const int k = static_cast<int>(shape.size());
  Vec x(k, 0.0);
  std::size_t rem = flat_index;
  for (int i = k - 1; i >= 0; --i) {
    const int n = shape[i];
    const int idx = static_cast<int>(rem % n);
    rem /= n;
    x[i] = n == 1 ? box.lo[i]
                  : box.lo[i] + (box.hi[i] - box.lo[i]) * idx / (n - 1);
  }
  return x;
}

GridScores grid_expected_scores(const ScoreSpec& score, const Distribution& d,
                                const Domain& A, const Box& box,
                                const std::vector<int>& shape, double rel_tol,
                                Exec exec) {
  GridScores g;
  g.box = box;
  g.shape = shape;
  std::size_t total = 1;
  for (int n : shape) total *= static_cast<std::size_t>(n);
  g.values.assign(total, kNaN);

  std::atomic<int> failures{0};
  run_for(exec, total, [&](std::size_t i) {
    const Vec x = g.point(i);
    if (!A.contains(x) || !score.gk.in_domain(x.back())) return;
    try {
      g.values[i] = expected_score(score, x, d, rel_tol);
    } catch (const IntegrationError&) {
      failures.fetch_add(1, std::memory_order_relaxed);
    }
  });
  g.integration_failures = failures.load();
  return g;
}

namespace {

// Compass pattern search with shrinking steps, staying inside the domain and
// the score's domain of definition.
Vec pattern_search(const ScoreSpec& score, const Distribution& d,
                   const Domain& A, Vec x, double step, double step_min,
                   double quad_tol, double* value) {
  const int k = static_cast<int>(x.size());
  double fx = *value;
  while (step > step_min) {
    bool improved = false;
    for (int i = 0; i < k; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec cand = x;
        cand[i] += sign * step;
        if (!A.contains(cand) || !score.gk.in_domain(cand.back())) continue;
        double fc;
        try {
          fc = expected_score(score, cand, d, quad_tol);
        } catch (const IntegrationError&) {
          continue;
        }
        if (fc < fx) {
          x = cand;
          fx = fc;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  *value = fx;
  return x;
}

}  // namespace

ConsistencyReport check_consistency(const ScoreSpec& score, const Domain& A,
                                    const std::vector<Distribution>& dists,
                                    const ConsistencyConfig& config) {
  score.validate();
  ConsistencyReport rep;
  const int k = score.k();

  bool strict = score.gk.strictly_convex;
  for (const auto& d : dists) {
    for (double q : score.functional.levels) {
      strict = strict && d.has_unique_quantile(q);
    }
  }

  bool all_ok = true;
  for (const auto& d : dists) {
    DistRecord rec;
    rec.dist = d.describe();
    rec.t = evaluate_T(score.functional, d);
    if (!A.contains(rec.t) || !score.gk.in_domain(rec.t.back())) {
      rec.skipped = true;
      ++rep.skipped;
      rep.records.push_back(std::move(rec));
      continue;
    }
    const Box box =
        config.box ? *config.box : Box::around(rec.t, config.box_radius);
    GridScores grid = grid_expected_scores(
        score, d, A, box, std::vector<int>(k, config.resolution),
        config.quad_tol, config.exec);
    rec.integration_failures = grid.integration_failures;
    rec.score_at_t = expected_score(score, rec.t, d, config.quad_tol);

    // Strictness additionally needs the slope functions increasing over the
    // searched region, evaluated at the most adverse tail value.
    if (strict) {
      const double w_min = box.lo[k - 1];
      if (score.gk.in_domain(w_min)) {
        for (int r = 1; r <= k - 1; ++r) {
          const auto mono = monotone_53(
              score, r, w_min,
              Interval::oriented(box.lo[r - 1], box.hi[r - 1]), 257);
          strict = strict && mono.kind == Monotonicity::StrictlyIncreasing;
        }
      }
    }

    std::size_t best = grid.size();
    double best_val = kInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double v = grid.values[i];
      if (std::isnan(v)) continue;
      const double gap = v - rec.score_at_t;
      rec.worst_gap = std::min(rec.worst_gap, gap);
      if (!rec.violation_witness && gap < -config.gap_tol) {
        rec.violation_witness = grid.point(i);
        rec.witness_score = v;
      }
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best < grid.size()) {
      double step = 0.0;
      for (int i = 0; i < k; ++i) {
        step = std::max(step, (box.hi[i] - box.lo[i]) /
                                  std::max(1, config.resolution - 1));
      }
      rec.x_star =
          pattern_search(score, d, A, grid.point(best), step,
                         config.search_step_min, config.quad_tol, &best_val);
      rec.score_at_x_star = best_val;
    } else {
      rec.x_star = rec.t;
      rec.score_at_x_star = rec.score_at_t;
    }

    double loc_err = 0.0;
    for (int i = 0; i < k; ++i) {
      loc_err = std::max(loc_err, std::fabs(rec.x_star[i] - rec.t[i]));
    }
    rec.consistent_here = !rec.violation_witness &&
                          rec.worst_gap >= -config.gap_tol &&
                          loc_err <= config.loc_tol &&
                          rec.score_at_x_star >= rec.score_at_t - config.gap_tol;
    all_ok = all_ok && rec.consistent_here;
    rep.records.push_back(std::move(rec));
  }
  rep.consistent = all_ok && rep.skipped == 0;
  rep.strict_claim = rep.consistent && strict;
  return rep;
}

std::string ConsistencyReport::to_json() const {
  std::string j = "{\n";
  j += "  \"consistent\": ";
  j += consistent ? "true" : "false";
  j += ",\n  \"strict_claim\": ";
  j += strict_claim ? "true" : "false";
  j += ",\n  \"skipped\": " + std::to_string(skipped);
  j += ",\n  \"records\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i) j += ",";
    j += "\n    {\"dist\": \"" + r.dist + "\"";
    j += ", \"t\": [" + fmt12(r.t) + "]";
    if (r.skipped) {
      j += ", \"skipped\": true}";
      continue;
    }
    j += ", \"score_at_t\": " + fmt12(r.score_at_t);
    j += ", \"x_star\": [" + fmt12(r.x_star) + "]";
    j += ", \"score_at_x_star\": " + fmt12(r.score_at_x_star);
    j += ", \"worst_gap\": " + fmt12(r.worst_gap);
    j += ", \"consistent\": ";
    j += r.consistent_here ? "true" : "false";
    if (r.violation_witness) {
      j += ", \"witness\": [" + fmt12(*r.violation_witness) + "]";
      j += ", \"witness_score\": " + fmt12(r.witness_score);
    }
    if (r.integration_failures > 0) {
      j += ", \"integration_failures\": " +
           std::to_string(r.integration_failures);
    }
    j += "}";
  }
  j += records.empty() ? "]\n}" : "\n  ]\n}";
  return j;
}

CounterexampleValues reproduce_counterexample(double alpha) {
  const ScoreSpec score = ScoreSpec::counterexample_cone(alpha);
  CounterexampleValues out;
  const Vec origin{0.0, 0.0};
  const Vec alt{2.0, -1.8};
  out.score_at_t_pointmass = eval_score(score, origin, 0.0);
  out.score_at_alt_pointmass = eval_score(score, alt, 0.0);
  const Distribution f = Distribution::normal(0.2, 0.1);
  out.t_normal = evaluate_T(score.functional, f);
  out.expected_at_t = expected_score(score, out.t_normal, f, 1e-10);
  out.expected_at_alt = expected_score(score, alt, f, 1e-10);
  return out;
}

OrderSensitivityResult order_sensitivity_k(const ScoreSpec& score,
                                           const Distribution& d, const Vec& z,
                                           const Vec& zk_grid, double tol) {
  const int k = score.k();
  OrderSensitivityResult out;
  out.turning_point = -c_bound(score.functional, z, d);
  Vec grid = zk_grid;
  std::sort(grid.begin(), grid.end());
  Vec x = z;
  for (double zk : grid) {
    x[k - 1] = zk;
    score.gk.require_domain(zk);
    out.curve.emplace_back(zk, expected_score(score, x, d, 1e-10));
  }
  out.pass = true;
  for (std::size_t i = 1; i < out.curve.size(); ++i) {
    const auto& [zk_prev, s_prev] = out.curve[i - 1];
    const auto& [zk_cur, s_cur] = out.curve[i];
    if (zk_cur <= out.turning_point && s_cur > s_prev + tol) {
      out.pass = false;
      out.detail += "not nonincreasing before the turning point at z_k=" +
                    fmt12(zk_cur) + "; ";
    }
    if (zk_prev >= out.turning_point && s_cur < s_prev - tol) {
      out.pass = false;
      out.detail += "not nondecreasing after the turning point at z_k=" +
                    fmt12(zk_cur) + "; ";
    }
  }
  return out;
}

Figure1Data figure1_grid(const ScoreSpec& score, const Distribution& d,
                         const Box& box, int resolution, Exec exec) {
  if (score.k() != 2) {
    throw std::invalid_argument("figure1_grid: requires k = 2");
  }
  Figure1Data out;
  out.t = evaluate_T(score.functional, d);
  for (int i = 0; i < resolution; ++i) {
    const double z1 =
        box.lo[0] + (box.hi[0] - box.lo[0]) * i / (resolution - 1);
    const Vec z{z1, 0.0};
    out.z1.push_back(z1);
    out.neg_c.push_back(-c_bound(score.functional, z, d));
    out.neg_b.push_back(-b_bound(score.functional, z, out.t));
  }
  // Both bounds coincide with -t_k at z_1 = t_1; guard the identity here so
  // emitted curves can be trusted downstream.
  const double c_at_t = c_bound(score.functional, out.t, d);
  const double b_at_t = b_bound(score.functional, out.t, out.t);
  if (std::fabs(c_at_t - b_at_t) > 1e-9 ||
      std::fabs(c_at_t + out.t[1]) > 1e-9) {
    throw std::logic_error("figure1_grid: bound curves do not meet at t");
  }
  out.grid = grid_expected_scores(score, d, Domain::full(2), box,
                                  {resolution, resolution}, 1e-9, exec);
  return out;
}

std::string Figure1Data::curves_csv() const {
  std::string s = "z1,neg_C,neg_B\n";
  for (std::size_t i = 0; i < z1.size(); ++i) {
    s += fmt12(z1[i]) + "," + fmt12(neg_c[i]) + "," + fmt12(neg_b[i]) + "\n";
  }
  return s;
}

std::string Figure1Data::grid_csv() const {
  std::string s = "z1,z2,score\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec x = grid.point(i);
    const double v = grid.values[i];
    s += fmt12(x[0]) + "," + fmt12(x[1]) + ",";
    if (!std::isnan(v)) s += fmt12(v);
    s += "\n";
  }
  return s;
}

}  // namespace elicit
