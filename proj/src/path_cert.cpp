#include "elicit/path_cert.hpp"

#include <algorithm>
#include <cmath>

#include "elicit/rng.hpp"
#include "elicit/score.hpp"

namespace elicit {
namespace {

// Backoff from strict 1-D bounds; membership is re-verified exactly before a
// point is appended.
double strict_backoff(double bound) {
  return 1e-7 * std::max(1.0, std::fabs(bound));
}

// Both t_r and z_r must lie in the projection of the w-section.
bool sections_hold(const Domain& A, std::span<const double> z,
                   std::span<const double> t) {
  const int k = A.dim();
  const double w = std::min(t[k - 1], z[k - 1]);
  for (int r = 0; r < k - 1; ++r) {
    if (!A.section_contains(r, w, t[r])) return false;
    if (!A.section_contains(r, w, z[r])) return false;
  }
  return true;
}

// Furthest admissible single-coordinate move of z[r] toward target. Returns
// true when z changed; records the blocking constraint otherwise.
bool move_coordinate(const Domain& A, Vec& z, int r, double target,
                     double extra_cap, int* blocking) {
  const double cur = z[r];
  if (target == cur) return false;
  Domain::CoordRange range = A.coordinate_range(z, r);
  double next;
  *blocking = -1;
  if (target > cur) {
    next = std::min(target, extra_cap);
    if (range.hi < next || (range.hi_strict && range.hi <= next)) {
      next = range.hi_strict ? range.hi - strict_backoff(range.hi) : range.hi;
      *blocking = range.hi_constraint;
    }
    if (!(next > cur)) return false;
  } else {
    next = target;  // extra_cap only applies to upward tail moves
    if (range.lo > next || (range.lo_strict && range.lo >= next)) {
      next = range.lo_strict ? range.lo + strict_backoff(range.lo) : range.lo;
      *blocking = range.lo_constraint;
    }
    if (!(next < cur)) return false;
  }
  Vec cand = z;
  cand[r] = next;
  // Strict-boundary backoff can still graze the open boundary in extreme
  // scaling; pull in once more if needed.
  if (!A.contains(cand)) {
    cand[r] = 0.5 * (cur + next);
    if (!A.contains(cand)) return false;
  }
  const double scale = std::max({1.0, std::fabs(cur), std::fabs(cand[r])});
  if (std::fabs(cand[r] - cur) <= 1e-12 * scale) return false;
  z = cand;
  return true;
}

}  // namespace

PathOutcome construct_path(const Domain& A, const FunctionalSpec& spec,
                           std::span<const double> x,
                           std::span<const double> t, int max_sweeps) {
  const int k = A.dim();
  if (static_cast<int>(x.size()) != k || static_cast<int>(t.size()) != k) {
    throw std::invalid_argument("construct_path: dimension mismatch");
  }
  if (!A.contains(x)) {
    throw std::invalid_argument("construct_path: x must lie in the domain");
  }

  PathOutcome out;
  out.seq.points.push_back(Vec(x.begin(), x.end()));
  Vec z(x.begin(), x.end());
  const bool upward_tail = x[k - 1] < t[k - 1];

  if (sections_hold(A, z, t)) {
    out.ok = true;
    return out;
  }

  int last_block_coord = -1;
  int last_block_constraint = -1;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool progressed = false;

    for (int r = 0; r < k - 1; ++r) {
      int blocking = -1;
      if (move_coordinate(A, z, r, t[r], kInf, &blocking)) {
        out.seq.points.push_back(z);
        progressed = true;
      } else if (z[r] != t[r]) {
        last_block_coord = r;
        last_block_constraint = blocking;
      }
    }
    if (sections_hold(A, z, t)) {
      out.ok = true;
      return out;
    }

    {
      int blocking = -1;
      double cap = kInf;
      if (upward_tail) cap = -b_bound(spec, z, t);
      if (move_coordinate(A, z, k - 1, t[k - 1], cap, &blocking)) {
        out.seq.points.push_back(z);
        progressed = true;
      } else if (z[k - 1] != t[k - 1]) {
        last_block_coord = k - 1;
        last_block_constraint = blocking;
        if (upward_tail && cap <= z[k - 1]) last_block_constraint = -2;
      }
    }
    if (sections_hold(A, z, t)) {
      out.ok = true;
      return out;
    }
    if (!progressed) break;
  }

  out.ok = false;
  out.failure.blocking_coordinate = last_block_coord;
  out.failure.stall_point = z;
  if (last_block_constraint >= 0) {
    out.failure.active_constraints.push_back(last_block_constraint);
  }
  if (last_block_constraint == -2) {
    out.failure.reason =
        "tail move capped by -B below the current value (coordinate " +
        std::to_string(last_block_coord + 1) + ")";
  } else if (last_block_coord >= 0) {
    out.failure.reason = "coordinate " + std::to_string(last_block_coord + 1) +
                         " blocked by domain membership";
  } else {
    out.failure.reason = "sweep budget exhausted before the section condition";
  }
  return out;
}

PathChecks verify_path(const Domain& A, const FunctionalSpec& spec,
                       const PathSequence& seq, std::span<const double> x,
                       std::span<const double> t) {
  PathChecks out;
  const int k = A.dim();
  if (seq.points.empty()) {
    out.detail = "empty sequence";
    return out;
  }

  out.starts_at_x = true;
  for (int i = 0; i < k; ++i) {
    if (seq.points.front()[i] != x[i]) out.starts_at_x = false;
  }

  out.all_in_domain = true;
  for (const auto& z : seq.points) {
    if (!A.contains(z)) {
      out.all_in_domain = false;
      out.detail += "point outside domain: (" + fmt12(z) + "); ";
    }
  }

  const Vec& last = seq.points.back();
  const double w = std::min(t[k - 1], last[k - 1]);
  out.sections_ok = true;
  for (int r = 0; r < k - 1; ++r) {
    if (!A.section_contains(r, w, t[r]) ||
        !A.section_contains(r, w, last[r])) {
      out.sections_ok = false;
      out.detail += "section condition fails for coordinate " +
                    std::to_string(r + 1) + " at w=" + fmt12(w) + "; ";
    }
  }

  out.steps_monotone = true;
  out.tail_bound_ok = true;
  const bool upward_tail = x[k - 1] < t[k - 1];
  for (std::size_t n = 1; n < seq.points.size(); ++n) {
    const Vec& prev = seq.points[n - 1];
    const Vec& cur = seq.points[n];
    int moved = -1;
    bool single = true;
    for (int i = 0; i < k; ++i) {
      if (cur[i] != prev[i]) {
        if (moved >= 0) single = false;
        moved = i;
      }
    }
    if (moved < 0 || !single) {
      out.steps_monotone = false;
      out.detail += "step " + std::to_string(n) +
                    " does not change exactly one coordinate; ";
      continue;
    }
    const bool toward = (t[moved] <= cur[moved] && cur[moved] <= prev[moved]) ||
                        (prev[moved] <= cur[moved] && cur[moved] <= t[moved]);
    if (!toward) {
      out.steps_monotone = false;
      out.detail += "step " + std::to_string(n) + " not monotone toward t; ";
    }
    if (moved == k - 1 && upward_tail) {
      const double b_cur = b_bound(spec, cur, t);
      const double b_prev = b_bound(spec, prev, t);
      if (!(cur[k - 1] > prev[k - 1]) || cur[k - 1] > -b_cur + 1e-9) {
        out.tail_bound_ok = false;
        out.detail += "tail step " + std::to_string(n) +
                      " violates the -B cap; ";
      }
      if (b_cur != b_prev) {
        out.tail_bound_ok = false;
        out.detail += "B changed along tail step " + std::to_string(n) + "; ";
      }
    }
  }
  return out;
}

std::string to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::Holds:
      return "holds";
    case CertVerdict::Fails:
      return "fails";
    case CertVerdict::Vacuous:
      return "vacuous";
  }
  return "";
}

namespace {

bool sample_in(const Domain& A, const Domain* also, double box, Rng& rng,
               int max_rejections, Vec* out, int* proposals) {
  const int k = A.dim();
  Vec z(k);
  for (int it = 0; it < max_rejections; ++it) {
    ++*proposals;
    for (int i = 0; i < k; ++i) z[i] = rng.uniform(-box, box);
    if (A.contains(z) && (!also || also->contains(z))) {
      *out = z;
      return true;
    }
  }
  return false;
}

// Lowers the tail coordinate until the tightest strict constraint keeps only
// a log-uniformly resampled slack in [floor, current]. Lowering t_k cannot
// leave A0, and full membership is re-checked before accepting.
void shrink_strict_margin(const Domain& A, const Domain& a0, double floor,
                          Rng& rng, Vec* t) {
  const int k = A.dim();
  double slack = kInf;
  double coeff = 0.0;
  for (const auto& c : A.constraints()) {
    if (c.rel != Relation::LessThan || c.normal[k - 1] >= 0.0) continue;
    double dot = 0.0;
    for (int i = 0; i < k; ++i) dot += c.normal[i] * (*t)[i];
    const double s = c.bound - dot;
    if (s < slack) {
      slack = s;
      coeff = -c.normal[k - 1];
    }
  }
  if (coeff <= 0.0 || !(slack > floor)) return;
  const double target = floor * std::pow(slack / floor, rng.uniform01());
  Vec cand = *t;
  cand[k - 1] -= (slack - target) / coeff;
  if (A.contains(cand) && a0.contains(cand)) *t = cand;
}

}  // namespace

CertReport certify_domain(const Domain& A, const FunctionalSpec& spec,
                          const SamplerConfig& sampler, int n, Exec exec) {
  if (n < 1) throw std::invalid_argument("certify_domain: n must be >= 1");
  CertReport rep;
  rep.domain = A.describe();
  rep.note = "t sampled from the intersection of the domain with A0";
  rep.samples = n;

  const Domain a0 = Domain::a0(spec);
  Rng rng(sampler.seed);
  std::vector<Vec> xs, ts;
  int x_props = 0, t_props = 0;
  for (int i = 0; i < n; ++i) {
    Vec x, t;
    if (!sample_in(A, nullptr, sampler.x_box, rng, sampler.max_rejections, &x,
                   &x_props)) {
      break;
    }
    if (!sample_in(A, &a0, sampler.t_box, rng, sampler.max_rejections, &t,
                   &t_props)) {
      break;
    }
    if (sampler.margin_floor > 0.0 && i % 2 == 1) {
      shrink_strict_margin(A, a0, sampler.margin_floor, rng, &t);
    }
    xs.push_back(std::move(x));
    ts.push_back(std::move(t));
  }
  if (xs.size() < static_cast<std::size_t>(n)) {
    rep.verdict = CertVerdict::Vacuous;
    rep.samples = static_cast<int>(xs.size());
    return rep;
  }
  rep.x_acceptance = static_cast<double>(n) / x_props;
  rep.t_acceptance = static_cast<double>(n) / t_props;
  rep.low_acceptance_warning =
      rep.x_acceptance < 0.1 || rep.t_acceptance < 0.1;

  std::vector<CertWitness> results(n);
  run_for(exec, static_cast<std::size_t>(n), [&](std::size_t i) {
    CertWitness wit;
    wit.x = xs[i];
    wit.t = ts[i];
    PathOutcome po = construct_path(A, spec, xs[i], ts[i], sampler.max_sweeps);
    wit.ok = po.ok;
    wit.n_steps = po.ok ? po.seq.n_steps() : 0;
    if (!po.ok) wit.trace = po.failure.reason;
    results[i] = std::move(wit);
  });

  for (const auto& wit : results) {
    if (wit.ok) {
      rep.max_path_length = std::max(rep.max_path_length, wit.n_steps);
    } else {
      ++rep.failures;
    }
  }
  rep.verdict = rep.failures == 0 ? CertVerdict::Holds : CertVerdict::Fails;

  std::vector<CertWitness> fails;
  for (auto& wit : results) {
    if (!wit.ok) fails.push_back(wit);
  }
  std::sort(fails.begin(), fails.end(),
            [](const CertWitness& a, const CertWitness& b) {
              if (a.x != b.x) return a.x < b.x;
              return a.t < b.t;
            });
  if (fails.size() > 10) fails.resize(10);
  rep.witnesses = std::move(fails);
  return rep;
}

std::string CertReport::to_json() const {
  std::string j = "{\n";
  j += "  \"domain\": \"" + domain + "\",\n";
  j += "  \"note\": \"" + note + "\",\n";
  j += "  \"verdict\": \"" + to_string(verdict) + "\",\n";
  j += "  \"samples\": " + std::to_string(samples) + ",\n";
  j += "  \"failures\": " + std::to_string(failures) + ",\n";
  j += "  \"max_path_length\": " + std::to_string(max_path_length) + ",\n";
  j += "  \"x_acceptance\": " + fmt12(x_acceptance) + ",\n";
  j += "  \"t_acceptance\": " + fmt12(t_acceptance) + ",\n";
  j += "  \"low_acceptance_warning\": ";
  j += low_acceptance_warning ? "true" : "false";
  j += ",\n  \"witnesses\": [";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& wit = witnesses[i];
    if (i) j += ",";
    j += "\n    {\"x\": [" + fmt12(wit.x) + "], \"t\": [" + fmt12(wit.t) +
         "], \"trace\": \"" + wit.trace + "\"}";
  }
  j += witnesses.empty() ? "]\n}" : "\n  ]\n}";
  return j;
}

std::vector<WSweepRow> w_sweep(double alpha, const Vec& ws, int n,
                               SamplerConfig sampler, Exec exec) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("w_sweep: alpha must be in (0,1)");
  }
  const FunctionalSpec spec = FunctionalSpec::var_es(alpha);
  std::vector<WSweepRow> rows;
  for (double w : ws) {
    CertReport rep = certify_domain(Domain::w_cone(w), spec, sampler, n, exec);
    rows.push_back({w, rep.verdict});
  }
  return rows;
}

}  // namespace elicit
