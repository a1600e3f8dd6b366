#include "elicit/osband.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace elicit {

Vec identification_eval(const FunctionalSpec& spec, std::span<const double> x,
                        double y) {
  const int k = spec.k();
  Vec v(k, 0.0);
  double bracket = x[k - 1];
  for (int m = 0; m < k - 1; ++m) {
    const double ind = y <= x[m] ? 1.0 : 0.0;
    v[m] = ind - spec.levels[m];
    bracket += spec.weights[m] / spec.levels[m] *
               ((x[m] - y) * ind - spec.levels[m] * x[m]);
  }
  v[k - 1] = bracket;
  return v;
}

Vec vbar(const FunctionalSpec& spec, std::span<const double> x,
         const Distribution& d) {
  const int k = spec.k();
  Vec v(k, 0.0);
  for (int m = 0; m < k - 1; ++m) v[m] = d.cdf(x[m]) - spec.levels[m];
  v[k - 1] = x[k - 1] + c_bound(spec, x, d);
  return v;
}

namespace {

Vec fd_gradient(const ScoreSpec& score, std::span<const double> x,
                const Distribution& d, double fd_step, double quad_tol) {
  const int k = score.k();
  Vec g(k, 0.0);
  Vec lo(x.begin(), x.end()), hi(x.begin(), x.end());
  for (int i = 0; i < k; ++i) {
    hi[i] = x[i] + fd_step;
    lo[i] = x[i] - fd_step;
    g[i] = (expected_score(score, hi, d, quad_tol) -
            expected_score(score, lo, d, quad_tol)) /
           (2.0 * fd_step);
    hi[i] = x[i];
    lo[i] = x[i];
  }
  return g;
}

}  // namespace

HMatrix recover_h(const ScoreSpec& score, std::span<const double> x,
                  const std::vector<Distribution>& dists, double fd_step,
                  double quad_tol) {
  const int k = score.k();
  if (static_cast<int>(dists.size()) != k) {
    throw std::invalid_argument("recover_h: need exactly k distributions");
  }
  linalg::Matrix vmat(k), gmat(k);
  for (int i = 0; i < k; ++i) {
    const Vec v = vbar(score.functional, x, dists[i]);
    const Vec g = fd_gradient(score, x, dists[i], fd_step, quad_tol);
    for (int r = 0; r < k; ++r) {
      vmat.at(r, i) = v[r];
      gmat.at(r, i) = g[r];
    }
  }
  HMatrix out;
  out.condition = linalg::condition_inf(vmat);
  if (!(out.condition < 1e8)) {
    throw RecoveryError(
        "recover_h: V-bar system ill-conditioned (cond=" +
        fmt12(out.condition) + "); choose other test distributions");
  }
  // h = G V^-1, solved row by row via V^T h^T = G^T.
  linalg::Matrix vt(k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) vt.at(r, c) = vmat.at(c, r);
  }
  out.h = linalg::Matrix(k);
  for (int r = 0; r < k; ++r) {
    Vec rhs(k);
    for (int i = 0; i < k; ++i) rhs[i] = gmat.at(r, i);
    const Vec hrow = linalg::solve(vt, rhs);
    for (int c = 0; c < k; ++c) out.h.at(r, c) = hrow[c];
  }
  return out;
}

HMatrix analytic_h(const ScoreSpec& score, std::span<const double> x) {
  const int k = score.k();
  HMatrix out;
  out.h = linalg::Matrix(k);
  out.condition = 1.0;
  const double gk_at_tail = score.gk.deriv(x[k - 1]);
  for (int r = 0; r < k - 1; ++r) {
    out.h.at(r, r) = score.g[r].deriv(x[r]) +
                     score.functional.weights[r] / score.functional.levels[r] *
                         gk_at_tail;
  }
  if (!score.gk.deriv2) {
    throw std::invalid_argument(
        "analytic_h: curly G_k needs a second derivative");
  }
  out.h.at(k - 1, k - 1) = score.gk.deriv2(x[k - 1]);
  return out;
}

namespace {

// Composite 15-point Gauss-Kronrod-node quadrature of f over [0,1] with
// doubling refinement; integrands here are smooth per segment.
double line_quad(const std::function<double(double)>& f, double tol,
                 int min_subdiv, int max_subdiv) {
  auto composite = [&](int n) {
    // 4-point Gauss-Legendre per panel
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    double s = 0.0;
    const double h = 1.0 / n;
    for (int i = 0; i < n; ++i) {
      const double c = (i + 0.5) * h;
      for (int j = 0; j < 4; ++j) s += gw[j] * f(c + 0.5 * h * gx[j]);
    }
    return s * 0.5 * h;
  };
  double prev = composite(min_subdiv);
  for (int n = 2 * min_subdiv; n <= max_subdiv; n *= 2) {
    const double cur = composite(n);
    if (std::fabs(cur - prev) <= tol * std::max(1.0, std::fabs(cur))) {
      return cur;
    }
    prev = cur;
  }
  return prev;
}

using FieldFn = std::function<Vec(std::span<const double>)>;

double polyline_integral(const PathPolyline& path, int k, const FieldFn& field,
                         const Vec& split_values, int split_coord_limit,
                         const PathIntegralOptions& options) {
  if (path.vertices.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
    const Vec& a = path.vertices[s];
    const Vec& b = path.vertices[s + 1];
    // Split where a leading coordinate crosses one of the given values: the
    // integrand jumps (or kinks) there.
    Vec cuts{0.0, 1.0};
    for (int m = 0; m < split_coord_limit; ++m) {
      const double da = b[m] - a[m];
      if (da == 0.0) continue;
      for (double v : split_values) {
        const double lam = (v - a[m]) / da;
        if (lam > 0.0 && lam < 1.0) cuts.push_back(lam);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double l0 = cuts[c], l1 = cuts[c + 1];
      auto integrand = [&](double u) {
        const double lam = l0 + (l1 - l0) * u;
        Vec gamma(k);
        for (int i = 0; i < k; ++i) gamma[i] = a[i] + lam * (b[i] - a[i]);
        const Vec hv = field(gamma);
        double dot = 0.0;
        for (int i = 0; i < k; ++i) dot += hv[i] * (b[i] - a[i]);
        return dot;
      };
      total += (l1 - l0) * line_quad(integrand, options.tol,
                                     options.min_subdiv, options.max_subdiv);
    }
  }
  return total;
}

linalg::Matrix h_at(const ScoreSpec& score, std::span<const double> x,
                    const PathIntegralOptions& options) {
  if (options.h_source == HSource::Analytic) {
    return analytic_h(score, x).h;
  }
  return recover_h(score, x, options.probe_dists, options.fd_step,
                   options.quad_tol)
      .h;
}

}  // namespace

double path_integral_diff(const ScoreSpec& score, const FunctionalSpec& spec,
                          const PathPolyline& path, const Distribution& d,
                          const PathIntegralOptions& options) {
  const int k = spec.k();
  FieldFn field = [&](std::span<const double> gamma) {
    const linalg::Matrix h = h_at(score, gamma, options);
    const Vec v = vbar(spec, gamma, d);
    Vec hv(k, 0.0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) hv[r] += h.at(r, c) * v[c];
    }
    return hv;
  };
  // V-bar kinks where a quantile coordinate crosses an atom of F.
  return polyline_integral(path, k, field, d.atoms(), k - 1, options);
}

double pointwise_path_diff(const ScoreSpec& score, const FunctionalSpec& spec,
                           const PathPolyline& path, double y,
                           const PathIntegralOptions& options) {
  const int k = spec.k();
  FieldFn field = [&](std::span<const double> gamma) {
    const linalg::Matrix h = h_at(score, gamma, options);
    const Vec v = identification_eval(spec, gamma, y);
    Vec hv(k, 0.0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) hv[r] += h.at(r, c) * v[c];
    }
    return hv;
  };
  return polyline_integral(path, k, field, {y}, k - 1, options);
}

PsdReport psd_scan(const ScoreSpec& score, const Domain& A, const Box& box,
                   const std::vector<int>& shape,
                   const std::vector<Distribution>& dists,
                   double positivity_tol, Exec exec) {
  PsdReport rep;
  rep.positivity_tol = positivity_tol;
  std::size_t total = 1;
  for (int n : shape) total *= static_cast<std::size_t>(n);

  std::vector<PsdPoint> pts(total);
  std::atomic<int> failures{0};
  run_for(exec, total, [&](std::size_t i) {
    PsdPoint p;
    p.x = lattice_point(box, shape, i);
    if (!A.contains(p.x, Where::Interior) || !score.gk.in_domain(p.x.back())) {
      p.failed = true;  // outside the scanned interior; dropped below
      pts[i] = std::move(p);
      return;
    }
    try {
      const HMatrix h = recover_h(score, p.x, dists);
      p.min_eigenvalue = linalg::min_eigenvalue_symmetric_part(h.h);
      p.condition = h.condition;
    } catch (const std::exception&) {
      p.failed = true;
      failures.fetch_add(1, std::memory_order_relaxed);
    }
    pts[i] = std::move(p);
  });

  int positive = 0, valid = 0;
  for (auto& p : pts) {
    if (p.failed) continue;
    ++valid;
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, p.min_eigenvalue);
    if (p.min_eigenvalue > positivity_tol) ++positive;
    rep.points.push_back(std::move(p));
  }
  rep.failures = failures.load();
  rep.fraction_positive = valid > 0 ? static_cast<double>(positive) / valid : 0.0;
  if (valid > 0) {
    Vec eigs;
    eigs.reserve(rep.points.size());
    for (const auto& p : rep.points) eigs.push_back(p.min_eigenvalue);
    std::sort(eigs.begin(), eigs.end());
    for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const std::size_t idx = static_cast<std::size_t>(
          q * static_cast<double>(eigs.size() - 1) + 0.5);
      rep.eigenvalue_quantiles.push_back(eigs[idx]);
    }
  }
  return rep;
}

std::string PsdReport::to_json() const {
  std::string j = "{\n";
  j += "  \"min_eigenvalue\": " + fmt12(min_eigenvalue) + ",\n";
  j += "  \"fraction_positive\": " + fmt12(fraction_positive) + ",\n";
  j += "  \"positivity_tol\": " + fmt12(positivity_tol) + ",\n";
  j += "  \"eigenvalue_quantiles\": [" + fmt12(eigenvalue_quantiles) + "],\n";
  j += "  \"failures\": " + std::to_string(failures) + ",\n";
  j += "  \"points\": [";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) j += ",";
    j += "\n    {\"x\": [" + fmt12(points[i].x) + "], \"min_eig\": " +
         fmt12(points[i].min_eigenvalue) + ", \"cond\": " +
         fmt12(points[i].condition) + "}";
  }
  j += points.empty() ? "]\n}" : "\n  ]\n}";
  return j;
}

}  // namespace elicit
