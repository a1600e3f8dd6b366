#include <algorithm>
#include <cmath>

#include "elicit/quadrature.hpp"
#include "elicit/score.hpp"

namespace elicit {
namespace {

void check_point(const ScoreSpec& spec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != spec.k()) {
    throw std::invalid_argument("score: point has wrong dimension");
  }
  // G_r(y) only ever sees y <= x_r, and catalogue domains are upper-bounded,
  // so checking the point itself covers the realization argument too.
  for (int r = 0; r + 1 < spec.k(); ++r) spec.g[r].require_domain(x[r]);
  spec.gk.require_domain(x[spec.k() - 1]);
}

}  // namespace

double eval_score(const ScoreSpec& spec, std::span<const double> x, double y) {
  check_point(spec, x);
  const int k = spec.k();
  const auto& q = spec.functional.levels;
  const auto& p = spec.functional.weights;
  double s = 0.0;
  double bracket = x[k - 1];
  for (int r = 0; r < k - 1; ++r) {
    const double ind = y <= x[r] ? 1.0 : 0.0;
    s += (ind - q[r]) * spec.g[r].value(x[r]) - ind * spec.g[r].value(y);
    bracket += p[r] / q[r] * ((x[r] - y) * ind - q[r] * x[r]);
  }
  s += spec.gk.deriv(x[k - 1]) * bracket - spec.gk.value(x[k - 1]);
  s += spec.offset.value(y);
  return s;
}

double expected_score(const ScoreSpec& spec, std::span<const double> x,
                      const Distribution& d, double rel_tol) {
  check_point(spec, x);
  const int k = spec.k();
  const auto& q = spec.functional.levels;
  double s = 0.0;
  for (int r = 0; r < k - 1; ++r) {
    const double F = d.cdf(x[r]);
    s += (F - q[r]) * spec.g[r].value(x[r]);
    if (spec.g[r].tag != "zero") {
      const double xr = x[r];
      const auto& gr = spec.g[r];
      s -= d.expect({[&gr, xr](double y) {
                       return y <= xr ? gr.value(y) : 0.0;
                     },
                     {xr}},
                    rel_tol);
    }
  }
  s += spec.gk.deriv(x[k - 1]) * (x[k - 1] + c_bound(spec.functional, x, d));
  s -= spec.gk.value(x[k - 1]);
  if (spec.offset.tag != "zero") {
    const auto& a = spec.offset;
    s += d.expect({[&a](double y) { return a.value(y); }, {}}, rel_tol);
  }
  return s;
}

double b_bound(const FunctionalSpec& spec, std::span<const double> x,
               std::span<const double> t) {
  const int k = spec.k();
  double b = -t[k - 1];
  for (int m = 0; m < k - 1; ++m) {
    const double ind = t[m] < x[m] ? 1.0 : 0.0;
    b += spec.weights[m] / spec.levels[m] * (t[m] - x[m]) *
         (spec.levels[m] - ind);
  }
  return b;
}

double c_bound(const FunctionalSpec& spec, std::span<const double> z,
               const Distribution& d) {
  double c = 0.0;
  for (int m = 0; m < spec.k() - 1; ++m) {
    c += spec.weights[m] / spec.levels[m] *
         (d.lpm(z[m]) - spec.levels[m] * z[m]);
  }
  return c;
}

ScoreDiffDecomposition score_diff_decomposition(const ScoreSpec& spec,
                                                std::span<const double> z_prime,
                                                std::span<const double> z,
                                                double w,
                                                const Distribution& d,
                                                double rel_tol) {
  check_point(spec, z_prime);
  check_point(spec, z);
  spec.gk.require_domain(w);
  const int k = spec.k();
  const auto& q = spec.functional.levels;
  const auto& p = spec.functional.weights;
  const double gkw = spec.gk.deriv(w);

  ScoreDiffDecomposition out;
  out.w = w;
  for (int r = 0; r < k - 1; ++r) {
    const double cr = p[r] / q[r] * gkw;
    const auto& gr = spec.g[r];
    auto psi = [&gr, cr](double y) { return gr.value(y) + cr * y; };
    out.r1 += (d.cdf(z_prime[r]) - q[r]) * psi(z_prime[r]) -
              (d.cdf(z[r]) - q[r]) * psi(z[r]);
    if (z_prime[r] != z[r]) {
      // sgn(z'_r - z_r) * integral over the half-open I(z'_r, z_r); the
      // indicator difference realizes the atom convention exactly.
      const double zp = z_prime[r], zz = z[r];
      out.r1 -= d.expect({[psi, zp, zz](double y) {
                            const double ind =
                                (y <= zp ? 1.0 : 0.0) - (y <= zz ? 1.0 : 0.0);
                            return ind == 0.0 ? 0.0 : psi(y) * ind;
                          },
                          {std::min(zp, zz), std::max(zp, zz)}},
                         rel_tol);
    }
  }

  const double zpk = z_prime[k - 1], zk = z[k - 1];
  const double gk_zp = spec.gk.deriv(zpk);
  const double gk_z = spec.gk.deriv(zk);
  out.r2 = -spec.gk.value(zpk) + spec.gk.value(zk) + gkw * (zpk - zk) +
           (gk_zp - gkw) * (zpk + c_bound(spec.functional, z_prime, d)) -
           (gk_z - gkw) * (zk + c_bound(spec.functional, z, d));
  return out;
}

MonotoneReport monotone_53(const ScoreSpec& spec, int r, double w,
                           const Interval& interval, int n) {
  if (r < 1 || r > spec.k() - 1) {
    throw std::invalid_argument("monotone_53: r out of range");
  }
  spec.gk.require_domain(w);
  const double cr = spec.functional.weights[r - 1] /
                    spec.functional.levels[r - 1] * spec.gk.deriv(w);
  const auto& gr = spec.g[r - 1];

  MonotoneReport rep;
  rep.kind = Monotonicity::StrictlyIncreasing;
  if (n < 1) n = 1;
  for (int i = 0; i < n; ++i) {
    double y;
    if (n == 1) {
      y = interval.closure == Interval::Closure::HalfOpen ? interval.hi
                                                          : interval.lo;
    } else if (interval.closure == Interval::Closure::Closed) {
      y = interval.lo + (interval.hi - interval.lo) * i / (n - 1);
    } else {  // (lo, hi]: skip the open endpoint
      y = interval.lo + (interval.hi - interval.lo) * (i + 1) / n;
    }
    const double dpsi = gr.deriv(y) + cr;
    rep.min_derivative = std::min(rep.min_derivative, dpsi);
    if (dpsi < 0.0) {
      rep.kind = Monotonicity::Violated;
      rep.violation_point = y;
      return rep;
    }
    if (dpsi == 0.0) rep.kind = Monotonicity::Increasing;
  }
  return rep;
}

double diagonal_score_diff(
    const std::vector<ScoreFn>& g,
    const std::vector<std::function<double(double, double)>>& V,
    std::span<const double> x, std::span<const double> z, double y) {
  if (g.size() != V.size() || g.size() != x.size() || x.size() != z.size()) {
    throw std::invalid_argument("diagonal_score_diff: size mismatch");
  }
  double total = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    if (x[m] == z[m]) continue;
    const auto& gm = g[m];
    const auto& vm = V[m];
    auto f = [&gm, &vm, y](double v) { return gm.value(v) * vm(v, y); };
    const double lo = std::min(z[m], x[m]);
    const double hi = std::max(z[m], x[m]);
    const double sign = x[m] >= z[m] ? 1.0 : -1.0;
    total += sign * quad::integrate_split(f, lo, hi, {y}, 1e-10, 1e-13);
  }
  return total;
}

double phi_score_diff(const PhiFunction& phi, const ScoreFn& q,
                      const std::vector<ScoreFn>& p, std::span<const double> x,
                      std::span<const double> z, double y) {
  if (p.size() != x.size() || x.size() != z.size()) {
    throw std::invalid_argument("phi_score_diff: size mismatch");
  }
  auto expr = [&](std::span<const double> v) {
    const Vec grad = phi.gradient(v);
    const double qy = q.value(y);
    double s = -phi.value(v) * qy;
    for (std::size_t m = 0; m < v.size(); ++m) {
      s += grad[m] * (qy * v[m] - p[m].value(y));
    }
    return s;
  };
  return expr(x) - expr(z);
}

}  // namespace elicit
