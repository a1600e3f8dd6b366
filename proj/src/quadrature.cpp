#include "elicit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace elicit::quad {
namespace {

// Standard (G7,K15) node/weight pair; positive half, node 0 first.
constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kKronrodWeights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Gauss weights for the K15 nodes with odd index removed (nodes 0,2,4,6).
constexpr double kGaussWeights[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Interval {
  double a, b, value, err;
  bool operator<(const Interval& o) const { return err < o.err; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  fv[0] = f(c);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kKronrodNodes[i];
    fv[2 * i - 1] = f(c - dx);
    fv[2 * i] = f(c + dx);
  }
  double kron = kKronrodWeights[0] * fv[0];
  for (int i = 1; i < 8; ++i) {
    kron += kKronrodWeights[i] * (fv[2 * i - 1] + fv[2 * i]);
  }
  double gauss = kGaussWeights[0] * fv[0];
  for (int j = 1; j < 4; ++j) {
    gauss += kGaussWeights[j] * (fv[4 * j - 1] + fv[4 * j]);
  }
  Interval r;
  r.a = a;
  r.b = b;
  r.value = kron * h;
  r.err = std::fabs((kron - gauss) * h);
  return r;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_intervals) {
  Result res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Interval> heap;
  Interval first = gk15(f, a, b);
  res.evals = 15;
  heap.push(first);
  double total = first.value;
  double total_err = first.err;
  int used = 1;
  while (used < max_intervals) {
    const double tol = std::max(abs_tol, rel_tol * std::fabs(total));
    if (total_err <= tol) {
      res.converged = true;
      break;
    }
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at double resolution
      heap.push(Interval{worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.err;
      continue;
    }
    Interval left = gk15(f, worst.a, mid);
    Interval right = gk15(f, mid, worst.b);
    res.evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++used;
  }
  if (!res.converged) {
    const double tol = std::max(abs_tol, rel_tol * std::fabs(total));
    res.converged = total_err <= tol;
  }
  res.value = total;
  res.abs_error = total_err;
  return res;
}

double integrate_split(const std::function<double(double)>& f, double a,
                       double b, const Vec& breakpoints, double rel_tol,
                       double abs_tol) {
  Vec cuts;
  cuts.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  double err = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Result r = integrate(f, cuts[i], cuts[i + 1], rel_tol, abs_tol / 2);
    total += r.value;
    err += r.abs_error;
    ok = ok && r.converged;
  }
  if (!ok && err > std::max(abs_tol, rel_tol * std::fabs(total))) {
    throw IntegrationError("quadrature did not converge", total);
  }
  return total;
}

}  // namespace elicit::quad
