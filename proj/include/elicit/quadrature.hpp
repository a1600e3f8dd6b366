#pragma once

#include <functional>

#include "elicit/common.hpp"

namespace elicit::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = false;
  int evals = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. The caller is
// responsible for splitting at known discontinuities; interior kinks are
// handled by the subdivision.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_intervals = 4000);

// Convenience wrapper that splits [a,b] at the given breakpoints first and
// throws IntegrationError when the tolerance cannot be met.
double integrate_split(const std::function<double(double)>& f, double a,
                       double b, const Vec& breakpoints, double rel_tol,
                       double abs_tol);

}  // namespace elicit::quad
