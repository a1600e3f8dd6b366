#pragma once

#include "elicit/common.hpp"

namespace elicit {

// Small dense two-phase simplex for the domain geometry queries
// (<= 16 variables / constraints in practice).
struct SimplexResult {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  double value = 0.0;
  Vec x;
};

// maximize c.x subject to A x <= b, x >= 0
SimplexResult simplex_max(const std::vector<Vec>& A, const Vec& b,
                          const Vec& c);

// maximize c.z over {rows: a.z <= bound} with z free (split internally).
SimplexResult simplex_max_free(const std::vector<Vec>& rows, const Vec& bounds,
                               const Vec& c);

}  // namespace elicit
