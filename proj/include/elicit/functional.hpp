#pragma once

#include "elicit/common.hpp"
#include "elicit/distribution.hpp"

namespace elicit {

// Target functional T = (q_1..q_{k-1} quantiles, spectral ES combination).
// Levels are strictly increasing in (0,1); weights are positive and sum to 1
// unless validation is explicitly relaxed for experimentation.
struct FunctionalSpec {
  Vec levels;   // q_1 < ... < q_{k-1}
  Vec weights;  // p_1 .. p_{k-1}

  int k() const { return static_cast<int>(levels.size()) + 1; }

  static FunctionalSpec var_es(double alpha) {
    FunctionalSpec s;
    s.levels = {alpha};
    s.weights = {1.0};
    s.validate();
    return s;
  }

  static FunctionalSpec make(Vec q, Vec p, bool enforce_normalized = true) {
    FunctionalSpec s;
    s.levels = std::move(q);
    s.weights = std::move(p);
    s.validate(enforce_normalized);
    return s;
  }

  void validate(bool enforce_normalized = true) const;
};

// t_m = quantile(d, q_m) for m < k and
// t_k = -sum_m (p_m/q_m) (lpm(d, t_m) - q_m t_m), the weighted lower-tail
// mean. Satisfies t_1 <= ... <= t_{k-1} and t_k <= sum p_m t_m.
Vec evaluate_T(const FunctionalSpec& spec, const Distribution& d);

}  // namespace elicit
