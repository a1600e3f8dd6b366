#include "elicit/functional.hpp"

#include <cmath>

namespace elicit {

void FunctionalSpec::validate(bool enforce_normalized) const {
  if (levels.empty() || levels.size() != weights.size()) {
    throw std::invalid_argument("FunctionalSpec: need k-1 levels and weights");
  }
  double prev = 0.0;
  for (double q : levels) {
    if (!(q > prev && q < 1.0)) {
      throw std::invalid_argument(
          "FunctionalSpec: levels must be strictly increasing in (0,1)");
    }
    prev = q;
  }
  double total = 0.0;
  for (double p : weights) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("FunctionalSpec: weights must be positive");
    }
    total += p;
  }
  if (enforce_normalized && std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("FunctionalSpec: weights must sum to 1");
  }
}

Vec evaluate_T(const FunctionalSpec& spec, const Distribution& d) {
  const int k = spec.k();
  Vec t(k, 0.0);
  double tail = 0.0;
  for (int m = 0; m < k - 1; ++m) {
    t[m] = d.quantile(spec.levels[m]);
    tail += spec.weights[m] / spec.levels[m] *
            (d.lpm(t[m]) - spec.levels[m] * t[m]);
  }
  t[k - 1] = -tail;
  // Pin the postcondition t_k <= sum p_m t_m exactly: the raw value can
  // exceed the weighted mean by one rounding ulp when every lpm vanishes.
  double mixed = 0.0;
  for (int m = 0; m < k - 1; ++m) mixed += spec.weights[m] * t[m];
  if (t[k - 1] > mixed) t[k - 1] = mixed;
  return t;
}

}  // namespace elicit
