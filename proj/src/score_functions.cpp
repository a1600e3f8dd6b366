#include <cmath>
#include <utility>

#include "elicit/score.hpp"

namespace elicit {

void ScoreFn::require_domain(double x) const {
  if (!in_domain(x)) {
    throw std::domain_error("score function '" + tag +
                            "' evaluated outside its domain at x=" + fmt12(x));
  }
}

ScoreFn ScoreFn::zero() {
  ScoreFn f;
  f.tag = "zero";
  f.value = [](double) { return 0.0; };
  f.deriv = [](double) { return 0.0; };
  f.deriv2 = [](double) { return 0.0; };
  f.convex = true;
  f.strictly_convex = false;
  return f;
}

ScoreFn ScoreFn::linear(double a, double b) {
  ScoreFn f;
  f.tag = "linear:" + fmt12(a) + "," + fmt12(b);
  f.value = [a, b](double x) { return a + b * x; };
  f.deriv = [b](double) { return b; };
  f.deriv2 = [](double) { return 0.0; };
  f.convex = true;
  f.strictly_convex = false;
  return f;
}

ScoreFn ScoreFn::exponential() {
  ScoreFn f;
  f.tag = "exp";
  f.value = [](double x) { return std::exp(x); };
  f.deriv = [](double x) { return std::exp(x); };
  f.deriv2 = [](double x) { return std::exp(x); };
  f.convex = true;
  f.strictly_convex = true;
  return f;
}

ScoreFn ScoreFn::neg_log_neg() {
  ScoreFn f;
  f.tag = "neg_log_neg";
  f.value = [](double x) { return -std::log(-x); };
  f.deriv = [](double x) { return -1.0 / x; };
  f.deriv2 = [](double x) { return 1.0 / (x * x); };
  f.convex = true;
  f.strictly_convex = true;
  f.domain_hi = 0.0;
  f.domain_hi_strict = true;
  return f;
}

ScoreFn ScoreFn::power(double beta) {
  if (beta == 0.0 || beta >= 1.0) {
    throw std::invalid_argument("power: beta must be nonzero and < 1");
  }
  // -sgn(beta)(-x)^beta on x < 0: increasing, strictly convex.
  const double sign = beta > 0 ? -1.0 : 1.0;
  ScoreFn f;
  f.tag = "power:" + fmt12(beta);
  f.value = [sign, beta](double x) { return sign * std::pow(-x, beta); };
  f.deriv = [sign, beta](double x) {
    return -sign * beta * std::pow(-x, beta - 1.0);
  };
  f.deriv2 = [sign, beta](double x) {
    return sign * beta * (beta - 1.0) * std::pow(-x, beta - 2.0);
  };
  f.convex = true;
  f.strictly_convex = true;
  f.domain_hi = 0.0;
  f.domain_hi_strict = true;
  return f;
}

ScoreFn ScoreFn::custom(std::string tag, std::function<double(double)> value,
                        std::function<double(double)> deriv,
                        std::function<double(double)> deriv2, bool convex,
                        bool strictly_convex, double domain_hi,
                        bool domain_hi_strict) {
  ScoreFn f;
  f.tag = std::move(tag);
  f.value = std::move(value);
  f.deriv = std::move(deriv);
  f.deriv2 = std::move(deriv2);
  f.convex = convex;
  f.strictly_convex = strictly_convex;
  f.domain_hi = domain_hi;
  f.domain_hi_strict = domain_hi_strict;
  return f;
}

ScoreFn ScoreFn::from_tag(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "zero") return zero();
  if (name == "exp") return exponential();
  if (name == "neg_log_neg") return neg_log_neg();
  if (name == "power") {
    if (args.empty()) throw ConfigError("power needs a beta parameter");
    return power(std::stod(args));
  }
  if (name == "linear") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("linear needs two parameters a,b");
    }
    return linear(std::stod(args.substr(0, comma)),
                  std::stod(args.substr(comma + 1)));
  }
  throw ConfigError("unknown score function tag: " + spec);
}

void ScoreSpec::validate() const {
  functional.validate(false);
  if (static_cast<int>(g.size()) != k() - 1) {
    throw std::invalid_argument("ScoreSpec: need k-1 functions G_r");
  }
  if (!gk.convex) {
    throw std::invalid_argument("ScoreSpec: curly G_k must be convex");
  }
}

ScoreSpec ScoreSpec::counterexample_cone(double alpha) {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(alpha);
  s.g.push_back(ScoreFn::custom(
      "exp_neg_scaled:" + fmt12(alpha),
      [alpha](double v) { return std::exp(-v) / alpha; },
      [alpha](double v) { return -std::exp(-v) / alpha; },
      [alpha](double v) { return std::exp(-v) / alpha; },
      /*convex=*/true, /*strictly_convex=*/true));
  s.gk = ScoreFn::exponential();
  return s;
}

ScoreSpec ScoreSpec::var_es_log(double alpha) {
  ScoreSpec s;
  s.functional = FunctionalSpec::var_es(alpha);
  s.g.push_back(ScoreFn::zero());
  s.gk = ScoreFn::neg_log_neg();
  return s;
}

}  // namespace elicit
