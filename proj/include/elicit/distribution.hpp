#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elicit/common.hpp"

namespace elicit {

enum class Side { Right, Left };

// Integrands carry their indicator breakpoints; quadrature on a
// discontinuous integrand without them loses orders of accuracy.
struct Integrand {
  std::function<double(double)> f;
  Vec jumps;
};

// Probability law on the reals: point mass, finite discrete, normal, or a
// one-level mixture of those. Immutable after construction; every operation
// is a pure function, safe for concurrent use.
class Distribution {
 public:
  enum class Kind { PointMass, Discrete, Normal, Mixture };

  static Distribution point_mass(double c);
  static Distribution discrete(Vec atoms, Vec weights);
  static Distribution normal(double mu, double sigma);
  static Distribution mixture(Vec weights, std::vector<Distribution> components);

  Kind kind() const { return kind_; }

  double cdf(double y, Side side = Side::Right) const;
  double cdf_left(double y) const { return cdf(y, Side::Left); }

  // Lower quantile inf{x : F(x) >= q}, 0 < q < 1.
  double quantile(double q) const;

  // Lower partial moment: integral of (z - y)+ dF(y); exact closed forms.
  double lpm(double z) const;

  double mean() const;

  // E f(Y): atoms summed exactly, continuous part by adaptive quadrature
  // split at the declared jumps. Throws IntegrationError on non-convergence.
  double expect(const Integrand& f, double rel_tol = 1e-9) const;

  // Atom locations (used for path splitting and quantile snapping).
  Vec atoms() const;
  bool is_continuous() const;

  // True when the q-quantile is a single point.
  bool has_unique_quantile(double q) const;

  std::string describe() const;

  // Accessors for the normal closed forms used in tests.
  double normal_mu() const { return mu_; }
  double normal_sigma() const { return sigma_; }
  const std::vector<Distribution>& components() const { return components_; }
  const Vec& weights() const { return weights_; }
  const Vec& atom_values() const { return atoms_; }

 private:
  Distribution() = default;

  Kind kind_ = Kind::PointMass;
  double c_ = 0.0;                        // point mass
  Vec atoms_, weights_;                   // discrete / mixture weights
  double mu_ = 0.0, sigma_ = 1.0;         // normal
  std::vector<Distribution> components_;  // mixture
};

}  // namespace elicit
