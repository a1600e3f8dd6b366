#include "elicit/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "elicit/normal_math.hpp"
#include "elicit/quadrature.hpp"

namespace elicit {
namespace {

constexpr double kNormalRange = 14.0;  // +-14 sigma carries < 1e-43 mass

}  // namespace

Distribution Distribution::point_mass(double c) {
  Distribution d;
  d.kind_ = Kind::PointMass;
  d.c_ = c;
  return d;
}

Distribution Distribution::discrete(Vec atoms, Vec weights) {
  if (atoms.empty() || atoms.size() != weights.size()) {
    throw std::invalid_argument("discrete: atoms/weights size mismatch");
  }
  std::vector<std::size_t> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  Vec a, w;
  for (std::size_t i : idx) {
    if (weights[i] <= 0.0) {
      throw std::invalid_argument("discrete: weights must be positive");
    }
    if (!a.empty() && atoms[i] == a.back()) {
      w.back() += weights[i];  // merge duplicate atoms
    } else {
      a.push_back(atoms[i]);
      w.push_back(weights[i]);
    }
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("discrete: weights must sum to 1");
  }
  for (double& wi : w) wi /= total;
  Distribution d;
  d.kind_ = Kind::Discrete;
  d.atoms_ = std::move(a);
  d.weights_ = std::move(w);
  return d;
}

Distribution Distribution::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("normal: sigma must be positive");
  }
  Distribution d;
  d.kind_ = Kind::Normal;
  d.mu_ = mu;
  d.sigma_ = sigma;
  return d;
}

Distribution Distribution::mixture(Vec weights,
                                   std::vector<Distribution> components) {
  if (weights.empty() || weights.size() != components.size()) {
    throw std::invalid_argument("mixture: weights/components size mismatch");
  }
  double total = 0.0;
  for (const auto& comp : components) {
    if (comp.kind_ == Kind::Mixture) {
      throw std::invalid_argument("mixture: components must not be mixtures");
    }
  }
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mixture: negative weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture: weights must sum to 1");
  }
  Distribution d;
  d.kind_ = Kind::Mixture;
  d.weights_ = std::move(weights);
  d.components_ = std::move(components);
  return d;
}

double Distribution::cdf(double y, Side side) const {
  switch (kind_) {
    case Kind::PointMass:
      return side == Side::Right ? (y >= c_ ? 1.0 : 0.0) : (y > c_ ? 1.0 : 0.0);
    case Kind::Discrete: {
      double s = 0.0;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const bool in = side == Side::Right ? atoms_[i] <= y : atoms_[i] < y;
        if (in) s += weights_[i];
      }
      return s;
    }
    case Kind::Normal:
      return normal_cdf((y - mu_) / sigma_);
    case Kind::Mixture: {
      double s = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        s += weights_[i] * components_[i].cdf(y, side);
      }
      return s;
    }
  }
  return 0.0;
}

double Distribution::quantile(double q) const {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("quantile: q must be in (0,1)");
  }
  switch (kind_) {
    case Kind::PointMass:
      return c_;
    case Kind::Discrete: {
      double acc = 0.0;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        acc += weights_[i];
        if (acc >= q) return atoms_[i];
      }
      return atoms_.back();
    }
    case Kind::Normal:
      return mu_ + sigma_ * normal_quantile(q);
    case Kind::Mixture: {
      double lo = kInf, hi = -kInf;
      for (const auto& comp : components_) {
        lo = std::min(lo, comp.quantile(q));
        hi = std::max(hi, comp.quantile(q));
      }
      if (lo >= hi) return lo;
      // F is nondecreasing; bisect the predicate F(x) >= q.
      for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (cdf(mid) >= q) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      // Snap to a nearby atom so discrete corners stay exact.
      const double scale = std::max(1.0, std::fabs(hi));
      for (double a : atoms()) {
        if (std::fabs(a - hi) <= 1e-9 * scale && cdf(a) >= q &&
            cdf(a, Side::Left) <= q) {
          return a;
        }
      }
      return hi;
    }
  }
  return 0.0;
}

double Distribution::lpm(double z) const {
  switch (kind_) {
    case Kind::PointMass:
      return z >= c_ ? z - c_ : 0.0;
    case Kind::Discrete: {
      double s = 0.0;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i] <= z) s += weights_[i] * (z - atoms_[i]);
      }
      return s;
    }
    case Kind::Normal: {
      const double a = (z - mu_) / sigma_;
      return sigma_ * normal_pdf(a) + (z - mu_) * normal_cdf(a);
    }
    case Kind::Mixture: {
      double s = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        s += weights_[i] * components_[i].lpm(z);
      }
      return s;
    }
  }
  return 0.0;
}

double Distribution::mean() const {
  switch (kind_) {
    case Kind::PointMass:
      return c_;
    case Kind::Discrete: {
      double s = 0.0;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        s += weights_[i] * atoms_[i];
      }
      return s;
    }
    case Kind::Normal:
      return mu_;
    case Kind::Mixture: {
      double s = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        s += weights_[i] * components_[i].mean();
      }
      return s;
    }
  }
  return 0.0;
}

double Distribution::expect(const Integrand& f, double rel_tol) const {
  switch (kind_) {
    case Kind::PointMass:
      return f.f(c_);
    case Kind::Discrete: {
      double s = 0.0;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        s += weights_[i] * f.f(atoms_[i]);
      }
      return s;
    }
    case Kind::Normal: {
      const double lo = mu_ - kNormalRange * sigma_;
      const double hi = mu_ + kNormalRange * sigma_;
      const double mu = mu_, sigma = sigma_;
      auto g = [&f, mu, sigma](double y) {
        return f.f(y) * normal_pdf((y - mu) / sigma) / sigma;
      };
      return quad::integrate_split(g, lo, hi, f.jumps, rel_tol, 1e-14);
    }
    case Kind::Mixture: {
      double s = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        s += weights_[i] * components_[i].expect(f, rel_tol);
      }
      return s;
    }
  }
  return 0.0;
}

Vec Distribution::atoms() const {
  switch (kind_) {
    case Kind::PointMass:
      return {c_};
    case Kind::Discrete:
      return atoms_;
    case Kind::Normal:
      return {};
    case Kind::Mixture: {
      Vec all;
      for (const auto& comp : components_) {
        Vec a = comp.atoms();
        all.insert(all.end(), a.begin(), a.end());
      }
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      return all;
    }
  }
  return {};
}

bool Distribution::is_continuous() const { return atoms().empty(); }

bool Distribution::has_unique_quantile(double q) const {
  if (kind_ == Kind::Normal) return true;
  if (kind_ == Kind::PointMass) return true;
  if (kind_ == Kind::Mixture) {
    // A normal component with positive weight makes F strictly increasing.
    bool strictly = false;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].kind() == Kind::Normal && weights_[i] > 0.0) {
        strictly = true;
      }
    }
    if (strictly) return true;
  }
  // Purely atomic law: the quantile set is a single point unless F sits
  // exactly at level q on a plateau.
  return cdf(quantile(q)) > q;
}

std::string Distribution::describe() const {
  switch (kind_) {
    case Kind::PointMass:
      return "point:" + fmt12(c_);
    case Kind::Discrete: {
      std::string s = "discrete:";
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) s += ",";
        s += fmt12(atoms_[i]) + "@" + fmt12(weights_[i]);
      }
      return s;
    }
    case Kind::Normal:
      return "normal:" + fmt12(mu_) + "," + fmt12(sigma_);
    case Kind::Mixture: {
      std::string s = "mix:";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += "+";
        s += fmt12(weights_[i]) + "*" + components_[i].describe();
      }
      return s;
    }
  }
  return "";
}

}  // namespace elicit
