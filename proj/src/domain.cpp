#include "elicit/domain.hpp"

#include <cmath>

#include "elicit/simplex.hpp"

namespace elicit {
namespace {

constexpr double kStrictSlack = 1e-9;

}  // namespace

Domain::Domain(int dim, std::vector<Constraint> constraints,
               std::string preset)
    : dim_(dim), constraints_(std::move(constraints)), preset_(std::move(preset)) {
  for (const auto& c : constraints_) {
    if (static_cast<int>(c.normal.size()) != dim_) {
      throw std::invalid_argument("Domain: constraint dimension mismatch");
    }
  }
}

Domain Domain::full(int k) { return Domain(k, {}, "full"); }

Domain Domain::a0(const FunctionalSpec& spec) {
  const int k = spec.k();
  std::vector<Constraint> cs;
  for (int r = 0; r + 1 < k - 1; ++r) {
    Vec a(k, 0.0);
    a[r] = 1.0;
    a[r + 1] = -1.0;
    cs.push_back({a, 0.0, Relation::LessEqual});
  }
  Vec a(k, 0.0);
  a[k - 1] = 1.0;
  for (int m = 0; m < k - 1; ++m) a[m] = -spec.weights[m];
  cs.push_back({a, 0.0, Relation::LessEqual});
  return Domain(k, std::move(cs), "A0");
}

Domain Domain::a0_plus(const FunctionalSpec& spec) {
  Domain d = a0(spec);
  std::vector<Constraint> cs = d.constraints_;
  for (int i = 0; i < d.dim_; ++i) {
    Vec a(d.dim_, 0.0);
    a[i] = -1.0;
    cs.push_back({a, 0.0, Relation::LessEqual});
  }
  return Domain(d.dim_, std::move(cs), "A0_plus");
}

Domain Domain::a0_minus(const FunctionalSpec& spec) {
  Domain d = a0(spec);
  std::vector<Constraint> cs = d.constraints_;
  for (int i = 0; i < d.dim_; ++i) {
    Vec a(d.dim_, 0.0);
    a[i] = 1.0;
    cs.push_back({a, 0.0, Relation::LessEqual});
  }
  return Domain(d.dim_, std::move(cs), "A0_minus");
}

Domain Domain::half_strip() {
  return Domain(2, {{{0.0, 1.0}, 0.0, Relation::LessThan}}, "half_strip");
}

Domain Domain::band(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("band: width must be positive");
  return Domain(2,
                {{{-1.0, 1.0}, 0.0, Relation::LessEqual},
                 {{1.0, -1.0}, c, Relation::LessEqual}},
                "band");
}

Domain Domain::cone_counterexample() {
  return Domain(2,
                {{{-1.0, 0.0}, 0.0, Relation::LessEqual},
                 {{-1.0, 1.0}, 0.0, Relation::LessEqual},
                 {{-1.0, -1.0}, 0.0, Relation::LessEqual}},
                "cone_counterexample");
}

Domain Domain::w_cone(double w) {
  return Domain(2, {{{w, -1.0}, 0.0, Relation::LessThan}},
                "wcone:" + fmt12(w));
}

Domain Domain::intersect(const Domain& other, std::string preset) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("Domain::intersect: dimension mismatch");
  }
  std::vector<Constraint> cs = constraints_;
  cs.insert(cs.end(), other.constraints_.begin(), other.constraints_.end());
  if (preset.empty()) preset = preset_ + "&" + other.preset_;
  return Domain(dim_, std::move(cs), std::move(preset));
}

bool Domain::contains(std::span<const double> x, Where where) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("Domain::contains: dimension mismatch");
  }
  for (const auto& c : constraints_) {
    double dot = 0.0;
    for (int i = 0; i < dim_; ++i) dot += c.normal[i] * x[i];
    const bool strict =
        where == Where::Interior || c.rel == Relation::LessThan;
    if (strict ? !(dot < c.bound) : !(dot <= c.bound)) return false;
  }
  return true;
}

namespace {

// Rows of the slice LP: domain closure plus z_k = w (and optionally z_r = v),
// with a slack column that must stay positive on strict rows.
struct SliceLp {
  std::vector<Vec> rows;
  Vec bounds;
  std::vector<bool> strict;
  int k;
};

SliceLp slice_system(const Domain& dom, double w,
                     std::optional<std::pair<int, double>> fix) {
  SliceLp lp;
  lp.k = dom.dim();
  for (const auto& c : dom.constraints()) {
    lp.rows.push_back(c.normal);
    lp.bounds.push_back(c.bound);
    lp.strict.push_back(c.rel == Relation::LessThan);
  }
  auto add_eq = [&](int coord, double value) {
    Vec a(lp.k, 0.0);
    a[coord] = 1.0;
    lp.rows.push_back(a);
    lp.bounds.push_back(value);
    lp.strict.push_back(false);
    a[coord] = -1.0;
    lp.rows.push_back(a);
    lp.bounds.push_back(-value);
    lp.strict.push_back(false);
  };
  add_eq(lp.k - 1, w);
  if (fix) add_eq(fix->first, fix->second);
  return lp;
}

// maximize the joint slack of the strict rows over the slice; the slice
// meets the open domain iff the optimum is positive.
bool strictly_feasible(const SliceLp& lp) {
  const int k = lp.k;
  std::vector<Vec> rows;
  Vec bounds;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Vec a(k + 1, 0.0);
    for (int j = 0; j < k; ++j) a[j] = lp.rows[i][j];
    a[k] = lp.strict[i] ? 1.0 : 0.0;
    rows.push_back(a);
    bounds.push_back(lp.bounds[i]);
  }
  Vec cap(k + 1, 0.0);
  cap[k] = 1.0;
  rows.push_back(cap);
  bounds.push_back(1.0);
  Vec neg(k + 1, 0.0);
  neg[k] = -1.0;
  rows.push_back(neg);
  bounds.push_back(0.0);

  Vec c(k + 1, 0.0);
  c[k] = 1.0;
  SimplexResult res = simplex_max_free(rows, bounds, c);
  if (res.status == SimplexResult::Status::Infeasible) return false;
  return res.value > kStrictSlack;
}

}  // namespace

SectionInterval Domain::section_interval(int r, double w) const {
  if (r < 0 || r >= dim_ - 1) {
    throw std::invalid_argument("section_interval: r out of range");
  }
  SliceLp lp = slice_system(*this, w, std::nullopt);
  Vec c(dim_, 0.0);
  c[r] = 1.0;
  SimplexResult up = simplex_max_free(lp.rows, lp.bounds, c);
  SectionInterval out;
  if (up.status == SimplexResult::Status::Infeasible) return out;
  c[r] = -1.0;
  SimplexResult dn = simplex_max_free(lp.rows, lp.bounds, c);

  out.empty = false;
  out.hi = up.status == SimplexResult::Status::Unbounded ? kInf : up.value;
  out.lo = dn.status == SimplexResult::Status::Unbounded ? -kInf : -dn.value;
  if (std::isfinite(out.hi)) out.hi_open = !section_contains(r, w, out.hi);
  if (std::isfinite(out.lo)) out.lo_open = !section_contains(r, w, out.lo);
  if (out.lo == out.hi && out.lo_open) out.empty = true;
  return out;
}

bool Domain::section_contains(int r, double w, double v) const {
  SliceLp lp = slice_system(*this, w, std::make_pair(r, v));
  bool any_strict = false;
  for (bool s : lp.strict) any_strict = any_strict || s;
  if (!any_strict) {
    Vec c(dim_, 0.0);
    return simplex_max_free(lp.rows, lp.bounds, c).status !=
           SimplexResult::Status::Infeasible;
  }
  return strictly_feasible(lp);
}

Domain::CoordRange Domain::coordinate_range(std::span<const double> x,
                                            int r) const {
  CoordRange out;
  for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
    const auto& c = constraints_[ci];
    const double ar = c.normal[r];
    double rest = 0.0;
    for (int i = 0; i < dim_; ++i) {
      if (i != r) rest += c.normal[i] * x[i];
    }
    if (ar == 0.0) continue;
    const double bound = (c.bound - rest) / ar;
    if (ar > 0.0) {
      if (bound < out.hi) {
        out.hi = bound;
        out.hi_strict = c.rel == Relation::LessThan;
        out.hi_constraint = static_cast<int>(ci);
      } else if (bound == out.hi && c.rel == Relation::LessThan) {
        out.hi_strict = true;
        out.hi_constraint = static_cast<int>(ci);
      }
    } else {
      if (bound > out.lo) {
        out.lo = bound;
        out.lo_strict = c.rel == Relation::LessThan;
        out.lo_constraint = static_cast<int>(ci);
      } else if (bound == out.lo && c.rel == Relation::LessThan) {
        out.lo_strict = true;
        out.lo_constraint = static_cast<int>(ci);
      }
    }
  }
  return out;
}

std::string Domain::describe() const {
  if (!preset_.empty()) return preset_;
  std::string s = "custom[k=" + std::to_string(dim_);
  for (const auto& c : constraints_) {
    s += "; " + fmt12(c.normal) +
         (c.rel == Relation::LessThan ? " < " : " <= ") + fmt12(c.bound);
  }
  return s + "]";
}

}  // namespace elicit
