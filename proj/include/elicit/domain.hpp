#pragma once

#include <optional>
#include <span>
#include <string>

#include "elicit/common.hpp"
#include "elicit/functional.hpp"

namespace elicit {

enum class Relation { LessEqual, LessThan };

struct Constraint {
  Vec normal;   // a
  double bound; // b
  Relation rel; // a.x <= b or a.x < b
};

enum class Where { DeclaredClosure, Interior };

struct SectionInterval {
  bool empty = true;
  double lo = kInf, hi = -kInf;
  bool lo_open = false, hi_open = false;

  bool contains(double v) const {
    if (empty) return false;
    if (v < lo || (lo_open && v == lo)) return false;
    if (v > hi || (hi_open && v == hi)) return false;
    return true;
  }
};

// Convex polyhedral action domain: an intersection of (possibly strict)
// half-spaces, with the presets used throughout.
class Domain {
 public:
  Domain(int dim, std::vector<Constraint> constraints, std::string preset = "");

  static Domain full(int k);
  // {x_1 <= ... <= x_{k-1}, x_k <= sum p_m x_m}
  static Domain a0(const FunctionalSpec& spec);
  static Domain a0_plus(const FunctionalSpec& spec);
  static Domain a0_minus(const FunctionalSpec& spec);
  static Domain half_strip();            // R x (-inf, 0), strict
  static Domain band(double c);          // {x_2 <= x_1 <= x_2 + c}
  static Domain cone_counterexample();   // {x_1 >= 0, |x_2| <= x_1}
  static Domain w_cone(double w);        // {x_2 > W x_1}, strict

  int dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::string& preset() const { return preset_; }

  Domain intersect(const Domain& other, std::string preset = "") const;

  bool contains(std::span<const double> x,
                Where where = Where::DeclaredClosure) const;

  // Projection to coordinate r (0-based, r < k-1) of the slice {z_k = w}.
  // Endpoints come from two small LPs; openness is tracked from the strict
  // relation flags.
  SectionInterval section_interval(int r, double w) const;

  // Is there a point of the (strict) domain with z_r = v and z_k = w?
  bool section_contains(int r, double w, double v) const;

  // Feasible range of coordinate r when the other coordinates are fixed;
  // closure bounds plus strictness flags of the binding constraints.
  struct CoordRange {
    double lo = -kInf, hi = kInf;
    bool lo_strict = false, hi_strict = false;
    int lo_constraint = -1, hi_constraint = -1;
  };
  CoordRange coordinate_range(std::span<const double> x, int r) const;

  std::string describe() const;

 private:
  int dim_;
  std::vector<Constraint> constraints_;
  std::string preset_;
};

}  // namespace elicit
