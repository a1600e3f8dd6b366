#include "elicit/normal_math.hpp"

#include <cmath>
#include <stdexcept>

#include "elicit/common.hpp"

namespace elicit {
namespace {

// Cody-style rational approximations (SPECFUN "calerf" coefficients).
constexpr double kErfA[5] = {3.16112374387056560e00, 1.13864154151050156e02,
                             3.77485237685302021e02, 3.20937758913846947e03,
                             1.85777706184603153e-1};
constexpr double kErfB[4] = {2.36012909523441209e01, 2.44024637934444173e02,
                             1.28261652607737228e03, 2.84423683343917062e03};
constexpr double kErfC[9] = {5.64188496988670089e-1, 8.88314979438837594e00,
                             6.61191906371416295e01, 2.98635138197400131e02,
                             8.81952221241769090e02, 1.71204761263407058e03,
                             2.05107837782607147e03, 1.23033935479799725e03,
                             2.15311535474403846e-8};
constexpr double kErfD[8] = {1.57449261107098347e01, 1.17693950891312499e02,
                             5.37181101862009858e02, 1.62138957456669019e03,
                             3.29079923573345963e03, 4.36261909014324716e03,
                             3.43936767414372164e03, 1.23033935480374942e03};
constexpr double kErfP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                             1.25781726111229246e-1, 1.60837851487422766e-2,
                             6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kErfQ[5] = {2.56852019228982242e00, 1.87295284992346047e00,
                             5.27905102951428412e-1, 6.05183413124413191e-2,
                             2.33520497626869185e-3};

constexpr double kInvSqrtPi = 5.6418958354775628695e-1;

double erfc_mid(double y) {  // 0.46875 <= y <= 4
  double num = kErfC[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + kErfC[i]) * y;
    den = (den + kErfD[i]) * y;
  }
  const double ratio = (num + kErfC[7]) / (den + kErfD[7]);
  const double ysq = std::floor(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del) * ratio;
}

double erfc_far(double y) {  // y > 4
  const double z = 1.0 / (y * y);
  double num = kErfP[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + kErfP[i]) * z;
    den = (den + kErfQ[i]) * z;
  }
  double r = z * (num + kErfP[4]) / (den + kErfQ[4]);
  r = (kInvSqrtPi - r) / y;
  const double ysq = std::floor(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del) * r;
}

// Acklam's rational initial guess for the inverse CDF.
constexpr double kInvA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kInvB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
constexpr double kInvC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kInvD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};

}  // namespace

double erf_cody(double x) {
  const double y = std::fabs(x);
  if (y <= 0.46875) {
    const double z = y * y;
    double num = kErfA[4] * z;
    double den = z;
    for (int i = 0; i < 3; ++i) {
      num = (num + kErfA[i]) * z;
      den = (den + kErfB[i]) * z;
    }
    return x * (num + kErfA[3]) / (den + kErfB[3]);
  }
  const double ec = y <= 4.0 ? erfc_mid(y) : (y < 26.5 ? erfc_far(y) : 0.0);
  return x > 0 ? 1.0 - ec : ec - 1.0;
}

double erfc_cody(double x) {
  const double y = std::fabs(x);
  double ec;
  if (y <= 0.46875) {
    ec = 1.0 - erf_cody(y);
  } else if (y <= 4.0) {
    ec = erfc_mid(y);
  } else if (y < 26.5) {
    ec = erfc_far(y);
  } else {
    ec = 0.0;
  }
  return x >= 0 ? ec : 2.0 - ec;
}

double normal_pdf(double z) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
  static const double inv_sqrt2 = 0.7071067811865475244;
  return 0.5 * erfc_cody(-z * inv_sqrt2);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  }
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((kInvC[0] * q + kInvC[1]) * q + kInvC[2]) * q + kInvC[3]) * q +
          kInvC[4]) *
             q +
         kInvC[5]) /
        ((((kInvD[0] * q + kInvD[1]) * q + kInvD[2]) * q + kInvD[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((kInvA[0] * r + kInvA[1]) * r + kInvA[2]) * r + kInvA[3]) * r +
          kInvA[4]) *
             r +
         kInvA[5]) *
        q /
        (((((kInvB[0] * r + kInvB[1]) * r + kInvB[2]) * r + kInvB[3]) * r +
          kInvB[4]) *
             r +
         1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((kInvC[0] * q + kInvC[1]) * q + kInvC[2]) * q + kInvC[3]) * q +
           kInvC[4]) *
              q +
          kInvC[5]) /
        ((((kInvD[0] * q + kInvD[1]) * q + kInvD[2]) * q + kInvD[3]) * q + 1.0);
  }
  // Two Halley refinements against the library CDF pin the result to
  // full double precision.
  for (int it = 0; it < 2; ++it) {
    const double e = normal_cdf(x) - p;
    const double u = e / normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

}  // namespace elicit
