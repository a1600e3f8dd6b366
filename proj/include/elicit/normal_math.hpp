#pragma once

namespace elicit {

// Rational-approximation error function (Cody's three-region scheme),
// |error| <= 1e-12 over the real line. Kept self-contained so the CDF path
// does not depend on libm's erf.
double erf_cody(double x);
double erfc_cody(double x);

double normal_pdf(double z);               // standard normal density
double normal_cdf(double z);               // standard normal CDF
double normal_quantile(double p);          // inverse standard normal CDF

}  // namespace elicit
