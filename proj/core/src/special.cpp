#include "siteaddr/special.hpp"

#include <cmath>

#include "siteaddr/constants.hpp"

namespace siteaddr {

namespace {

constexpr double series_asymptotic_split = 14.0;

// sum_k (-x^2/4)^k / (k!)^2, accumulated in extended precision: the terms
// reach ~60 in magnitude near the split point and cancel down to ~0.2, which
// would cost double summation its last two digits.
double j0_series(double x) {
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 120; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::abs(static_cast<double>(term)) <= 1e-18 * std::abs(static_cast<double>(sum)))
      break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion J0(x) = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)],
// a_k = a_{k-1} * (-(2k-1)^2) / (8k); even a_k feed P, odd feed Q, both with
// alternating sign. Summed to the smallest term (divergent series).
double j0_asymptotic(double x) {
  double terms[40];
  terms[0] = 1.0;
  double ak = 1.0;
  for (int k = 1; k < 40; ++k) {
    ak *= -((2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
    terms[k] = ak / std::pow(x, k);
  }
  double p = 0.0, prev = 1e300;
  int sign = 1;
  for (int k = 0; k < 40; k += 2) {
    const double t = sign * terms[k];
    if (std::abs(t) > std::abs(prev)) break;
    p += t;
    prev = t;
    sign = -sign;
  }
  double q = 0.0;
  prev = 1e300;
  sign = 1;
  for (int k = 1; k < 40; k += 2) {
    const double t = sign * terms[k];
    if (std::abs(t) > std::abs(prev)) break;
    q += t;
    prev = t;
    sign = -sign;
  }
  const double chi = x - pi / 4.0;
  return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);
  if (x == 0.0) return 1.0;
  return x <= series_asymptotic_split ? j0_series(x) : j0_asymptotic(x);
}

double gaussian_envelope_integral(double t, double window) {
  // int_{-window}^{t} exp(-s^2) ds = sqrt(pi)/2 (erf(t) + erf(window))
  return std::sqrt(pi) / 2.0 * (std::erf(t) + std::erf(window));
}

}  // namespace siteaddr
