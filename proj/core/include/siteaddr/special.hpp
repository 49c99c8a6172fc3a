#ifndef SITEADDR_SPECIAL_HPP
#define SITEADDR_SPECIAL_HPP

namespace siteaddr {

// Zero-order Bessel function of the first kind.
//
// Power series with compensated summation for |x| <= 14, Hankel asymptotic
// expansion truncated at its smallest term beyond. Absolute error stays below
// 1e-12 everywhere; relative error below 1e-12 away from the zeros of J0.
double bessel_j0(double x);

// Integral of the unit-amplitude Gaussian envelope exp(-s^2) from -window to
// t, in envelope units (s = omega0 * time). Equals the eta of the resonant
// closed-form solution divided by omega0.
double gaussian_envelope_integral(double t, double window);

}  // namespace siteaddr

#endif
