#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace siteaddr::test {

double romberg(const std::function<double(double)>& f, double a, double b,
               double rel_tol, int max_levels) {
  std::vector<std::vector<double>> r(1);
  double h = b - a;
  r[0].push_back(0.5 * h * (f(a) + f(b)));
  for (int k = 1; k < max_levels; ++k) {
    h *= 0.5;
    // trapezoid refinement: add midpoints of the previous level
    double sum = 0.0;
    const long n = 1L << (k - 1);
    for (long i = 0; i < n; ++i) sum += f(a + (2 * i + 1) * h);
    r.emplace_back();
    r[k].push_back(0.5 * r[k - 1][0] + h * sum);
    double p4 = 4.0;
    for (int j = 1; j <= k; ++j) {
      r[k].push_back(r[k][j - 1] + (r[k][j - 1] - r[k - 1][j - 1]) / (p4 - 1.0));
      p4 *= 4.0;
    }
    const double cur = r[k][k], prev = r[k - 1][k - 1];
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300))
      return cur;
  }
  throw std::runtime_error("romberg: no convergence");
}

QubitState expm_evolve(const QubitState& initial,
                       const std::function<double(double)>& envelope,
                       double chi, double delta, double t0, double t1,
                       int steps) {
  using C = std::complex<double>;
  C c0 = initial.c0(), c1 = initial.c1();
  const double h = (t1 - t0) / steps;
  const C eic = std::polar(1.0, chi);
  for (int i = 0; i < steps; ++i) {
    const double tm = t0 + (i + 0.5) * h;
    const double om = envelope(tm);
    // H = [[0, conj(eic) om/2], [eic om/2, -delta]]; exact 2x2 exponential
    // exp(-i H h) via the su(2) decomposition H = d0 I + n . sigma/...:
    const double d0 = -delta / 2.0;                 // trace part
    const double nz = delta / 2.0;                  // (H00 - H11)/2
    const C nxy = std::conj(eic) * (om / 2.0);      // H01
    const double nmag = std::sqrt(nz * nz + std::norm(nxy));
    C u00, u01, u10, u11;
    if (nmag < 1e-300) {
      u00 = u11 = 1.0;
      u01 = u10 = 0.0;
    } else {
      const double ch = std::cos(nmag * h), sh = std::sin(nmag * h);
      const C f = C(0.0, -1.0) * (sh / nmag);
      u00 = ch + f * nz;
      u11 = ch - f * nz;
      u01 = f * nxy;
      u10 = f * std::conj(nxy);
    }
    const C phase = std::polar(1.0, -d0 * h);
    const C a = phase * (u00 * c0 + u01 * c1);
    const C b = phase * (u10 * c0 + u11 * c1);
    c0 = a;
    c1 = b;
  }
  const double n = std::sqrt(std::norm(c0) + std::norm(c1));
  return QubitState(c0 / n, c1 / n);
}

double square_pulse_p1(double omega, double delta, double t) {
  const double g = std::sqrt(omega * omega + delta * delta);
  const double s = std::sin(g * t / 2.0);
  return omega * omega / (g * g) * s * s;
}

double fine_grid_argmax(const std::function<double(double)>& f, double a,
                        double b, int n) {
  double best_x = a, best = f(a);
  for (int i = 1; i < n; ++i) {
    const double x = a + (b - a) * i / (n - 1);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace siteaddr::test
