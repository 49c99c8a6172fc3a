#ifndef SITEADDR_PULSE_HPP
#define SITEADDR_PULSE_HPP

#include <functional>

namespace siteaddr {

enum class PulseKind { gaussian, square, custom };

// Time-dependent microwave Rabi envelope Omega(t) >= 0 on [t_start, t_end]
// with drive phase chi.
struct PulseShape {
  PulseKind kind = PulseKind::gaussian;
  double amplitude = 0.0;    // Omega_0, rad/s
  double width_param = 1.0;  // omega_0, rad/s (gaussian kind)
  double chi = 0.0;          // rad
  double t_start = 0.0;      // s
  double t_end = 0.0;        // s
  std::function<double(double)> custom_envelope;  // rad/s, custom kind

  double envelope(double t) const;
  double duration() const { return t_end - t_start; }

  // Omega_0 exp(-omega0^2 t^2) on the standard window omega0 |t| <= 7. The
  // neglected tail carries < 1e-21 of the pulse area, so "pi pulse" always
  // means area pi*erf(7).
  static PulseShape gaussian_pulse(double omega0, double amplitude, double chi = 0.0);

  // Constant amplitude over [-duration/2, duration/2].
  static PulseShape square_pulse(double amplitude, double duration, double chi = 0.0);
};

// Integrated Rabi area of the gaussian pulse over its window, rad:
// (Omega0/omega0) sqrt(pi) erf(7).
double pulse_area(double amplitude, double omega0);

}  // namespace siteaddr

#endif
