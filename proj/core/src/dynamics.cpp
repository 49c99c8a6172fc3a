#include "siteaddr/dynamics.hpp"

#include <array>
#include <cmath>
#include <ostream>

#include "siteaddr/constants.hpp"
#include "siteaddr/csv.hpp"
#include "siteaddr/errors.hpp"
#include "siteaddr/special.hpp"

namespace siteaddr {

double PulseShape::envelope(double t) const {
  if (t < t_start || t > t_end) return 0.0;
  switch (kind) {
    case PulseKind::gaussian:
      return amplitude * std::exp(-width_param * width_param * t * t);
    case PulseKind::square:
      return amplitude;
    case PulseKind::custom:
      return custom_envelope(t);
  }
  return 0.0;
}

PulseShape PulseShape::gaussian_pulse(double omega0, double amplitude, double chi) {
  if (!(omega0 > 0.0)) throw domain_error("gaussian_pulse: omega0 must be > 0");
  if (amplitude < 0.0) throw domain_error("gaussian_pulse: amplitude must be >= 0");
  PulseShape p;
  p.kind = PulseKind::gaussian;
  p.amplitude = amplitude;
  p.width_param = omega0;
  p.chi = chi;
  p.t_start = -7.0 / omega0;
  p.t_end = 7.0 / omega0;
  return p;
}

PulseShape PulseShape::square_pulse(double amplitude, double duration, double chi) {
  if (!(duration > 0.0)) throw domain_error("square_pulse: duration must be > 0");
  PulseShape p;
  p.kind = PulseKind::square;
  p.amplitude = amplitude;
  p.width_param = 1.0 / duration;
  p.chi = chi;
  p.t_start = -duration / 2.0;
  p.t_end = duration / 2.0;
  return p;
}

double pulse_area(double amplitude, double omega0) {
  if (!(omega0 > 0.0)) throw domain_error("pulse_area: omega0 must be > 0");
  return amplitude / omega0 * gaussian_envelope_integral(7.0, 7.0);
}

namespace {

using Vec4 = std::array<double, 4>;  // (re c0, im c0, re c1, im c1)

struct Rhs {
  const PulseShape& pulse;
  double delta;
  double cos_chi, sin_chi;

  Vec4 operator()(double t, const Vec4& y) const {
    const double half_om = 0.5 * pulse.envelope(t);
    // -i e^{-i chi} (Om/2) c1  and  -i e^{i chi} (Om/2) c0 + i delta c1
    const double ar = half_om * (cos_chi * y[2] + sin_chi * y[3]);
    const double ai = half_om * (cos_chi * y[3] - sin_chi * y[2]);
    const double br = half_om * (cos_chi * y[0] - sin_chi * y[1]);
    const double bi = half_om * (cos_chi * y[1] + sin_chi * y[0]);
    return Vec4{ai, -ar, bi - delta * y[3], -br + delta * y[2]};
  }
};

// Dormand-Prince RK5(4)7M tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
constexpr double e7 = -1.0 / 40.0;

// dense-output coefficients (Hairer & Wanner DOPRI5 continuous extension)
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

Vec4 axpy(const Vec4& y, double h, std::initializer_list<std::pair<double, const Vec4*>> terms) {
  Vec4 out = y;
  for (const auto& [c, k] : terms)
    for (int i = 0; i < 4; ++i) out[i] += h * c * (*k)[i];
  return out;
}

struct DenseSegment {
  double t0, h;
  Vec4 r1, r2, r3, r4, r5;

  Vec4 eval(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    Vec4 out;
    for (int i = 0; i < 4; ++i)
      out[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
    return out;
  }
};

// normalizes before construction so coarse-tolerance drift cannot trip the
// QubitState norm check
QubitState to_state_normalized(const Vec4& y) {
  const double n =
      std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
  return QubitState(cplx(y[0], y[1]) / n, cplx(y[2], y[3]) / n);
}

}  // namespace

EvolutionResult evolve(const QubitState& initial, const PulseShape& pulse,
                       double delta, double tol, int trajectory_samples) {
  if (!(tol >= 1e-12 && tol <= 1e-6))
    throw domain_error("evolve: tol must be in [1e-12, 1e-6]");
  if (!(pulse.t_end > pulse.t_start)) throw domain_error("evolve: empty pulse window");

  const Rhs rhs{pulse, delta, std::cos(pulse.chi), std::sin(pulse.chi)};
  const double t0 = pulse.t_start, t1 = pulse.t_end;
  // The controller targets three digits below the requested tolerance: the
  // RK pair loses norm systematically, and pulse-scale integrations need the
  // accumulated drift, not just the local error, to stay within tol.
  const double tol_ctrl = std::max(tol * 1e-3, 1e-15);

  Vec4 y{initial.c0().real(), initial.c0().imag(), initial.c1().real(),
         initial.c1().imag()};
  double t = t0;
  double h = (t1 - t0) / 100.0;
  const double h_min = (t1 - t0) * 1e-15;

  SolverStats stats;
  std::vector<double> sample_times;
  std::vector<Vec4> samples;
  int next_sample = 0;
  if (trajectory_samples > 1) {
    sample_times.resize(trajectory_samples);
    for (int i = 0; i < trajectory_samples; ++i)
      sample_times[i] = t0 + (t1 - t0) * i / (trajectory_samples - 1);
    samples.resize(trajectory_samples);
    samples[0] = y;
    next_sample = 1;
  }

  Vec4 k1 = rhs(t, y);
  while (t < t1) {
    if (h < h_min)
      throw numeric_error("evolve: step size underflow at t = " + std::to_string(t),
                          t);
    if (t + h > t1) h = t1 - t;

    const Vec4 k2 = rhs(t + h / 5.0, axpy(y, h, {{a21, &k1}}));
    const Vec4 k3 = rhs(t + 3.0 * h / 10.0, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const Vec4 k4 = rhs(t + 4.0 * h / 5.0, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const Vec4 k5 = rhs(t + 8.0 * h / 9.0,
                        axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const Vec4 k6 = rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3},
                                           {a64, &k4}, {a65, &k5}}));
    const Vec4 y1 = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const Vec4 k7 = rhs(t + h, y1);

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = tol_ctrl + tol_ctrl * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      if (next_sample > 0 && next_sample < trajectory_samples) {
        DenseSegment seg;
        seg.t0 = t;
        seg.h = h;
        for (int i = 0; i < 4; ++i) {
          const double ydiff = y1[i] - y[i];
          const double bspl = h * k1[i] - ydiff;
          seg.r1[i] = y[i];
          seg.r2[i] = ydiff;
          seg.r3[i] = bspl;
          seg.r4[i] = ydiff - h * k7[i] - bspl;
          seg.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                           d6 * k6[i] + d7 * k7[i]);
        }
        while (next_sample < trajectory_samples &&
               sample_times[next_sample] <= t + h + 1e-30) {
          samples[next_sample] = seg.eval(sample_times[next_sample]);
          ++next_sample;
        }
      }
      t += h;
      y = y1;
      k1 = k7;  // FSAL
      ++stats.steps;
      stats.est_error += err * tol_ctrl;
    } else {
      ++stats.rejected_steps;
    }
    const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, factor));
  }

  const double norm = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
  stats.norm_drift = std::abs(norm - 1.0);

  EvolutionResult result{{}, to_state_normalized(y), stats};
  if (trajectory_samples > 1) {
    samples.back() = y;
    result.trajectory.reserve(trajectory_samples);
    for (int i = 0; i < trajectory_samples; ++i)
      result.trajectory.emplace_back(sample_times[i], to_state_normalized(samples[i]));
  }
  return result;
}

double analytic_resonant_population(const QubitState& initial, double amplitude,
                                    double omega0, double t, bool* degenerate) {
  if (!(omega0 > 0.0))
    throw domain_error("analytic_resonant_population: omega0 must be > 0");
  const double p0 = initial.p0();
  const double p1 = initial.p1();
  const double theta = initial.relative_phase();
  const double rho2 = 1.0 - 4.0 * p0 * p1 * std::cos(theta) * std::cos(theta);
  const double rho = std::sqrt(std::max(0.0, rho2));
  if (degenerate) *degenerate = false;
  if (rho < 1e-12) {
    // drive-axis eigenstate: stationary at 1/2, phi undefined
    if (degenerate) *degenerate = true;
    return 0.5;
  }
  const double phi =
      std::atan2(1.0 - 2.0 * p1, 2.0 * std::sqrt(p0 * p1) * std::sin(theta));
  const double eta = gaussian_envelope_integral(omega0 * t, 7.0);
  return (1.0 - rho * std::sin(eta * amplitude / omega0 + phi)) / 2.0;
}

double manipulation_error(const QubitState& initial, double amplitude,
                          double omega0, double delta) {
  const PulseShape pulse = PulseShape::gaussian_pulse(omega0, amplitude);
  const EvolutionResult r = evolve(initial, pulse, delta, 1e-10);
  return std::abs(r.final.p1() - initial.p1());
}

void export_trajectory_csv(const EvolutionResult& result, double omega0,
                           std::ostream& out) {
  out << "omega0_t,re_c0,im_c0,re_c1,im_c1,p1,Sx,Sy,Sz\n";
  for (const auto& [t, state] : result.trajectory) {
    const BlochVector v = bloch(state);
    write_csv_row(out, {omega0 * t, state.c0().real(), state.c0().imag(),
                        state.c1().real(), state.c1().imag(), state.p1(), v.sx,
                        v.sy, v.sz});
  }
}

}  // namespace siteaddr
