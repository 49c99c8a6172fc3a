#include "siteaddr/sequence.hpp"

#include <cmath>
#include <ostream>

#include "siteaddr/constants.hpp"
#include "siteaddr/csv.hpp"
#include "siteaddr/dynamics.hpp"
#include "siteaddr/errors.hpp"
#include "siteaddr/special.hpp"

namespace siteaddr {

double ramp_rate_prefactor(double wbar_over_lambda, const UnitSystem& units) {
  const double w2 = wbar_over_lambda * wbar_over_lambda;
  const double a0 = units.length_scale / units.lattice_wavelength;
  const double r = 0.5;  // atom B, lattice units
  return 8.0 * w2 * std::exp(2.0 * r * r / w2) / (a0 * r) * units.recoil_frequency();
}

double ramp_rate(double barrier_er, double xi, double wbar_over_lambda,
                 const UnitSystem& units) {
  if (!(barrier_er > 0.0))
    throw domain_error("ramp_rate: non-positive barrier, trap destroyed");
  if (!(xi > 0.0 && xi < 1.0)) throw domain_error("ramp_rate: xi must be in (0, 1)");
  return xi * ramp_rate_prefactor(wbar_over_lambda, units) *
         std::pow(barrier_er, 1.25);
}

RampSchedule ramp_schedule(const ShiftMap& shifts, const LatticeParams& lattice,
                           double xi, double wbar_over_lambda,
                           const UnitSystem& units, int nodes) {
  const double target = std::abs(shifts.de0_er[0]);
  if (!(target > 0.0)) throw domain_error("ramp_schedule: zero target shift");
  if (nodes < 3) throw domain_error("ramp_schedule: need >= 3 nodes");
  if (nodes % 2 == 0) ++nodes;  // Simpson wants an odd count

  const double h = target / (nodes - 1);
  std::vector<double> inv_rate(nodes), weighted(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double d = i * h;
    const BarrierResult b = escape_barrier(lattice, shifts, 0, d / target);
    if (b.height_er <= 0.0)
      throw domain_error("ramp_schedule: barrier collapses at dE0(0) = " +
                         std::to_string(d) + " E_r before reaching " +
                         std::to_string(target) + " E_r");
    inv_rate[i] = 1.0 / ramp_rate(b.height_er, xi, wbar_over_lambda, units);
    weighted[i] = (d / target) * inv_rate[i];
  }
  auto simpson = [h, nodes](const std::vector<double>& f) {
    double s = f[0] + f[nodes - 1];
    for (int i = 1; i < nodes - 1; ++i) s += f[i] * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };

  RampSchedule sched;
  sched.xi = xi;
  sched.target_shift_er = target;
  sched.total_time = simpson(inv_rate);
  sched.effective_time = simpson(weighted);
  sched.rate_prefactor_hz = ramp_rate_prefactor(wbar_over_lambda, units);
  sched.final_barrier_er = escape_barrier(lattice, shifts, 0, 1.0).height_er;
  sched.limiting_atom = "B|0>";
  sched.wbar_over_lambda = wbar_over_lambda;
  return sched;
}

// --- refocusing sequence -----------------------------------------------------

namespace {

QubitState apply_phase(const QubitState& s, double phase) {
  return QubitState(s.c0(), s.c1() * std::polar(1.0, phase));
}

// instantaneous R_x(pi) = -i sigma_x
QubitState apply_x_pi(const QubitState& s) {
  return QubitState(cplx(0.0, -1.0) * s.c1(), cplx(0.0, -1.0) * s.c0());
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * pi);
  if (a > pi) a -= 2.0 * pi;
  if (a < -pi) a += 2.0 * pi;
  return std::abs(a);
}

}  // namespace

std::vector<SiteResult> refocused_rotation(const std::vector<SiteSpec>& sites,
                                           const RefocusOptions& opt) {
  if (opt.alpha < 0.0 || opt.alpha > 2.0 * pi + 1e-12)
    throw domain_error("refocused_rotation: alpha must be in [0, 2 pi]");
  if (!(opt.omega0 > 0.0)) throw domain_error("refocused_rotation: omega0 must be > 0");

  // amplitude for an area alpha/2 gaussian pulse
  const double area_unit = gaussian_envelope_integral(7.0, 7.0);  // sqrt(pi) erf(7)
  const double amp_half = (opt.alpha / 2.0) / area_unit * opt.omega0;

  std::vector<SiteResult> results;
  results.reserve(sites.size());
  for (const auto& site : sites) {
    QubitState state = site.initial;

    const auto half_step = [&](QubitState s) {
      const double ramp_phase = site.delta * opt.ramp_phase_time;
      s = apply_phase(s, ramp_phase);  // ramp up
      if (opt.alpha > 0.0) {
        const PulseShape pulse = PulseShape::gaussian_pulse(opt.omega0, amp_half);
        s = evolve(s, pulse, site.delta, opt.solver_tol).final;
      }
      s = apply_phase(s, ramp_phase);             // ramp down
      s = apply_phase(s, opt.static_phase_drift);  // environmental drift
      return s;
    };
    const auto refocus_pulse = [&](QubitState s) {
      if (opt.instantaneous_refocus) return apply_x_pi(s);
      const double delta_during = opt.focus_on_during_refocus ? site.delta : 0.0;
      const PulseShape sq =
          PulseShape::square_pulse(pi / opt.refocus_duration, opt.refocus_duration);
      return evolve(s, sq, delta_during, opt.solver_tol).final;
    };

    state = half_step(state);
    state = refocus_pulse(state);
    state = half_step(state);
    state = refocus_pulse(state);

    SiteResult r;
    r.label = site.label;
    r.r_over_lambda = site.r_over_lambda;
    r.delta = site.delta;
    r.initial = site.initial;
    r.final = state;
    if (site.delta == 0.0) {
      // target: intended outcome is a single resonant area-alpha pulse
      QubitState ref = site.initial;
      if (opt.alpha > 0.0) {
        const PulseShape full =
            PulseShape::gaussian_pulse(opt.omega0, 2.0 * amp_half);
        ref = evolve(site.initial, full, 0.0, opt.solver_tol).final;
      }
      r.pop_error = std::abs(state.p1() - ref.p1());
      const bool transverse = ref.p0() > 1e-12 && ref.p1() > 1e-12;
      r.phase_error =
          transverse ? wrap_angle(state.relative_phase() - ref.relative_phase())
                     : 0.0;
    } else {
      r.pop_error = std::abs(state.p1() - site.initial.p1());
      const bool transverse = site.initial.p0() > 1e-12 && site.initial.p1() > 1e-12;
      r.phase_error = transverse ? wrap_angle(state.relative_phase() -
                                              site.initial.relative_phase())
                                 : 0.0;
    }
    results.push_back(std::move(r));
  }
  return results;
}

void export_sequence_csv(const std::vector<SiteResult>& results,
                         const UnitSystem& units, std::ostream& out) {
  out << "site,r_over_lambda,delta_Er_per_hbar,p1_initial,p1_final,"
         "theta_initial_rad,theta_final_rad,pop_error,phase_error\n";
  for (const auto& r : results) {
    out << r.label << ',';
    write_csv_row(out, {r.r_over_lambda,
                        units.angular_frequency_to_recoil(r.delta),
                        r.initial.p1(), r.final.p1(),
                        r.initial.relative_phase(), r.final.relative_phase(),
                        r.pop_error, r.phase_error});
  }
}

// --- tunneling ---------------------------------------------------------------

double tunneling_time(double e_gap_er, double hopping_er, const UnitSystem& units) {
  if (!(hopping_er > 0.0)) throw domain_error("tunneling_time: J must be > 0");
  if (!(e_gap_er > 0.0)) throw domain_error("tunneling_time: E_g must be > 0");
  const double varpi =
      2.0 * pi * hopping_er * hopping_er / e_gap_er * units.recoil_frequency();
  return 1.0 / varpi;
}

double tight_binding_hopping(double depth_er) {
  if (!(depth_er > 0.0)) throw domain_error("tight_binding_hopping: depth must be > 0");
  return 4.0 / std::sqrt(pi) * std::pow(depth_er, 0.75) *
         std::exp(-2.0 * std::sqrt(depth_er));
}

double site_trap_quantum(double depth_er) {
  if (!(depth_er > 0.0)) throw domain_error("site_trap_quantum: depth must be > 0");
  return 2.0 * std::sqrt(depth_er);
}

}  // namespace siteaddr
