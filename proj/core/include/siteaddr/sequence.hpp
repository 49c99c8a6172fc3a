#ifndef SITEADDR_SEQUENCE_HPP
#define SITEADDR_SEQUENCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "siteaddr/lightshift.hpp"
#include "siteaddr/qubit.hpp"
#include "siteaddr/units.hpp"

namespace siteaddr {

// Highest adiabatic focus ramp rate, E_r/s, at the current barrier height.
// The limit is set by atom B (r = lambda/2) in state |0>:
//
//   |d(dE0(0)/E_r)/dt| = xi * 8 wbar^2 (dV/E_r)^{5/4} E_r
//                        / (hbar a0 r exp(-2 r^2 / wbar^2))
//
// wbar is the effective Gaussian waist of the focus in lattice units.
// Throws domain_error for a non-positive barrier (trap destroyed).
double ramp_rate(double barrier_er, double xi, double wbar_over_lambda,
                 const UnitSystem& units);

// Coefficient of xi (dV/E_r)^{5/4} in the rate, Hz.
double ramp_rate_prefactor(double wbar_over_lambda, const UnitSystem& units);

struct RampSchedule {
  double xi;
  double target_shift_er;    // |dE0(0)| at full focus
  double total_time;         // s
  double effective_time;     // int (dE(t)/dE_f) dt, full-intensity-equivalent, s
  double rate_prefactor_hz;
  double final_barrier_er;
  std::string limiting_atom; // "B|0>"
  double wbar_over_lambda;
};

// Integrates dt = d(dE)/rate(dE) from zero focus to the calibrated shift,
// recomputing the barrier at each intermediate focus level. Simpson rule on
// `nodes` points (rounded up to odd). Throws domain_error when the barrier
// collapses before the target (message carries the max reachable shift).
RampSchedule ramp_schedule(const ShiftMap& shifts, const LatticeParams& lattice,
                           double xi, double wbar_over_lambda,
                           const UnitSystem& units, int nodes = 401);

// --- refocusing sequence -----------------------------------------------------

struct SiteSpec {
  std::string label;
  double r_over_lambda;
  double delta;  // microwave detuning at the site, rad/s (0 for the target)
  QubitState initial;
};

struct SiteResult {
  std::string label;
  double r_over_lambda = 0.0;
  double delta = 0.0;
  QubitState initial{cplx(1.0, 0.0), cplx(0.0, 0.0)};
  QubitState final{cplx(1.0, 0.0), cplx(0.0, 0.0)};
  double pop_error = 0.0;    // vs the intended outcome (see below)
  double phase_error = 0.0;  // rad, wrapped to [0, pi]
};

struct RefocusOptions {
  double alpha = 0.0;               // net target rotation area, rad, in [0, 2 pi]
  double omega0 = 1.0;              // gaussian pulse width parameter, rad/s
  double ramp_phase_time = 0.0;     // per-ramp full-intensity-equivalent time, s
  double static_phase_drift = 0.0;  // rad accrued per half-sequence, all sites
  bool instantaneous_refocus = true;
  double refocus_duration = 0.0;    // s, finite square-pi mode
  bool focus_on_during_refocus = false;
  double solver_tol = 1e-10;
};

// Four-step plan: (i) ramp up, alpha/2 gaussian pulse, ramp down;
// (ii) fast resonant pi around S_x; (iii) repeat (i); (iv) second pi.
// Ramps act on non-targets as pure detuning phase (delta scales with the
// instantaneous focus level, integrated time = ramp_phase_time). Errors are
// measured against the intended outcome: a single area-alpha resonant pulse
// for the target (delta == 0), the unchanged initial state for everyone else.
std::vector<SiteResult> refocused_rotation(const std::vector<SiteSpec>& sites,
                                           const RefocusOptions& options);

void export_sequence_csv(const std::vector<SiteResult>& results,
                         const UnitSystem& units, std::ostream& out);

// --- tunneling ---------------------------------------------------------------

// Fermi-golden-rule escape time 1/varpi, varpi = 2 pi J^2 / (hbar E_g).
double tunneling_time(double e_gap_er, double hopping_er, const UnitSystem& units);

// 1-D tight-binding hopping at depth V: (4/sqrt(pi)) V^{3/4} exp(-2 sqrt(V)), E_r.
double tight_binding_hopping(double depth_er);

// Trap quantum of a sin^2 well of depth V: hbar omega_trap = 2 sqrt(V E_r), E_r.
double site_trap_quantum(double depth_er);

}  // namespace siteaddr

#endif
