#ifndef SITEADDR_DYNAMICS_HPP
#define SITEADDR_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "siteaddr/pulse.hpp"
#include "siteaddr/qubit.hpp"

namespace siteaddr {

struct SolverStats {
  long steps = 0;
  long rejected_steps = 0;
  double est_error = 0.0;  // accumulated local error estimate
  double norm_drift = 0.0; // |norm(final) - 1| before renormalization
};

struct EvolutionResult {
  std::vector<std::pair<double, QubitState>> trajectory;  // (t, state)
  QubitState final;
  SolverStats stats;
};

// Integrates the two-level equation of motion
//
//   i d/dt (c0, c1)^T = [[0, e^{-i chi} Omega(t)/2],
//                        [e^{i chi} Omega(t)/2, -delta]] (c0, c1)^T
//
// over the pulse window with an embedded Dormand-Prince 5(4) pair, local
// relative error <= tol, tol in [1e-12, 1e-6]. Trajectory points (if
// requested) are uniform in time via the solver's dense-output interpolant
// and are stored renormalized; stats.norm_drift records the raw drift.
// Throws numeric_error on step-size underflow (carries the reached time).
EvolutionResult evolve(const QubitState& initial, const PulseShape& pulse,
                       double delta, double tol, int trajectory_samples = 0);

// Closed-form resonant (delta = 0, chi = 0) population of |1>:
//
//   |c1(t)|^2 = (1 - rho sin(eta Omega0/omega0 + phi)) / 2
//   rho = sqrt(1 - 4 |c0|^2 |c1|^2 cos^2 theta),  eta = omega0 int exp(-omega0^2 t'^2) dt'
//
// phi is the branch of arcsin((1 - 2|c1|^2)/rho) consistent with the initial
// slope (arcsin alone is ambiguous when sin(theta0) < 0). For rho = 0 (drive
// axis eigenstate) the population is stationary at exactly 1/2;
// *degenerate is set when provided.
double analytic_resonant_population(const QubitState& initial, double amplitude,
                                    double omega0, double t,
                                    bool* degenerate = nullptr);

// epsilon = ||c1(t_f)|^2 - |c1(-t_f)|^2| for a gaussian pulse at detuning
// delta, integrated at solver tolerance 1e-10.
double manipulation_error(const QubitState& initial, double amplitude,
                          double omega0, double delta);

// Trajectory CSV: omega0_t,re_c0,im_c0,re_c1,im_c1,p1,Sx,Sy,Sz
void export_trajectory_csv(const EvolutionResult& result, double omega0,
                           std::ostream& out);

}  // namespace siteaddr

#endif
