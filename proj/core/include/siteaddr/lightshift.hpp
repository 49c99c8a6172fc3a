#ifndef SITEADDR_LIGHTSHIFT_HPP
#define SITEADDR_LIGHTSHIFT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "siteaddr/lines.hpp"
#include "siteaddr/optics.hpp"
#include "siteaddr/units.hpp"

namespace siteaddr {

// AC Stark shift of qubit state `state` under absolute intensity I_abs at
// laser wavelength lambda_f:
//
//   dE_i = (3 pi c^2 / 2) I sum_j Gamma_j |c_ij|^2 / (omega_ij^3 Delta_ij)
//
// with Delta_ij = omega_laser - omega_ij. Red detuning gives a negative
// (attractive) shift. Returns Joules. Throws domain_error when the laser sits
// within 1e3 Gamma_j of a listed line (names the offending transition).
double stark_shift(const AtomicLineData& lines, int state, double intensity,
                   double lambda_f);

// Photon scattering rate, same structure with Gamma_j^2 and Delta_ij^2:
//   R = (3 pi c^2 / 2 hbar) I sum_j Gamma_j^2 |c_ij|^2 / (omega_ij^3 Delta_ij^2)
double scattering_rate(const AtomicLineData& lines, int state, double intensity,
                       double lambda_f);

// Peak intensity that calibrates |dE1(0) - dE0(0)| to the requested splitting.
double calibrated_peak_intensity(const AtomicLineData& lines, double lambda_f,
                                 double splitting_joule);

enum class CalibrationMode { raw, calibrated };

struct ShiftCalibration {
  CalibrationMode mode = CalibrationMode::calibrated;
  double splitting_er = 107.0;  // |dE(0)| in E_r, calibrated mode
};

// Radial map of the state shifts, their difference and the microwave
// detuning. Energies in E_r, radii in lattice wavelengths, delta in E_r/hbar.
struct ShiftMap {
  std::vector<double> r_over_lambda;
  std::vector<double> de0_er;
  std::vector<double> de1_er;
  std::vector<double> abs_de_er;   // |dE1 - dE0|
  std::vector<double> delta_er;    // (|dE(0)| - |dE(r)|) / E_r, >= 0
  CalibrationMode mode;
  double lambda_f;                 // m
  double peak_intensity;           // W/m^2 backing the map

  double grid_step() const { return r_over_lambda[1] - r_over_lambda[0]; }
  // Catmull-Rom interpolation between grid samples, E_r.
  double abs_de_at(double r_over_lam) const;
  double de_at(int state, double r_over_lam) const;
  double delta_at(double r_over_lam) const;  // E_r/hbar units
};

ShiftMap shift_map(const IntensityProfile& profile, const AtomicLineData& lines,
                   const ShiftCalibration& calibration, const UnitSystem& units);

void export_shift_map_csv(const ShiftMap& map, std::ostream& out);

// --- optical potentials -----------------------------------------------------

struct LatticeParams {
  double depth_er;  // V_L per axis
};

// V_i(x, y) = V_L (sin^2 kx + sin^2 ky) + dE_i(r), focus centered on site A
// at the origin, sites at multiples of lambda/2. Energies E_r, lengths in
// lattice wavelengths.
struct PotentialMap {
  std::vector<double> x_over_lambda;
  std::vector<double> y_over_lambda;
  std::vector<double> v0;  // row-major [iy * nx + ix]
  std::vector<double> v1;
  double lattice_depth_er;
  double barrier_er;        // minimal escape barrier for atom B, state |0>
  double barrier_position;  // x of the saddle on the B->A line, lambda units

  double at(int state, int ix, int iy) const;
};

PotentialMap potential_map(const LatticeParams& lattice, const ShiftMap& shifts,
                           double half_extent_over_lambda, int points_per_axis);

// Minimal potential barrier confining atom B = (lambda/2, 0) in state
// `state`: the lowest saddle over the escape paths toward A, away from A and
// perpendicular to the B-A line. focus_scale in [0, 1] scales the focus
// contribution (used while the beam ramps). Energies E_r.
struct BarrierResult {
  double height_er;
  double saddle_position;  // lambda units along the limiting path
  double well_er;          // potential at B's local minimum
};
BarrierResult escape_barrier(const LatticeParams& lattice, const ShiftMap& shifts,
                             int state, double focus_scale = 1.0);

void export_potential_csv(const PotentialMap& map, std::ostream& out);

// --- error-budget estimates -------------------------------------------------

// Spontaneous-scattering probability over a manipulation of the given
// duration: worst qubit state at the map's peak intensity.
double scattering_probability(const AtomicLineData& lines, const ShiftMap& shifts,
                              double duration_s);

struct WavelengthOptimum {
  double lambda;  // m
  double ratio;   // splitting / worst-state scattering rate, s
};

// argmax over lambda of |dE1 - dE0| / max_i R_sc,i (intensity drops out).
// Grid scan plus golden-section refinement; the range must stay clear of
// every listed line by 1e3 Gamma_j. Throws domain_error when the maximum is
// not interior to the range.
WavelengthOptimum optimize_wavelength(const AtomicLineData& lines,
                                      double lambda_lo, double lambda_hi);

// Microwave detuning from a transverse focus misalignment dx:
//   delta_mis = |d^2 |dE| / dr^2|_0 dx^2 / (2 hbar),
// curvature from a symmetric second difference on the calibrated map.
// Returns rad/s. Throws numeric_error when the grid is too coarse for a
// stable second difference.
double misalignment_detuning(const ShiftMap& shifts, double dx_m,
                             const UnitSystem& units);

// Detection crosstalk (Gamma1 / 2 delta1)^2 * I_ratio: photons scattered on a
// non-target atom per photon on the target during readout.
double detection_crosstalk(double gamma1, double delta1, double intensity_ratio);

}  // namespace siteaddr

#endif
