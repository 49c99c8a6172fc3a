#include "siteaddr/lightshift.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "siteaddr/constants.hpp"
#include "siteaddr/csv.hpp"
#include "siteaddr/errors.hpp"
#include "siteaddr/interp.hpp"
#include "siteaddr/optimize.hpp"

namespace siteaddr {

namespace {

constexpr double resonance_margin = 1e3;  // |Delta| >= margin * Gamma
constexpr double stark_prefactor = 3.0 * pi * speed_of_light * speed_of_light / 2.0;

double laser_omega(double lambda_f) { return 2.0 * pi * speed_of_light / lambda_f; }

void check_resonance(const TransitionLine& l, double omega_laser) {
  if (std::abs(omega_laser - l.omega) < resonance_margin * l.gamma)
    throw domain_error("stark_shift: laser within " +
                       std::to_string(resonance_margin) + " linewidths of " +
                       l.label + " (state " + std::to_string(l.state) + ")");
}

// sum_j Gamma_j |c_ij|^2 / (omega_ij^3 Delta_ij), per unit prefactor*intensity
double shift_sum(const AtomicLineData& lines, int state, double omega_laser) {
  double s = 0.0;
  for (const auto& l : lines.all()) {
    if (l.state != state) continue;
    check_resonance(l, omega_laser);
    const double delta = omega_laser - l.omega;
    s += l.gamma * l.cij_sq / (l.omega * l.omega * l.omega * delta);
  }
  return s;
}

// sum_j Gamma_j^2 |c_ij|^2 / (omega_ij^3 Delta_ij^2)
double scatter_sum(const AtomicLineData& lines, int state, double omega_laser) {
  double s = 0.0;
  for (const auto& l : lines.all()) {
    if (l.state != state) continue;
    check_resonance(l, omega_laser);
    const double delta = omega_laser - l.omega;
    s += l.gamma * l.gamma * l.cij_sq / (l.omega * l.omega * l.omega * delta * delta);
  }
  return s;
}

}  // namespace

double stark_shift(const AtomicLineData& lines, int state, double intensity,
                   double lambda_f) {
  if (intensity < 0.0) throw domain_error("stark_shift: intensity must be >= 0");
  return stark_prefactor * intensity * shift_sum(lines, state, laser_omega(lambda_f));
}

double scattering_rate(const AtomicLineData& lines, int state, double intensity,
                       double lambda_f) {
  if (intensity < 0.0) throw domain_error("scattering_rate: intensity must be >= 0");
  return stark_prefactor / planck_reduced * intensity *
         scatter_sum(lines, state, laser_omega(lambda_f));
}

double calibrated_peak_intensity(const AtomicLineData& lines, double lambda_f,
                                 double splitting_joule) {
  if (!(splitting_joule > 0.0))
    throw domain_error("calibrated_peak_intensity: splitting must be > 0");
  const double w = laser_omega(lambda_f);
  const double diff = shift_sum(lines, 1, w) - shift_sum(lines, 0, w);
  return splitting_joule / (stark_prefactor * std::abs(diff));
}

ShiftMap shift_map(const IntensityProfile& profile, const AtomicLineData& lines,
                   const ShiftCalibration& calibration, const UnitSystem& units) {
  const double lambda_f = profile.geometry.wavelength;

  double i0;
  if (calibration.mode == CalibrationMode::calibrated) {
    if (!(calibration.splitting_er > 0.0))
      throw domain_error("shift_map: calibrated splitting must be > 0");
    i0 = calibrated_peak_intensity(
        lines, lambda_f, units.energy_from_recoil(calibration.splitting_er));
  } else {
    // absolute shifts from the beam power
    i0 = peak_intensity(profile.geometry, profile.geometry.power,
                        std::max(profile.r_max(), 10.0 * lambda_f),
                        profile.quadrature_tolerance);
  }

  ShiftMap map;
  map.mode = calibration.mode;
  map.lambda_f = lambda_f;
  map.peak_intensity = i0;
  const int n = static_cast<int>(profile.radius.size());
  map.r_over_lambda.resize(n);
  map.de0_er.resize(n);
  map.de1_er.resize(n);
  map.abs_de_er.resize(n);
  map.delta_er.resize(n);
  for (int i = 0; i < n; ++i) {
    map.r_over_lambda[i] = units.length_to_lattice(profile.radius[i]);
    const double local_i = i0 * profile.i_rel[i];
    map.de0_er[i] = units.energy_to_recoil(stark_shift(lines, 0, local_i, lambda_f));
    map.de1_er[i] = units.energy_to_recoil(stark_shift(lines, 1, local_i, lambda_f));
    map.abs_de_er[i] = std::abs(map.de1_er[i] - map.de0_er[i]);
  }
  for (int i = 0; i < n; ++i) map.delta_er[i] = map.abs_de_er[0] - map.abs_de_er[i];
  return map;
}

double ShiftMap::abs_de_at(double r_over_lam) const {
  return detail::catmull_rom_uniform(abs_de_er, grid_step(), r_over_lam);
}

double ShiftMap::de_at(int state, double r_over_lam) const {
  return detail::catmull_rom_uniform(state == 0 ? de0_er : de1_er, grid_step(),
                                     r_over_lam);
}

double ShiftMap::delta_at(double r_over_lam) const {
  return abs_de_er[0] - abs_de_at(r_over_lam);
}

void export_shift_map_csv(const ShiftMap& map, std::ostream& out) {
  out << "r_over_lambda,dE0_Er,dE1_Er,absdE_Er,delta_Er_per_hbar\n";
  for (std::size_t i = 0; i < map.r_over_lambda.size(); ++i)
    write_csv_row(out, {map.r_over_lambda[i], map.de0_er[i], map.de1_er[i],
                        map.abs_de_er[i], map.delta_er[i]});
}

// --- potentials --------------------------------------------------------------

namespace {

double lattice_1d(double x_over_lambda) {
  const double s = std::sin(2.0 * pi * x_over_lambda);
  return s * s;
}

}  // namespace

PotentialMap potential_map(const LatticeParams& lattice, const ShiftMap& shifts,
                           double half_extent_over_lambda, int points_per_axis) {
  if (!(lattice.depth_er > 0.0)) throw domain_error("potential_map: V_L must be > 0");
  if (points_per_axis < 2) throw domain_error("potential_map: need >= 2 points");

  PotentialMap map;
  map.lattice_depth_er = lattice.depth_er;
  const int n = points_per_axis;
  map.x_over_lambda.resize(n);
  map.y_over_lambda.resize(n);
  for (int i = 0; i < n; ++i) {
    const double u = -half_extent_over_lambda +
                     2.0 * half_extent_over_lambda * i / (n - 1);
    map.x_over_lambda[i] = u;
    map.y_over_lambda[i] = u;
  }
  map.v0.resize(static_cast<std::size_t>(n) * n);
  map.v1.resize(static_cast<std::size_t>(n) * n);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double x = map.x_over_lambda[ix];
      const double y = map.y_over_lambda[iy];
      const double vl = lattice.depth_er * (lattice_1d(x) + lattice_1d(y));
      const double r = std::hypot(x, y);
      map.v0[static_cast<std::size_t>(iy) * n + ix] = vl + shifts.de_at(0, r);
      map.v1[static_cast<std::size_t>(iy) * n + ix] = vl + shifts.de_at(1, r);
    }
  }
  const BarrierResult b = escape_barrier(lattice, shifts, 0);
  map.barrier_er = b.height_er;
  map.barrier_position = b.saddle_position;
  return map;
}

double PotentialMap::at(int state, int ix, int iy) const {
  const auto& v = (state == 0) ? v0 : v1;
  return v[static_cast<std::size_t>(iy) * x_over_lambda.size() + ix];
}

BarrierResult escape_barrier(const LatticeParams& lattice, const ShiftMap& shifts,
                             int state, double focus_scale) {
  const double vl = lattice.depth_er;
  const auto v_line = [&](double x) {  // along y = 0
    return vl * lattice_1d(x) + focus_scale * shifts.de_at(state, x);
  };
  const auto v_perp = [&](double y) {  // along x = lambda/2
    return vl * (lattice_1d(0.5) + lattice_1d(y)) +
           focus_scale * shifts.de_at(state, std::hypot(0.5, y));
  };

  const double xtol = 1e-10;
  // local minimum near B = (lambda/2, 0)
  const MinimizeResult atom_b = golden_section_min(v_line, 0.3, 0.7, xtol);

  const MinimizeResult toward_a = golden_section_min(
      [&](double x) { return -v_line(x); }, 0.02, atom_b.x, xtol);
  const MinimizeResult away = golden_section_min(
      [&](double x) { return -v_line(x); }, atom_b.x, 1.0, xtol);
  const MinimizeResult perp = golden_section_min(
      [&](double y) { return -v_perp(y); }, 0.02, 0.5, xtol);

  double best = -toward_a.value;
  double best_pos = toward_a.x;
  if (-away.value < best) {
    best = -away.value;
    best_pos = away.x;
  }
  if (-perp.value < best) {
    best = -perp.value;
    best_pos = perp.x;  // position along the perpendicular path
  }
  return BarrierResult{best - atom_b.value, best_pos, atom_b.value};
}

void export_potential_csv(const PotentialMap& map, std::ostream& out) {
  out << "x_over_lambda,y_over_lambda,V0_Er,V1_Er\n";
  const int n = static_cast<int>(map.x_over_lambda.size());
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      write_csv_row(out, {map.x_over_lambda[ix], map.y_over_lambda[iy],
                          map.at(0, ix, iy), map.at(1, ix, iy)});
}

// --- error-budget estimates --------------------------------------------------

double scattering_probability(const AtomicLineData& lines, const ShiftMap& shifts,
                              double duration_s) {
  if (duration_s < 0.0)
    throw domain_error("scattering_probability: duration must be >= 0");
  const double r0 = scattering_rate(lines, 0, shifts.peak_intensity, shifts.lambda_f);
  const double r1 = scattering_rate(lines, 1, shifts.peak_intensity, shifts.lambda_f);
  return std::max(r0, r1) * duration_s;
}

WavelengthOptimum optimize_wavelength(const AtomicLineData& lines,
                                      double lambda_lo, double lambda_hi) {
  if (!(lambda_lo > 0.0 && lambda_hi > lambda_lo))
    throw domain_error("optimize_wavelength: bad range");
  const auto objective = [&](double lambda) {
    const double w = laser_omega(lambda);
    const double diff =
        stark_prefactor * std::abs(shift_sum(lines, 1, w) - shift_sum(lines, 0, w));
    const double rsc = stark_prefactor / planck_reduced *
                       std::max(scatter_sum(lines, 0, w), scatter_sum(lines, 1, w));
    return (diff / planck_reduced) / rsc;
  };
  const MinimizeResult r =
      grid_golden_max(objective, lambda_lo, lambda_hi, 201, 1e-13);
  return WavelengthOptimum{r.x, r.value};
}

double misalignment_detuning(const ShiftMap& shifts, double dx_m,
                             const UnitSystem& units) {
  const double dx = units.length_to_lattice(dx_m);
  if (dx < 0.0) throw domain_error("misalignment_detuning: dx must be >= 0");
  if (dx > 0.04)
    throw domain_error("misalignment_detuning: dx beyond the quadratic region "
                       "of the central lobe");
  if (shifts.abs_de_er.size() < 3)
    throw numeric_error("misalignment_detuning: grid too coarse", 1.0);

  const double h = shifts.grid_step();
  // radial symmetry: |dE|(-h) = |dE|(h)
  const double curv_h = 2.0 * (shifts.abs_de_er[1] - shifts.abs_de_er[0]) / (h * h);
  const double curv_2h = (shifts.abs_de_er[2] - shifts.abs_de_er[0]) / (2.0 * h * h);
  if (std::abs(curv_h - curv_2h) > 0.5 * std::abs(curv_h))
    throw numeric_error("misalignment_detuning: second difference unstable",
                        std::abs(curv_h - curv_2h));
  // (1/2 hbar) |d^2 dE/dr^2| dx^2, in rad/s
  return 0.5 * std::abs(curv_h) * dx * dx * units.recoil_frequency();
}

double detection_crosstalk(double gamma1, double delta1, double intensity_ratio) {
  if (delta1 == 0.0) throw domain_error("detection_crosstalk: delta1 must be nonzero");
  if (intensity_ratio < 0.0)
    throw domain_error("detection_crosstalk: intensity ratio must be >= 0");
  const double x = gamma1 / (2.0 * delta1);
  return x * x * intensity_ratio;
}

}  // namespace siteaddr
