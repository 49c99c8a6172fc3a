#ifndef SITEADDR_SCENARIO_HPP
#define SITEADDR_SCENARIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace siteaddr {

// Flat INI-style scenario description: `[section]` headers and
// `key = value unit` lines, units mandatory on dimensional quantities.
// Frequency-family units (Hz, kHz, MHz, GHz) denote cycles/s and are stored
// as angular frequencies; `1/s` denotes a plain rate.
//
// Defaults reproduce the reference operating point: 850 nm / 50 E_r lattice,
// D = f = w = 20 mm, lambda_f = 421 nm, P_f = 17 uW, |dE(0)| = 107 E_r,
// omega0 = delta(lambda/2)/8.
struct ScenarioConfig {
  // Defaults are written as value * unit-factor products so that parsing the
  // bundled scenario file reproduces them bit for bit.

  // [units]
  double lattice_wavelength = 850.0 * 1e-9;  // m
  double atom_mass = 86.909180527 * 1.66053906660e-27;  // kg

  // [beam]
  double beam_aperture = 20.0 * 1e-3;      // m
  double beam_focal_length = 20.0 * 1e-3;  // m
  double beam_input_waist = 20.0 * 1e-3;   // m
  double beam_wavelength = 421.0 * 1e-9;   // m
  double beam_power = 17.0 * 1e-6;         // W

  // [lattice]
  double lattice_depth_er = 50.0;

  // [lines]
  std::string lines_file = "data/rb87_lines.dat";

  // [calibration]
  bool calibrated = true;
  double splitting_er = 107.0;

  // [pulse]
  std::string omega0_rule = "delta_half_over_8";
  double omega0_explicit = 0.0;            // rad/s, used when rule == "explicit"
  std::vector<double> amplitudes = {1.81}; // Omega0 / omega0
  double chi = 0.0;                        // rad

  // [sequence]
  double alpha = 1.0 * 3.14159265358979323846;  // rad
  double xi = 0.005;

  // [grid]
  double grid_r_max_over_lambda = 1.05;
  int grid_points = 769;
  double quad_tol = 1e-8;
  int threads = 1;

  // [detection]
  double detection_gamma = 2.0e6;  // 1/s, 5S<->6P3/2 channel rate
  double detection_delta1 =
      2.0 * 3.14159265358979323846 * 27.6 * 1e6;  // rad/s (2 pi x 27.6 MHz)

  // [optimize]
  double optimize_lambda_lo = 420.32 * 1e-9;  // m, inside the 6P doublet
  double optimize_lambda_hi = 421.65 * 1e-9;  // m

  // [misalignment]
  double misalignment_dx = 1.0 * 1e-9;  // m

  // [output]
  std::string output_directory = "out";

  void validate() const;                       // throws config_error
  void serialize(std::ostream& out) const;     // canonical effective config
  std::string canonical_text() const;
  unsigned long long hash() const;             // FNV-1a of canonical text

  // "section.key=value [unit]" as accepted by the CLI --set flag
  void apply_override(const std::string& assignment);
};

ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace siteaddr

#endif
