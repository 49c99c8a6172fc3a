#include "siteaddr/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "siteaddr/constants.hpp"
#include "siteaddr/errors.hpp"

namespace siteaddr {

namespace {

double length_to_m(double v, const std::string& unit, const std::string& key) {
  if (unit == "m") return v;
  if (unit == "mm") return v * 1e-3;
  if (unit == "um") return v * 1e-6;
  if (unit == "nm") return v * 1e-9;
  throw config_error(key + ": unknown length unit '" + unit + "'");
}

double mass_to_kg(double v, const std::string& unit, const std::string& key) {
  if (unit == "kg") return v;
  if (unit == "u") return v * atomic_mass_unit;
  throw config_error(key + ": unknown mass unit '" + unit + "'");
}

double power_to_w(double v, const std::string& unit, const std::string& key) {
  if (unit == "W") return v;
  if (unit == "mW") return v * 1e-3;
  if (unit == "uW") return v * 1e-6;
  if (unit == "nW") return v * 1e-9;
  throw config_error(key + ": unknown power unit '" + unit + "'");
}

// cycles/s family -> angular frequency; rad/s passes through
double freq_to_rad_s(double v, const std::string& unit, const std::string& key) {
  if (unit == "rad/s") return v;
  if (unit == "Hz") return 2.0 * pi * v;
  if (unit == "kHz") return 2.0 * pi * v * 1e3;
  if (unit == "MHz") return 2.0 * pi * v * 1e6;
  if (unit == "GHz") return 2.0 * pi * v * 1e9;
  throw config_error(key + ": unknown frequency unit '" + unit + "'");
}

double rate_to_per_s(double v, const std::string& unit, const std::string& key) {
  if (unit == "1/s") return v;
  throw config_error(key + ": rate must carry unit '1/s'");
}

double angle_to_rad(double v, const std::string& unit, const std::string& key) {
  if (unit == "rad") return v;
  if (unit == "pi") return v * pi;
  if (unit == "deg") return v * pi / 180.0;
  throw config_error(key + ": unknown angle unit '" + unit + "'");
}

double energy_to_er(double v, const std::string& unit, const std::string& key) {
  if (unit == "Er") return v;
  throw config_error(key + ": energies are exchanged in Er");
}

struct Field {
  std::function<void(ScenarioConfig&, const std::string& value,
                     const std::string& unit)> set;
};

double num(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw config_error(key + ": cannot parse number '" + s + "'");
  }
  if (pos != s.size())
    throw config_error(key + ": trailing characters in number '" + s + "'");
  return v;
}

const std::map<std::string, Field>& field_table() {
  static const std::map<std::string, Field> table = {
      {"units.lambda", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.lattice_wavelength = length_to_m(num(v, "units.lambda"), u, "units.lambda");
       }}},
      {"units.mass", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.atom_mass = mass_to_kg(num(v, "units.mass"), u, "units.mass");
       }}},
      {"beam.aperture", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.beam_aperture = length_to_m(num(v, "beam.aperture"), u, "beam.aperture");
       }}},
      {"beam.focal_length", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.beam_focal_length = length_to_m(num(v, "beam.focal_length"), u, "beam.focal_length");
       }}},
      {"beam.input_waist", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.beam_input_waist = length_to_m(num(v, "beam.input_waist"), u, "beam.input_waist");
       }}},
      {"beam.wavelength", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.beam_wavelength = length_to_m(num(v, "beam.wavelength"), u, "beam.wavelength");
       }}},
      {"beam.power", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.beam_power = power_to_w(num(v, "beam.power"), u, "beam.power");
       }}},
      {"lattice.depth", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.lattice_depth_er = energy_to_er(num(v, "lattice.depth"), u, "lattice.depth");
       }}},
      {"lines.file", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.lines_file = v;
       }}},
      {"calibration.mode", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         if (v == "calibrated") c.calibrated = true;
         else if (v == "raw") c.calibrated = false;
         else throw config_error("calibration.mode: must be 'calibrated' or 'raw'");
       }}},
      {"calibration.splitting", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.splitting_er = energy_to_er(num(v, "calibration.splitting"), u, "calibration.splitting");
       }}},
      {"pulse.omega0_rule", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         if (v != "delta_half_over_8" && v != "explicit")
           throw config_error("pulse.omega0_rule: 'delta_half_over_8' or 'explicit'");
         c.omega0_rule = v;
       }}},
      {"pulse.omega0", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.omega0_explicit = freq_to_rad_s(num(v, "pulse.omega0"), u, "pulse.omega0");
       }}},
      {"pulse.amplitudes", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         std::string joined = v;
         if (!u.empty()) joined += " " + u;  // list has no unit; re-join tokens
         c.amplitudes.clear();
         std::string item;
         std::istringstream ss(joined);
         while (std::getline(ss, item, ',')) {
           std::istringstream trim(item);
           double x;
           if (!(trim >> x))
             throw config_error("pulse.amplitudes: cannot parse '" + item + "'");
           c.amplitudes.push_back(x);
         }
         if (c.amplitudes.empty())
           throw config_error("pulse.amplitudes: empty list");
       }}},
      {"pulse.chi", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.chi = angle_to_rad(num(v, "pulse.chi"), u, "pulse.chi");
       }}},
      {"sequence.alpha", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.alpha = angle_to_rad(num(v, "sequence.alpha"), u, "sequence.alpha");
       }}},
      {"sequence.xi", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.xi = num(v, "sequence.xi");
       }}},
      {"grid.r_max", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         if (u != "lambda")
           throw config_error("grid.r_max: unit must be 'lambda'");
         c.grid_r_max_over_lambda = num(v, "grid.r_max");
       }}},
      {"grid.points", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.grid_points = static_cast<int>(num(v, "grid.points"));
       }}},
      {"grid.tol", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.quad_tol = num(v, "grid.tol");
       }}},
      {"grid.threads", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.threads = static_cast<int>(num(v, "grid.threads"));
       }}},
      {"detection.gamma1", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.detection_gamma = rate_to_per_s(num(v, "detection.gamma1"), u, "detection.gamma1");
       }}},
      {"detection.delta1", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.detection_delta1 = freq_to_rad_s(num(v, "detection.delta1"), u, "detection.delta1");
       }}},
      {"optimize.lambda_min", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.optimize_lambda_lo = length_to_m(num(v, "optimize.lambda_min"), u, "optimize.lambda_min");
       }}},
      {"optimize.lambda_max", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.optimize_lambda_hi = length_to_m(num(v, "optimize.lambda_max"), u, "optimize.lambda_max");
       }}},
      {"misalignment.dx", {[](ScenarioConfig& c, const std::string& v, const std::string& u) {
         c.misalignment_dx = length_to_m(num(v, "misalignment.dx"), u, "misalignment.dx");
       }}},
      {"output.directory", {[](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.output_directory = v;
       }}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool takes_raw_rhs(const std::string& full_key) {
  return full_key == "lines.file" || full_key == "output.directory" ||
         full_key == "pulse.amplitudes" || full_key == "calibration.mode" ||
         full_key == "pulse.omega0_rule";
}

void apply_field(ScenarioConfig& cfg, const std::string& section,
                 const std::string& key, const std::string& rhs) {
  const std::string full = section + "." + key;
  const auto it = field_table().find(full);
  if (it == field_table().end())
    throw config_error("unknown configuration key '" + full + "'");
  const std::string v = trim(rhs);
  if (takes_raw_rhs(full)) {
    it->second.set(cfg, v, "");
    return;
  }
  // split rhs into value token and optional trailing unit
  const auto sp = v.find_last_of(" \t");
  std::string value = v, unit;
  if (sp != std::string::npos) {
    value = trim(v.substr(0, sp));
    unit = trim(v.substr(sp + 1));
  }
  it->second.set(cfg, value, unit);
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error("line " + std::to_string(lineno) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw config_error("line " + std::to_string(lineno) + ": key outside any section");
    apply_field(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  return parse_scenario(in);
}

void ScenarioConfig::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq)
    throw config_error("--set expects section.key=value [unit], got '" +
                       assignment + "'");
  apply_field(*this, assignment.substr(0, dot),
              assignment.substr(dot + 1, eq - dot - 1), assignment.substr(eq + 1));
}

void ScenarioConfig::validate() const {
  if (!(lattice_wavelength > 0)) throw config_error("units.lambda must be > 0");
  if (!(atom_mass > 0)) throw config_error("units.mass must be > 0");
  if (!(beam_aperture > 0 && beam_focal_length > 0 && beam_input_waist > 0 &&
        beam_wavelength > 0))
    throw config_error("beam lengths must be > 0");
  if (beam_power < 0) throw config_error("beam.power must be >= 0");
  if (!(lattice_depth_er > 0)) throw config_error("lattice.depth must be > 0");
  if (lines_file.empty()) throw config_error("lines.file must be set");
  if (!(splitting_er > 0)) throw config_error("calibration.splitting must be > 0");
  if (omega0_rule == "explicit" && !(omega0_explicit > 0))
    throw config_error("pulse.omega0 must be > 0 when pulse.omega0_rule = explicit");
  for (double a : amplitudes)
    if (a < 0) throw config_error("pulse.amplitudes must be >= 0");
  if (!(xi > 0 && xi < 1)) throw config_error("sequence.xi must be in (0, 1)");
  if (!(alpha >= 0 && alpha <= 2 * pi + 1e-12))
    throw config_error("sequence.alpha must be in [0, 2 pi]");
  if (grid_points < 2) throw config_error("grid.points must be >= 2");
  if (!(grid_r_max_over_lambda > 0)) throw config_error("grid.r_max must be > 0");
  if (!(quad_tol > 0 && quad_tol <= 1e-4))
    throw config_error("grid.tol must be in (0, 1e-4]");
  if (threads < 1) throw config_error("grid.threads must be >= 1");
  if (!(detection_gamma > 0)) throw config_error("detection.gamma1 must be > 0");
  if (detection_delta1 == 0) throw config_error("detection.delta1 must be nonzero");
  if (!(optimize_lambda_hi > optimize_lambda_lo))
    throw config_error("optimize range must have lambda_max > lambda_min");
  if (misalignment_dx < 0) throw config_error("misalignment.dx must be >= 0");
  if (output_directory.empty()) throw config_error("output.directory must be set");
}

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

// The canonical form uses pass-through units (m, kg, W, rad/s, ...) so that
// emit -> reparse is an exact fixed point: no unit conversion arithmetic can
// perturb the stored doubles.
void ScenarioConfig::serialize(std::ostream& out) const {
  out << "[units]\n";
  out << "lambda = " << fmt(lattice_wavelength) << " m\n";
  out << "mass = " << fmt(atom_mass) << " kg\n";
  out << "[beam]\n";
  out << "aperture = " << fmt(beam_aperture) << " m\n";
  out << "focal_length = " << fmt(beam_focal_length) << " m\n";
  out << "input_waist = " << fmt(beam_input_waist) << " m\n";
  out << "wavelength = " << fmt(beam_wavelength) << " m\n";
  out << "power = " << fmt(beam_power) << " W\n";
  out << "[lattice]\n";
  out << "depth = " << fmt(lattice_depth_er) << " Er\n";
  out << "[lines]\n";
  out << "file = " << lines_file << "\n";
  out << "[calibration]\n";
  out << "mode = " << (calibrated ? "calibrated" : "raw") << "\n";
  out << "splitting = " << fmt(splitting_er) << " Er\n";
  out << "[pulse]\n";
  out << "omega0_rule = " << omega0_rule << "\n";
  if (omega0_rule == "explicit")
    out << "omega0 = " << fmt(omega0_explicit) << " rad/s\n";
  out << "amplitudes = ";
  for (std::size_t i = 0; i < amplitudes.size(); ++i)
    out << (i ? "," : "") << fmt(amplitudes[i]);
  out << "\n";
  out << "chi = " << fmt(chi) << " rad\n";
  out << "[sequence]\n";
  out << "alpha = " << fmt(alpha) << " rad\n";
  out << "xi = " << fmt(xi) << "\n";
  out << "[grid]\n";
  out << "r_max = " << fmt(grid_r_max_over_lambda) << " lambda\n";
  out << "points = " << grid_points << "\n";
  out << "tol = " << fmt(quad_tol) << "\n";
  out << "threads = " << threads << "\n";
  out << "[detection]\n";
  out << "gamma1 = " << fmt(detection_gamma) << " 1/s\n";
  out << "delta1 = " << fmt(detection_delta1) << " rad/s\n";
  out << "[optimize]\n";
  out << "lambda_min = " << fmt(optimize_lambda_lo) << " m\n";
  out << "lambda_max = " << fmt(optimize_lambda_hi) << " m\n";
  out << "[misalignment]\n";
  out << "dx = " << fmt(misalignment_dx) << " m\n";
  out << "[output]\n";
  out << "directory = " << output_directory << "\n";
}

std::string ScenarioConfig::canonical_text() const {
  std::ostringstream ss;
  serialize(ss);
  return ss.str();
}

unsigned long long ScenarioConfig::hash() const {
  // FNV-1a 64
  unsigned long long h = 1469598103934665603ULL;
  for (const char ch : canonical_text()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace siteaddr
