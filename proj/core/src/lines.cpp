#include "siteaddr/lines.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "siteaddr/constants.hpp"
#include "siteaddr/errors.hpp"

namespace siteaddr {

AtomicLineData::AtomicLineData(std::vector<TransitionLine> lines)
    : lines_(std::move(lines)) {
  if (lines_.empty()) throw config_error("AtomicLineData: no transitions");
  // Per-state, per-fine-structure-manifold sum of coupling fractions must not
  // exceed 1 (tolerance for rounded literature values).
  std::map<std::pair<int, std::string>, double> manifold_sum;
  for (const auto& l : lines_) {
    if (l.state != 0 && l.state != 1)
      throw config_error("AtomicLineData: state must be 0 or 1 (got " +
                         std::to_string(l.state) + ")");
    if (!(l.gamma > 0.0))
      throw config_error("AtomicLineData: gamma must be > 0 for " + l.label);
    if (!(l.omega > 0.0))
      throw config_error("AtomicLineData: omega must be > 0 for " + l.label);
    if (l.cij_sq < 0.0 || l.cij_sq > 1.0)
      throw config_error("AtomicLineData: cij_sq must be in [0, 1] for " + l.label);
    manifold_sum[{l.state, l.label}] += l.cij_sq;
  }
  for (const auto& [key, sum] : manifold_sum) {
    if (sum > 1.0 + 1e-6)
      throw config_error("AtomicLineData: coupling fractions for state " +
                         std::to_string(key.first) + ", manifold " + key.second +
                         " sum to " + std::to_string(sum) + " > 1");
  }
}

std::vector<TransitionLine> AtomicLineData::for_state(int state) const {
  std::vector<TransitionLine> out;
  for (const auto& l : lines_)
    if (l.state == state) out.push_back(l);
  return out;
}

AtomicLineData parse_line_data(std::istream& in) {
  std::vector<TransitionLine> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    TransitionLine t;
    std::string freq_kind;
    double freq_value;
    if (!(ss >> t.state)) continue;  // blank line
    if (!(ss >> t.label >> t.gamma >> freq_kind >> freq_value >> t.cij_sq))
      throw config_error("line data: malformed record at line " +
                         std::to_string(lineno));
    if (freq_kind == "wavelength_nm")
      t.omega = 2.0 * pi * speed_of_light / (freq_value * 1e-9);
    else if (freq_kind == "omega_rad_s")
      t.omega = freq_value;
    else
      throw config_error("line data: unknown frequency field '" + freq_kind +
                         "' at line " + std::to_string(lineno));
    lines.push_back(std::move(t));
  }
  return AtomicLineData(std::move(lines));
}

AtomicLineData load_line_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open line data file: " + path);
  return parse_line_data(in);
}

}  // namespace siteaddr
