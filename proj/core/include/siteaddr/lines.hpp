#ifndef SITEADDR_LINES_HPP
#define SITEADDR_LINES_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace siteaddr {

// One optical transition coupled to a qubit state.
//
// gamma is the total radiative decay rate of the upper state; cij_sq is the
// effective coupling fraction of this qubit state through the given
// polarization, including the branching of the upper state into the ground
// channel. The product gamma * cij_sq is what enters the shift sum.
struct TransitionLine {
  int state;          // qubit state index, 0 or 1
  std::string label;
  double gamma;       // 1/s
  double omega;       // transition angular frequency, rad/s
  double cij_sq;      // in [0, 1]
};

class AtomicLineData {
 public:
  explicit AtomicLineData(std::vector<TransitionLine> lines);

  const std::vector<TransitionLine>& all() const { return lines_; }
  std::vector<TransitionLine> for_state(int state) const;

 private:
  std::vector<TransitionLine> lines_;
};

// Text format, '#' comments, one record per line:
//   state label gamma_hz (wavelength_nm <nm> | omega_rad_s <rad/s>) cij_sq
// e.g.  0 6P3/2 8.93e6 wavelength_nm 420.298 0.50
AtomicLineData parse_line_data(std::istream& in);
AtomicLineData load_line_data(const std::string& path);

}  // namespace siteaddr

#endif
