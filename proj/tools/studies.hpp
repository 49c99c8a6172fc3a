#ifndef SITEADDR_STUDIES_HPP
#define SITEADDR_STUDIES_HPP

#include <string>
#include <vector>

#include "siteaddr/lightshift.hpp"
#include "siteaddr/lines.hpp"
#include "siteaddr/optics.hpp"
#include "siteaddr/scenario.hpp"
#include "siteaddr/sequence.hpp"
#include "siteaddr/units.hpp"

namespace siteaddr::studies {

// Everything the named studies share, derived once from a scenario.
struct Workspace {
  ScenarioConfig cfg;
  UnitSystem units;
  BeamGeometry beam;
  AtomicLineData lines;
  IntensityProfile profile;
  ShiftMap shifts;
  WaistFit waist;
  double delta_b;   // microwave detuning of atom B (r = lambda/2), rad/s
  double omega0;    // gaussian pulse width parameter, rad/s
};

Workspace build_workspace(const ScenarioConfig& cfg);

// One asserted bound in --check mode.
struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct StudyReport {
  std::vector<std::string> summary;   // lines for the run SUMMARY table
  std::vector<CheckResult> checks;    // populated in --check mode
};

StudyReport run_shift_map(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_rabi(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_area_sweep(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_error_sweep(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_sequence(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_ramp(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_optimize_wavelength(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_detect(const Workspace& ws, const std::string& out_dir, bool check);
StudyReport run_budget(const Workspace& ws, const std::string& out_dir, bool check);

// Dispatch by subcommand name; writes manifest and SUMMARY, returns the
// process exit code (0 ok, 4 when a --check bound failed). quiet suppresses
// the stdout echo of the SUMMARY lines.
int run_study(const std::string& name, const Workspace& ws, bool check,
              bool quiet = false);

// The four reference initial states used by the population-variation and
// manipulation-error studies.
std::vector<QubitState> reference_initial_states();

// Full single-qubit manipulation duration: two halves of (ramp up + gaussian
// pulse + ramp down). intensity_weighted uses the ramp's full-intensity
// equivalent time (for scattering estimates).
double sequence_duration(const Workspace& ws, const RampSchedule& sched,
                         bool intensity_weighted);

}  // namespace siteaddr::studies

#endif
