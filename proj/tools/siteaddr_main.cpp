// Scenario runner for the focused-laser single-site addressing toolkit.
//
// Subcommands map one-to-one onto the named studies; every run writes
// deterministic CSV data plus a manifest (config hash, version) and a SUMMARY
// table into the output directory. Exit codes: 0 success, 2 config error,
// 3 numeric error, 4 --check bound violated.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siteaddr/errors.hpp"
#include "siteaddr/scenario.hpp"
#include "siteaddr/version.hpp"
#include "studies.hpp"

int main(int argc, char** argv) {
  CLI::App app{"siteaddr: focused-laser + microwave single-site addressing studies"};
  app.set_version_flag("--version", siteaddr::version_string);

  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  double tol = 0.0;
  int threads = 0;
  bool check = false;

  app.add_option("--config", config_path, "scenario config file (INI-style)");
  app.add_option("--out", out_dir, "output directory (overrides [output])");
  app.add_option("--set", overrides,
                 "override a config field, section.key=value [unit]");
  app.add_option("--tol", tol, "quadrature tolerance (overrides grid.tol)");
  app.add_option("--threads", threads, "worker threads (overrides grid.threads)");
  app.add_flag("--check", check, "assert the reference bounds, exit 4 on violation");

  const std::vector<std::string> studies = {
      "shift-map",  "rabi", "area-sweep", "error-sweep",        "sequence",
      "ramp",       "budget", "detect",   "optimize-wavelength"};
  std::string chosen;
  for (const auto& name : studies) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " study");
    sub->fallthrough();  // global flags may follow the subcommand
    sub->callback([&chosen, name] { chosen = name; });
  }
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    siteaddr::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = siteaddr::load_scenario(config_path);
    for (const auto& o : overrides) cfg.apply_override(o);
    if (!out_dir.empty()) cfg.output_directory = out_dir;
    if (tol > 0.0) cfg.quad_tol = tol;
    if (threads > 0) cfg.threads = threads;
    cfg.validate();

    const siteaddr::studies::Workspace ws = siteaddr::studies::build_workspace(cfg);
    return siteaddr::studies::run_study(chosen, ws, check);
  } catch (const siteaddr::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const siteaddr::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const siteaddr::numeric_error& e) {
    std::cerr << "numeric error: " << e.what()
              << " (achieved error " << e.achieved_error() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
