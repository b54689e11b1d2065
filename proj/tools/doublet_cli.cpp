//==============================================================================
// doublet_cli.cpp
// Batch front end: configure a lattice and amplitude family, run verification
// suites, and emit machine-readable reports.
//
//   doublet run --config scenario.json     exit 0 iff every check passes
//   doublet describe                       print the suite catalog
//
// Outputs under the configured directory:
//   report.json        suites -> checks -> {name, residual, tolerance, pass}
//   conservation.csv   when the conservation suite ran
//   fields/sf_t<i>.json  canonical-picture snapshot at each configured time
//==============================================================================
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "doublet/config.hpp"
#include "doublet/suites.hpp"

namespace {

int run_scenario_command(const std::string& config_path) {
  using namespace doublet;
  ScenarioConfig cfg;
  AmplitudeSet amps;
  try {
    cfg = parse_config(read_json_file(config_path));
    amps = build_amplitudes(cfg);
    validate_scenario(cfg, amps);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    ScenarioOutcome outcome = run_scenario(cfg, amps);

    std::filesystem::create_directories(cfg.output);
    write_json_file(cfg.output + "/report.json",
                    report_to_json(outcome.suites, config_to_json(cfg)));
    if (outcome.conservation)
      write_text_file(cfg.output + "/conservation.csv",
                      conservation_csv(*outcome.conservation));
    std::filesystem::create_directories(cfg.output + "/fields");
    for (size_t i = 0; i < cfg.times.size(); ++i)
      write_json_file(cfg.output + "/fields/sf_t" + std::to_string(i) + ".json",
                      field_to_json(synthesize_sf(amps, cfg.times[i])));

    bool pass = true;
    for (const SuiteResult& s : outcome.suites) {
      pass = pass && s.pass();
      std::cout << (s.pass() ? "[pass] " : "[FAIL] ") << s.name << " ("
                << s.checks.size() << " checks)\n";
    }
    std::cout << (pass ? "all suites passed\n" : "suite failures; see report.json\n");
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral verification toolkit for the free relativistic "
               "spin-1/2 particle-antiparticle doublet"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run the suites of a scenario config");
  run->add_option("--config", config_path, "path to the scenario JSON")->required();

  CLI::App* describe = app.add_subcommand("describe", "print the suite catalog");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_scenario_command(config_path);
  if (describe->parsed()) {
    std::cout << doublet::describe_text();
    return 0;
  }
  return 2;
}
