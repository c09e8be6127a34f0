// frpoisson - scenario checker for Fock-Rosly Poisson structures.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 the scenario
// cannot be loaded or the flags are invalid.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "frpoisson/checks.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Verification of Fock-Rosly Poisson structures on moduli of flat connections"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Run the checks of a scenario file");
  std::string scenario_path, format = "text";
  std::vector<std::string> only_checks;
  double tol = -1;
  long long samples = -1, seed = -1;
  check->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  check->add_option("--tol", tol, "Override the scenario tolerance");
  check->add_option("--samples", samples, "Override the sample count");
  check->add_option("--seed", seed, "Override the master seed");
  check->add_option("--check", only_checks, "Run only the named checks (repeatable)");
  check->add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* list = app.add_subcommand("list-checks", "Print the check registry");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& name : frp::check_registry()) std::cout << name << "\n";
    return 0;
  }

  frp::Scenario scenario;
  try {
    scenario = frp::load_scenario(scenario_path);
    if (tol >= 0) scenario.tol = tol;
    if (samples >= 0) scenario.samples = static_cast<int>(samples);
    if (seed >= 0) scenario.seed = static_cast<std::uint64_t>(seed);
    if (!only_checks.empty()) {
      const auto& registry = frp::check_registry();
      for (const auto& c : only_checks)
        if (std::find(registry.begin(), registry.end(), c) == registry.end())
          throw frp::SchemaError("--check", "unknown check '" + c + "'");
      scenario.checks = only_checks;
      frp::validate_scenario(scenario);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  frp::Report report = frp::run_checks(scenario);
  std::cout << frp::emit_report(report, format);
  return frp::exit_code(report);
}
