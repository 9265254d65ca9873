#include <CLI11.hpp>

#include <iostream>

#include "lzs/experiment.hpp"
#include "lzs/numerics.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Driven two-level simulator for Rydberg pair-state CZ gates"};
  app.require_subcommand(1);

  std::string run_config, validate_config;
  CLI::App* run = app.add_subcommand("run", "run an experiment config and write its data files");
  run->add_option("config", run_config, "JSON experiment config")->required();
  CLI::App* validate =
      app.add_subcommand("validate", "check a config without running anything");
  validate->add_option("config", validate_config, "JSON experiment config")->required();
  app.add_subcommand("list-presets", "print the built-in parameter sets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.get_subcommand("list-presets")->parsed()) {
      std::cout << lzs::list_presets_text();
      return 0;
    }
    if (validate->parsed()) {
      lzs::load_experiment_file(validate_config);
      std::cout << "ok\n";
      return 0;
    }
    const lzs::ExperimentConfig cfg = lzs::load_experiment_file(run_config);
    for (const std::string& f : lzs::run_experiment(cfg)) std::cout << "wrote " << f << "\n";
    return 0;
  } catch (const lzs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const lzs::IntegrationError& e) {
    std::cerr << "numerical failure at t = " << e.t_reached() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
