// pwlab: batch runner for local spectral radius experiments.
//
//   pwlab run <config.json>       run an experiment, write report + tables
//   pwlab validate <config.json>  parse and check a config without running
//   pwlab list-presets            list the built-in test functions

#include "pwlab/experiment.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw pwlab::Error("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

pwlab::ExperimentConfig load(const std::string& path) {
  auto cfg = pwlab::parse_config(read_file(path));
  // Build the function too, so preset and cutoff mistakes surface here.
  pwlab::build_function(cfg, pwlab::make_model(cfg));
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pwlab: Fourier analysis and local spectral radii on T^d and SU(2)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pwlab::version());

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* validate = app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* presets = app.add_subcommand("list-presets", "List built-in functions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*presets) {
      for (const auto& p : pwlab::list_presets()) std::cout << p.name << "\t" << p.description << "\n";
      return 0;
    }
    if (*validate) {
      load(config_path);
      std::cout << "ok: " << config_path << "\n";
      return 0;
    }
    const auto cfg = load(config_path);
    const auto start = std::chrono::steady_clock::now();
    const auto report = pwlab::run(cfg);
    const auto dir = pwlab::output_directory(cfg);
    pwlab::write_run(report, dir);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << "radius " << report.document.at("radius").dump() << "\n";
    for (const auto& rep : report.document.at("reports")) {
      const auto& r = rep.at("r");
      std::cout << "p=" << rep.at("p").dump() << "  r_" << r.size() << "=" << r.back().dump()
                << "  bounds " << (rep.at("bounds").at("hold").get<bool>() ? "hold" : "VIOLATED")
                << "\n";
    }
    std::cout << "wrote " << dir.string() << "\n";
    std::cerr << "elapsed " << elapsed.count() << " s\n";
    return 0;
  } catch (const pwlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
