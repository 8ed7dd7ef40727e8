#pragma once

#include "pwlab/serialization.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pwlab {

const char* version();

struct HolomorphySettings {
  double radius = 1.0;
  unsigned points = 64;
};

/// Parsed experiment document. The schema is documented in README.md.
struct ExperimentConfig {
  std::string text;  ///< input bytes, echoed verbatim into the report
  Json document;

  GroupKind kind = GroupKind::torus;
  int torus_dimension = 1;
  int cutoff = 0;
  int bandlimit = 0;
  CentralElement op{1};

  std::string preset;  ///< empty when explicit coefficients are given
  Json preset_params = Json::object();
  Json coefficients;

  std::vector<double> p_values;
  unsigned n_max = 1;
  double tau_rel = default_tau_rel;
  std::vector<Complex> probes;
  std::optional<HolomorphySettings> holomorphy;
  std::string output = "pwlab_out";
  std::uint64_t seed = 0;
  bool export_grid = false;
};

/// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(const std::string& text);

ModelPtr make_model(const ExperimentConfig& config);

/// Fourier data of the configured function, validated against the cutoff.
FourierCoefficients build_function(const ExperimentConfig& config, ModelPtr model);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> list_presets();

struct RunReport {
  Json document;
  /// (file name, contents) of the per-p plot tables and optional grid export.
  std::vector<std::pair<std::string, std::string>> files;
};

/// Deterministic for a given config, seed included.
RunReport run(const ExperimentConfig& config);

/// Writes report.json and the table files into `dir`, creating it if needed.
void write_run(const RunReport& report, const std::filesystem::path& dir);

/// `config.output`, unless PWLAB_OUTPUT_DIR is set.
std::filesystem::path output_directory(const ExperimentConfig& config);

}  // namespace pwlab
