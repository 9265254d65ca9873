#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lzs/dynamics.hpp"
#include "lzs/gate.hpp"
#include "lzs/sweeps.hpp"

namespace lzs {

inline constexpr const char* tool_version = "0.1.0";

/// Config validation failure; what() is "<field path>: <message>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ExperimentKind { Trajectory, Spectrum, Gate, TimeScan, Grid2d };
enum class OutputFormat { Csv, Json };

/// A fully resolved experiment: presets and channels already expanded, every
/// numeric knob explicit. `resolved` holds the normalized config document
/// (same schema as the input) that reproduces this experiment exactly.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Trajectory;
  DriveParams drive;
  double duration = 0.0;
  Frame frame = Frame::lab();
  SchemeKind scheme = SchemeKind::Lzs;
  std::optional<GateDecay> decay;
  AdiabaticPulse pulse{};
  double pulse_v_dd = 0.0;
  IntegratorConfig integrator;
  std::vector<double> deviations;
  AxisSpec ax1{}, ax2{};
  Metric metric = Metric::Fidelity;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
  nlohmann::json resolved;
};

/// Parses + validates a config document. Throws ConfigError naming the
/// offending field.
ExperimentConfig parse_experiment(const nlohmann::json& doc);

/// Reads the file, then parse_experiment. JSON syntax errors surface as
/// ConfigError on the pseudo-field "<file>".
ExperimentConfig load_experiment_file(const std::string& path);

/// Runs the experiment and writes the data file plus a ".meta.json" sidecar
/// recording the resolved config, tool version and wall time. All writes are
/// atomic (temp + rename). Returns the paths written.
std::vector<std::string> run_experiment(const ExperimentConfig& cfg);

/// Human-readable table of every built-in preset.
std::string list_presets_text();

}  // namespace lzs
