#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lzs/dynamics.hpp"
#include "lzs/gate.hpp"
#include "lzs/hamiltonians.hpp"
#include "lzs/sweeps.hpp"

namespace lzs::io {

/// 12 significant digits, the fixed formatting used by every emitted file
/// (reruns must be byte-identical).
std::string format_number(double v);

std::string trajectory_csv(const Trajectory& traj);
std::string spectrum_csv(const std::vector<SpectralPoint>& points);
std::string grid_csv(const SweepGrid& grid);

nlohmann::json trajectory_json(const Trajectory& traj);
nlohmann::json spectrum_json(const std::vector<SpectralPoint>& points);
nlohmann::json grid_json(const SweepGrid& grid);
nlohmann::json gate_json(const GateResult& result);

nlohmann::json drive_json(const DriveParams& p);
nlohmann::json integrator_json(const IntegratorConfig& cfg);

/// Writes through a temp file in the target directory, then renames, so a
/// crash never leaves a partial output behind.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace lzs::io
