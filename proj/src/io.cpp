#include "lzs/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lzs::io {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,p_g,p_e,phase_g_over_pi,norm\n";
  for (const auto& r : traj.rows) {
    out += format_number(r.t);
    out += ',';
    out += format_number(r.p_g);
    out += ',';
    out += format_number(r.p_e);
    out += ',';
    out += format_number(r.phase_g / pi);
    out += ',';
    out += format_number(r.norm);
    out += '\n';
  }
  return out;
}

std::string spectrum_csv(const std::vector<SpectralPoint>& points) {
  std::string out = "t,e_plus,e_minus,theta\n";
  for (const auto& s : points) {
    out += format_number(s.t);
    out += ',';
    out += format_number(s.e_plus);
    out += ',';
    out += format_number(s.e_minus);
    out += ',';
    out += format_number(s.theta);
    out += '\n';
  }
  return out;
}

std::string grid_csv(const SweepGrid& grid) {
  std::string out;
  out += "# metric: " + metric_name(grid.metric) + "\n";
  out += "# missing cells: nan\n";
  if (!grid.axis2) {
    out += grid.axis1.name + "," + metric_name(grid.metric) + "\n";
    for (size_t i = 0; i < grid.rows(); ++i)
      out += format_number(grid.axis1.values[i]) + "," + format_number(grid.at(i)) + "\n";
    return out;
  }
  // 2D: first row carries axis2 values, first column axis1 values.
  out += grid.axis1.name + "\\" + grid.axis2->name;
  for (double v : grid.axis2->values) out += "," + format_number(v);
  out += '\n';
  for (size_t i = 0; i < grid.rows(); ++i) {
    out += format_number(grid.axis1.values[i]);
    for (size_t j = 0; j < grid.cols(); ++j) out += "," + format_number(grid.at(i, j));
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::json axis_json(const SweepAxis& ax) {
  return {{"name", ax.name}, {"values", ax.values}};
}

nlohmann::json complex_json(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

nlohmann::json trajectory_json(const Trajectory& traj) {
  nlohmann::json cols;
  std::vector<double> t, pg, pe, phase, norm;
  t.reserve(traj.rows.size());
  for (const auto& r : traj.rows) {
    t.push_back(r.t);
    pg.push_back(r.p_g);
    pe.push_back(r.p_e);
    phase.push_back(r.phase_g / pi);
    norm.push_back(r.norm);
  }
  cols["t"] = t;
  cols["p_g"] = pg;
  cols["p_e"] = pe;
  cols["phase_g_over_pi"] = phase;
  cols["norm"] = norm;
  return cols;
}

nlohmann::json spectrum_json(const std::vector<SpectralPoint>& points) {
  std::vector<double> t, ep, em, theta;
  for (const auto& s : points) {
    t.push_back(s.t);
    ep.push_back(s.e_plus);
    em.push_back(s.e_minus);
    theta.push_back(s.theta);
  }
  return {{"t", t}, {"e_plus", ep}, {"e_minus", em}, {"theta", theta}};
}

nlohmann::json grid_json(const SweepGrid& grid) {
  nlohmann::json j;
  j["metric"] = metric_name(grid.metric);
  j["axes"] = nlohmann::json::array({axis_json(grid.axis1)});
  if (grid.axis2) j["axes"].push_back(axis_json(*grid.axis2));
  // NaN is not representable in JSON; encode missing cells as null.
  nlohmann::json data = nlohmann::json::array();
  for (double v : grid.data) {
    if (std::isnan(v))
      data.push_back(nullptr);
    else
      data.push_back(v);
  }
  j["data"] = std::move(data);
  return j;
}

nlohmann::json gate_json(const GateResult& result) {
  return {{"amp_00", complex_json(result.amp_00)},
          {"amp_01", complex_json(result.amp_01)},
          {"amp_10", complex_json(result.amp_10)},
          {"amp_11", complex_json(result.amp_11)},
          {"fidelity", result.fidelity}};
}

nlohmann::json drive_json(const DriveParams& p) {
  return {{"v_dd", p.v_dd},
          {"a", p.a},
          {"delta0", p.delta0},
          {"omega", p.omega},
          {"phi", p.phi},
          {"units", p.units == UnitSystem::Dimensionless ? "dimensionless" : "rad_per_us"}};
}

nlohmann::json integrator_json(const IntegratorConfig& cfg) {
  return {{"method", cfg.method == StepperMethod::Rk45Adaptive ? "rk45" : "rk4"},
          {"rel_tol", cfg.rel_tol},
          {"abs_tol", cfg.abs_tol},
          {"max_step", cfg.max_step},
          {"sample_interval", cfg.sample_interval}};
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + tmp.string());
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace lzs::io
