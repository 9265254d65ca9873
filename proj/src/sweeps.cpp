#include "lzs/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <thread>

namespace lzs {

namespace {

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = std::max(1u, std::min<unsigned>(hw, n));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

constexpr double cell_sentinel = std::numeric_limits<double>::quiet_NaN();

double branch_metric(const PropagationResult& branch, Metric metric) {
  const CycleMetrics m = cycle_metrics(branch.trajectory);
  return metric == Metric::PgFinal ? m.p_g_final : m.phase_final / pi;
}

double eval_scheme(const SchemeConfig& s, const std::optional<GateDecay>& decay, double dev,
                   Metric metric, const IntegratorConfig& cfg) {
  switch (s.kind) {
    case SchemeKind::Lzs: {
      const double t = s.duration * (1.0 + dev);
      if (metric == Metric::Fidelity) return run_cz_lzs(s.drive, decay, t, cfg).fidelity;
      return branch_metric(detail::lzs_pair_branch(s.drive, decay, t, cfg), metric);
    }
    case SchemeKind::Coherent: {
      const double t = s.duration * (1.0 + dev);
      if (metric == Metric::Fidelity) return run_cz_coherent(s.v_dd, decay, t, cfg).fidelity;
      return branch_metric(detail::coherent_pair_branch(s.v_dd, decay, t, cfg), metric);
    }
    case SchemeKind::Adiabatic: {
      const AdiabaticPulse pulse = s.pulse.with_sequence_deviation(dev);
      if (metric == Metric::Fidelity)
        return run_cz_adiabatic(pulse, s.v_dd, decay, cfg).fidelity;
      return branch_metric(detail::adiabatic_pair_branch(pulse, s.v_dd, decay, cfg), metric);
    }
  }
  throw std::logic_error("eval_scheme: unknown scheme kind");
}

}  // namespace

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Fidelity: return "fidelity";
    case Metric::PgFinal: return "p_g_final";
    case Metric::PhaseOverPi: return "phase_over_pi";
  }
  return "?";
}

std::string axis_name(DeviationAxis a) {
  switch (a) {
    case DeviationAxis::AmplitudeRel: return "d_amplitude_rel";
    case DeviationAxis::Detuning0Rel: return "d_detuning0_rel";
    case DeviationAxis::OmegaRel: return "d_omega_rel";
    case DeviationAxis::PhiOverPi: return "d_phi_over_pi";
  }
  return "?";
}

std::string regime_name(DrivingRegime r) {
  switch (r) {
    case DrivingRegime::Weak: return "weak";
    case DrivingRegime::Strong: return "strong";
    case DrivingRegime::Intermediate: return "intermediate";
    case DrivingRegime::Other: return "other";
  }
  return "?";
}

SweepAxis SweepAxis::linspace(std::string name, double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("SweepAxis: count must be >= 2");
  SweepAxis ax{std::move(name), {}};
  ax.values.reserve(count);
  for (int i = 0; i < count; ++i)
    ax.values.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  return ax;
}

SweepGrid scan_time_deviation(const SchemeConfig& scheme, const std::optional<GateDecay>& decay,
                              const std::vector<double>& deviations, Metric metric,
                              const IntegratorConfig& cfg) {
  for (double d : deviations)
    if (!(d > -0.5 && d < 0.5))
      throw std::invalid_argument("scan_time_deviation: deviations must lie in (-0.5, 0.5)");

  SweepGrid grid;
  grid.axis1 = {"time_deviation_rel", deviations};
  grid.metric = metric;
  grid.data.assign(deviations.size(), cell_sentinel);
  parallel_for(deviations.size(), [&](size_t i) {
    try {
      grid.data[i] = eval_scheme(scheme, decay, deviations[i], metric, cfg);
    } catch (const std::exception&) {
      // leave the sentinel in place
    }
  });
  return grid;
}

namespace {

DriveParams perturbed(const DriveParams& base, DeviationAxis axis, double v) {
  DriveParams p = base;
  switch (axis) {
    case DeviationAxis::AmplitudeRel: p.a *= 1.0 + v; break;
    case DeviationAxis::Detuning0Rel: p.delta0 *= 1.0 + v; break;
    case DeviationAxis::OmegaRel: p.omega *= 1.0 + v; break;
    case DeviationAxis::PhiOverPi: p.phi += v * pi; break;
  }
  return p;
}

}  // namespace

SweepGrid scan_2d(const DriveParams& base, double duration, const std::optional<GateDecay>& decay,
                  const AxisSpec& ax1, const AxisSpec& ax2, Metric metric,
                  const IntegratorConfig& cfg) {
  if (ax1.count < 2 || ax2.count < 2)
    throw std::invalid_argument("scan_2d: resolution must be >= 2 per axis");

  SweepGrid grid;
  grid.axis1 = SweepAxis::linspace(axis_name(ax1.axis), ax1.lo, ax1.hi, ax1.count);
  grid.axis2 = SweepAxis::linspace(axis_name(ax2.axis), ax2.lo, ax2.hi, ax2.count);
  grid.metric = metric;
  const size_t n1 = grid.axis1.values.size();
  const size_t n2 = grid.axis2->values.size();
  grid.data.assign(n1 * n2, cell_sentinel);

  parallel_for(n1 * n2, [&](size_t cell) {
    const size_t i = cell / n2;
    const size_t j = cell % n2;
    try {
      DriveParams p = perturbed(base, ax1.axis, grid.axis1.values[i]);
      p = perturbed(p, ax2.axis, grid.axis2->values[j]);
      if (metric == Metric::Fidelity) {
        grid.data[cell] = run_cz_lzs(p, decay, duration, cfg).fidelity;
      } else {
        grid.data[cell] = branch_metric(detail::lzs_pair_branch(p, decay, duration, cfg), metric);
      }
    } catch (const std::exception&) {
      // leave the sentinel in place
    }
  });
  return grid;
}

DrivingRegime classify_regime(const DriveParams& p) {
  const double quasienergy = std::hypot(p.delta0, p.v_dd);
  const double a = std::abs(p.a);
  if (a < weak_amplitude_fraction * quasienergy) return DrivingRegime::Weak;
  if (a - p.delta0 > regime_margin_vdd * p.v_dd) return DrivingRegime::Strong;
  if (std::abs(a - p.delta0) <= regime_margin_vdd * p.v_dd) return DrivingRegime::Intermediate;
  return DrivingRegime::Other;
}

void StarkField::validate() const {
  if (!(e_dc > 0.0)) throw std::invalid_argument("StarkField: e_dc must be > 0");
  if (!(e_rf >= 0.0)) throw std::invalid_argument("StarkField: e_rf must be >= 0");
}

DriveParams stark_to_drive(const StarkField& f, double omega, double v_dd) {
  f.validate();
  if (f.e_rf > 0.3 * f.e_dc)
    std::cerr << "stark_to_drive: e_rf/e_dc = " << f.e_rf / f.e_dc
              << " > 0.3; the first-order expansion of the quadratic shift is unreliable\n";
  DriveParams p;
  p.v_dd = v_dd;
  p.delta0 = f.delta0_bare + f.kappa * f.e_dc * f.e_dc;
  p.a = 2.0 * f.kappa * f.e_rf * f.e_dc;
  p.omega = omega;
  p.phi = 0.0;
  p.units = UnitSystem::RadPerMicrosecond;
  return p;
}

double extract_rabi_frequency(const Trajectory& traj) {
  const auto& rows = traj.rows;
  if (rows.size() < 8) throw std::runtime_error("extract_rabi_frequency: trajectory too short");

  double pe_max = 0.0;
  for (const auto& r : rows) pe_max = std::max(pe_max, r.p_e);
  if (pe_max < 1e-6)
    throw std::runtime_error("extract_rabi_frequency: no oscillation detected (flat P_e)");

  // Hysteresis gate: an oscillation peak is the maximum of an excursion
  // above `hi` that later falls below `lo`; plateau wiggles stay inside the
  // band and are not counted.
  const double hi = 0.55 * pe_max;
  const double lo = 0.45 * pe_max;
  std::vector<double> peak_times;
  bool in_excursion = false;
  double best_v = 0.0, best_t = 0.0;
  for (const auto& r : rows) {
    if (!in_excursion) {
      if (r.p_e >= hi) {
        in_excursion = true;
        best_v = r.p_e;
        best_t = r.t;
      }
    } else {
      if (r.p_e > best_v) {
        best_v = r.p_e;
        best_t = r.t;
      }
      if (r.p_e <= lo) {
        peak_times.push_back(best_t);
        in_excursion = false;
      }
    }
  }
  // a trailing excursion counts only once the peak has clearly passed
  if (in_excursion && rows.back().p_e < hi) peak_times.push_back(best_t);

  if (peak_times.size() < 3)
    throw std::runtime_error("extract_rabi_frequency: fewer than 3 oscillation peaks");
  const double period =
      (peak_times.back() - peak_times.front()) / static_cast<double>(peak_times.size() - 1);
  return two_pi / period;
}

}  // namespace lzs
