#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzs/core.hpp"
#include "lzs/dynamics.hpp"
#include "lzs/gate.hpp"

namespace lzs {

enum class Metric { Fidelity, PgFinal, PhaseOverPi };

std::string metric_name(Metric m);

struct SweepAxis {
  std::string name;
  std::vector<double> values;

  static SweepAxis linspace(std::string name, double lo, double hi, int count);
};

/// Dense scan result. data is row-major over (axis1, axis2); cells whose
/// propagation failed hold the NaN sentinel instead of aborting the scan.
struct SweepGrid {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  Metric metric = Metric::Fidelity;
  std::vector<double> data;

  size_t rows() const { return axis1.values.size(); }
  size_t cols() const { return axis2 ? axis2->values.size() : 1; }
  double at(size_t i, size_t j = 0) const { return data[i * cols() + j]; }
};

enum class SchemeKind { Lzs, Coherent, Adiabatic };

/// One gate scheme plus its nominal settings, the unit a timing scan
/// perturbs.
struct SchemeConfig {
  SchemeKind kind = SchemeKind::Lzs;
  DriveParams drive;              ///< Lzs
  double duration = 0.0;          ///< Lzs and Coherent nominal gate time
  double v_dd = 0.0;              ///< Coherent and Adiabatic coupling
  AdiabaticPulse pulse{};         ///< Adiabatic
};

/// Runs the scheme at gate times T*(1 + dev) for each fractional deviation
/// (for the adiabatic scheme the deviation scales each sweep sequence) and
/// records the chosen metric. Deviations must lie in (-0.5, 0.5).
SweepGrid scan_time_deviation(const SchemeConfig& scheme, const std::optional<GateDecay>& decay,
                              const std::vector<double>& deviations, Metric metric,
                              const IntegratorConfig& cfg);

enum class DeviationAxis { AmplitudeRel, Detuning0Rel, OmegaRel, PhiOverPi };

std::string axis_name(DeviationAxis a);

struct AxisSpec {
  DeviationAxis axis;
  double lo;
  double hi;
  int count;  ///< >= 2
};

/// Dense 2D robustness map of the driven gate over two perturbation axes
/// (relative deviations for A, delta0, omega; additive units of pi for
/// phi). Cells are independent and evaluated concurrently; the result
/// layout is deterministic row-major.
SweepGrid scan_2d(const DriveParams& base, double duration, const std::optional<GateDecay>& decay,
                  const AxisSpec& ax1, const AxisSpec& ax2, Metric metric,
                  const IntegratorConfig& cfg);

enum class DrivingRegime { Weak, Strong, Intermediate, Other };

std::string regime_name(DrivingRegime r);

/// Declared classification thresholds: weak below this fraction of the
/// quasienergy sqrt(delta0^2 + v_dd^2), strong/intermediate split at this
/// many v_dd of amplitude-offset separation.
inline constexpr double weak_amplitude_fraction = 0.2;
inline constexpr double regime_margin_vdd = 3.0;

DrivingRegime classify_regime(const DriveParams& p);

/// dc + rf field stack on a quadratically Stark-shifted channel:
/// E(t) = e_dc + e_rf cos(w t), with kappa the combined quadratic shift
/// coefficient of the pair resonance (rad/us per (V/cm)^2, signed).
struct StarkField {
  double e_dc;
  double e_rf;
  double kappa;
  double delta0_bare;

  void validate() const;
};

/// Expands the quadratic Stark shift of the composite field to first order
/// in e_rf/e_dc: delta0' = delta0_bare + kappa*e_dc^2 and
/// a' = 2*kappa*e_rf*e_dc. Warns on stderr when e_rf/e_dc > 0.3, where the
/// linearization degrades.
DriveParams stark_to_drive(const StarkField& f, double omega, double v_dd);

/// Dominant population-cycle angular frequency of P_e(t), from the spacing
/// of successive oscillation peaks (hysteresis-gated so small plateau
/// wiggles are not counted). Throws std::runtime_error with fewer than
/// three peaks.
double extract_rabi_frequency(const Trajectory& traj);

}  // namespace lzs
