#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lzs/core.hpp"
#include "lzs/hamiltonians.hpp"
#include "lzs/numerics.hpp"

namespace lzs {

/// One recorded point of a propagation: populations, the unwrapped phase of
/// the g amplitude, and the total remaining norm (p_g + p_e).
struct TrajectoryRow {
  double t;
  double p_g;
  double p_e;
  double phase_g;  ///< unwrapped arg(c_g), radians
  double norm;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;

  const TrajectoryRow& front() const { return rows.front(); }
  const TrajectoryRow& back() const { return rows.back(); }
  double duration() const { return rows.empty() ? 0.0 : rows.back().t - rows.front().t; }
};

struct PropagationResult {
  Trajectory trajectory;
  TwoLevelState final_state;
};

/// Sampling cadence that resolves both the drive period (>= 200 samples per
/// period, so phase unwrapping stays unambiguous) and the total span.
IntegratorConfig default_config_for(const DriveParams& p, double duration);

/// Integrates i d/dt psi = [H_frame(t) - (i/2) diag(gamma_g, gamma_e)] psi
/// from y0 over [0, duration]. Decay, when given, discards lost population
/// (no recycling), so the recorded norm is non-increasing.
///
/// Frames other than Lab require phi = 0 (their construction already
/// absorbed the drive phase); violating that throws std::invalid_argument.
PropagationResult propagate(const DriveParams& p, const Frame& frame,
                            const std::optional<DecayRates>& decay, const TwoLevelState& y0,
                            double duration, const IntegratorConfig& cfg);

/// Same propagation for an arbitrary detuning waveform delta(t) in the
/// Lab-frame form (used by the adiabatic-sweep baseline).
PropagationResult propagate_custom(const std::function<double(double)>& delta_fn, double v_dd,
                                   const std::optional<DecayRates>& decay,
                                   const TwoLevelState& y0, double duration,
                                   const IntegratorConfig& cfg);

/// End-of-cycle summary for a trajectory that starts in |g>:
/// final population and phase, plus the last time P_g recrosses 0.99 from
/// below (duration if it never does). Requires p_g(0) > 0.999.
struct CycleMetrics {
  double p_g_final;
  double phase_final;
  double t_return;
};

CycleMetrics cycle_metrics(const Trajectory& traj);

}  // namespace lzs
