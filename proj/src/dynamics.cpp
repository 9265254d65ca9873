#include "lzs/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace lzs {

namespace {

constexpr std::complex<double> ci{0.0, 1.0};

RhsFn make_rhs(std::function<Eigen::Matrix2cd(double)> gen, const std::optional<DecayRates>& decay) {
  const double gg = decay ? decay->gamma_g : 0.0;
  const double ge = decay ? decay->gamma_e : 0.0;
  return [gen = std::move(gen), gg, ge](double t, const Eigen::Vector2cd& y,
                                        Eigen::Vector2cd& dy) {
    dy.noalias() = -ci * (gen(t) * y);
    dy[0] -= 0.5 * gg * y[0];
    dy[1] -= 0.5 * ge * y[1];
  };
}

PropagationResult run(const RhsFn& rhs, const TwoLevelState& y0, double duration,
                      const IntegratorConfig& cfg) {
  Eigen::Vector2cd v0;
  v0 << y0.c_g, y0.c_e;
  const IntegrationResult res = integrate(rhs, v0, 0.0, duration, cfg);

  std::vector<double> raw_phase;
  raw_phase.reserve(res.samples.size());
  for (const auto& s : res.samples) raw_phase.push_back(std::arg(s.y[0]));
  const std::vector<double> phase = unwrap_phase(raw_phase);

  PropagationResult out;
  out.trajectory.rows.reserve(res.samples.size());
  for (size_t i = 0; i < res.samples.size(); ++i) {
    const auto& s = res.samples[i];
    const double pg = std::norm(s.y[0]);
    const double pe = std::norm(s.y[1]);
    out.trajectory.rows.push_back({s.t, pg, pe, phase[i], pg + pe});
  }
  out.final_state = {res.y_final[0], res.y_final[1]};
  return out;
}

}  // namespace

IntegratorConfig default_config_for(const DriveParams& p, double duration) {
  IntegratorConfig cfg;
  double dt = duration / 512.0;
  if (p.a != 0.0) dt = std::min(dt, two_pi / p.omega / 256.0);
  dt = std::max(dt, duration / 2e6);  // bound the row count
  cfg.sample_interval = dt;
  return cfg;
}

PropagationResult propagate(const DriveParams& p, const Frame& frame,
                            const std::optional<DecayRates>& decay, const TwoLevelState& y0,
                            double duration, const IntegratorConfig& cfg) {
  p.validate();
  if (!(duration > 0.0)) throw std::invalid_argument("propagate: duration must be > 0");
  if (frame.tag != FrameTag::Lab && p.phi != 0.0)
    throw std::invalid_argument("propagate: frames other than Lab require phi = 0");
  return run(make_rhs(make_generator(p, frame), decay), y0, duration, cfg);
}

PropagationResult propagate_custom(const std::function<double(double)>& delta_fn, double v_dd,
                                   const std::optional<DecayRates>& decay,
                                   const TwoLevelState& y0, double duration,
                                   const IntegratorConfig& cfg) {
  if (!(v_dd > 0.0)) throw std::invalid_argument("propagate_custom: v_dd must be > 0");
  if (!(duration > 0.0)) throw std::invalid_argument("propagate_custom: duration must be > 0");
  auto gen = [delta_fn, v_dd](double t) {
    Eigen::Matrix2cd h = Eigen::Matrix2cd::Zero();
    h(0, 1) = -0.5 * v_dd;
    h(1, 0) = -0.5 * v_dd;
    h(1, 1) = -delta_fn(t);
    return h;
  };
  return run(make_rhs(gen, decay), y0, duration, cfg);
}

CycleMetrics cycle_metrics(const Trajectory& traj) {
  if (traj.rows.size() < 2) throw std::invalid_argument("cycle_metrics: trajectory too short");
  if (!(traj.rows.front().p_g > 0.999))
    throw std::invalid_argument("cycle_metrics: trajectory must start in |g> (p_g(0) > 0.999)");

  const auto& rows = traj.rows;
  const double threshold = 0.99;
  double t_return = rows.back().t;
  for (size_t i = rows.size() - 1; i >= 1; --i) {
    if (rows[i].p_g >= threshold && rows[i - 1].p_g < threshold) {
      const double f = (threshold - rows[i - 1].p_g) / (rows[i].p_g - rows[i - 1].p_g);
      t_return = rows[i - 1].t + f * (rows[i].t - rows[i - 1].t);
      break;
    }
  }
  return {rows.back().p_g, rows.back().phase_g, t_return};
}

}  // namespace lzs
