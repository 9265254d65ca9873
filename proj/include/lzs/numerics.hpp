#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <vector>

namespace lzs {

/// Bessel function of the first kind J_n(x), evaluated by Miller's backward
/// recurrence with sum normalization. Supported range |n| <= 200, |x| <= 500
/// (absolute error below 1e-12 there); arguments outside it are rejected
/// with std::domain_error.
double bessel_j(int n, double x);

enum class StepperMethod { Rk4Fixed, Rk45Adaptive };

struct IntegratorConfig {
  StepperMethod method = StepperMethod::Rk45Adaptive;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double max_step = 1e30;        ///< hard cap on the internal step
  double sample_interval = 0.1;  ///< cadence of recorded trajectory rows

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("IntegratorConfig: tolerances must be > 0");
    if (!(max_step > 0.0))
      throw std::invalid_argument("IntegratorConfig: max_step must be > 0");
    if (!(sample_interval > 0.0))
      throw std::invalid_argument("IntegratorConfig: sample_interval must be > 0");
  }
};

/// Raised when the adaptive stepper cannot advance (step-size underflow);
/// t_reached tells how far the integration got.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t_reached)
      : std::runtime_error(what), t_reached_(t_reached) {}
  double t_reached() const { return t_reached_; }

 private:
  double t_reached_;
};

/// dy/dt = f(t, y) for a complex 2-vector.
using RhsFn = std::function<void(double t, const Eigen::Vector2cd& y, Eigen::Vector2cd& dydt)>;

struct StateSample {
  double t;
  Eigen::Vector2cd y;
};

struct IntegrationResult {
  Eigen::Vector2cd y_final;
  std::vector<StateSample> samples;  ///< monotone in t, includes both endpoints
};

/// Integrates y' = rhs(t, y) from t0 to t1 (t1 >= t0), recording the state
/// every cfg.sample_interval. Samples land exactly on the requested grid;
/// the adaptive stepper never steps across a sample boundary.
IntegrationResult integrate(const RhsFn& rhs, const Eigen::Vector2cd& y0, double t0,
                            double t1, const IntegratorConfig& cfg);

/// Removes 2pi jumps from a sampled phase signal: output[0] = input[0] and
/// consecutive differences are mapped into (-pi, pi]. Assumes the underlying
/// continuous phase moves by less than pi between samples.
std::vector<double> unwrap_phase(const std::vector<double>& samples);

}  // namespace lzs
