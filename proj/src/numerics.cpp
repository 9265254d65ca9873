#include "lzs/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lzs/core.hpp"

namespace lzs {

namespace {

// Ascending series, used only for |x| << 1 where it converges in a few
// terms with no cancellation.
double bessel_series_small_x(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double log_half_x = std::log(0.5 * x);
  double sum = 0.0;
  for (int k = 0; k < 5; ++k) {
    double log_term = (n + 2 * k) * log_half_x - std::lgamma(k + 1.0) - std::lgamma(k + n + 1.0);
    double term = std::exp(log_term);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

double bessel_j(int n, double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: x must be finite");
  if (std::abs(n) > 200) throw std::domain_error("bessel_j: |n| > 200 unsupported");
  if (std::abs(x) > 500.0) throw std::domain_error("bessel_j: |x| > 500 unsupported");

  const int na = std::abs(n);
  const double xa = std::abs(x);

  // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
  double sign = 1.0;
  if ((na & 1) != 0) {
    if (n < 0) sign = -sign;
    if (x < 0.0) sign = -sign;
  }

  if (xa < 1e-6) return sign * bessel_series_small_x(na, xa);

  // Miller's downward recurrence: seed far above both the order and the
  // turning point k ~ x, recurse down, normalize with
  // J_0 + 2*(J_2 + J_4 + ...) = 1.
  const int top = std::max(na, static_cast<int>(std::ceil(xa)));
  const int m_start =
      top + 25 + static_cast<int>(std::sqrt(40.0 * top)) + static_cast<int>(10.0 * std::cbrt(xa));

  const double rescale_limit = 1e250;
  double f_kp2 = 0.0;     // f_{k+2}
  double f_kp1 = 1e-280;  // f_{k+1}, arbitrary seed
  double result = (na == m_start) ? f_kp1 : 0.0;
  double norm = (m_start != 0 && (m_start & 1) == 0) ? 2.0 * f_kp1 : 0.0;

  for (int k = m_start - 1; k >= 0; --k) {
    const double f_k = (2.0 * (k + 1) / xa) * f_kp1 - f_kp2;
    f_kp2 = f_kp1;
    f_kp1 = f_k;
    if (k == na) result = f_k;
    if (k == 0)
      norm += f_k;
    else if ((k & 1) == 0)
      norm += 2.0 * f_k;
    if (std::abs(f_kp1) > rescale_limit) {
      f_kp1 *= 1e-250;
      f_kp2 *= 1e-250;
      norm *= 1e-250;
      result *= 1e-250;
    }
  }
  return sign * result / norm;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
// b (5th order) minus the embedded 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

using Vec = Eigen::Vector2cd;

double error_norm(const Vec& err, const Vec& y_old, const Vec& y_new, double atol, double rtol) {
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y_old[i]), std::abs(y_new[i]));
    const double r = std::abs(err[i]) / sc;
    acc += r * r;
  }
  return std::sqrt(0.5 * acc);
}

class Dopri5 {
 public:
  Dopri5(const RhsFn& rhs, double atol, double rtol) : rhs_(rhs), atol_(atol), rtol_(rtol) {}

  // Advances y from t to exactly t_end, adapting the step inside.
  void advance(double t, double t_end, Vec& y, double& h, double max_step) {
    rhs_(t, y, k1_);
    while (t < t_end) {
      const double h_floor =
          16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0);
      double hs = std::min(h, max_step);
      const bool last = hs >= t_end - t;
      if (last) hs = t_end - t;

      rhs_(t + c2 * hs, y + hs * (a21 * k1_), k2_);
      rhs_(t + c3 * hs, y + hs * (a31 * k1_ + a32 * k2_), k3_);
      rhs_(t + c4 * hs, y + hs * (a41 * k1_ + a42 * k2_ + a43 * k3_), k4_);
      rhs_(t + c5 * hs, y + hs * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_), k5_);
      rhs_(t + hs, y + hs * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_), k6_);
      const Vec y_new = y + hs * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
      rhs_(t + hs, y_new, k7_);  // FSAL
      const Vec err = hs * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);

      double en = error_norm(err, y, y_new, atol_, rtol_);
      if (!std::isfinite(en)) en = 1e10;

      if (en <= 1.0) {
        t = last ? t_end : t + hs;
        y = y_new;
        k1_ = k7_;
        h = hs * std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.3, 5.0);
      } else {
        h = hs * std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.9);
        if (h < h_floor)
          throw IntegrationError("adaptive step size underflow (problem too stiff)", t);
      }
    }
  }

 private:
  const RhsFn& rhs_;
  double atol_, rtol_;
  Vec k1_, k2_, k3_, k4_, k5_, k6_, k7_;
};

void rk4_advance(const RhsFn& rhs, double t0, double t1, Vec& y, double max_step) {
  const double span = t1 - t0;
  if (span <= 0.0) return;
  const int n_sub = std::max(1, static_cast<int>(std::ceil(span / max_step - 1e-12)));
  const double h = span / n_sub;
  Vec k1, k2, k3, k4;
  for (int i = 0; i < n_sub; ++i) {
    const double t = t0 + i * h;
    rhs(t, y, k1);
    rhs(t + 0.5 * h, Vec(y + 0.5 * h * k1), k2);
    rhs(t + 0.5 * h, Vec(y + 0.5 * h * k2), k3);
    rhs(t + h, Vec(y + h * k3), k4);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

IntegrationResult integrate(const RhsFn& rhs, const Eigen::Vector2cd& y0, double t0, double t1,
                            const IntegratorConfig& cfg) {
  cfg.validate();
  if (t1 < t0) throw std::invalid_argument("integrate: t1 must be >= t0");
  if (!y0.allFinite()) throw std::invalid_argument("integrate: y0 must be finite");

  IntegrationResult res;
  res.samples.push_back({t0, y0});
  if (t1 == t0) {
    res.y_final = y0;
    return res;
  }

  const double span = t1 - t0;
  const int n_seg = std::max(1, static_cast<int>(std::ceil(span / cfg.sample_interval - 1e-9)));

  Vec y = y0;
  if (cfg.method == StepperMethod::Rk45Adaptive) {
    Dopri5 stepper(rhs, cfg.abs_tol, cfg.rel_tol);
    double h = std::min({cfg.max_step, cfg.sample_interval, span});
    for (int k = 1; k <= n_seg; ++k) {
      const double ta = t0 + (k - 1) * span / n_seg;
      const double tb = (k == n_seg) ? t1 : t0 + k * span / n_seg;
      stepper.advance(ta, tb, y, h, cfg.max_step);
      res.samples.push_back({tb, y});
    }
  } else {
    for (int k = 1; k <= n_seg; ++k) {
      const double ta = t0 + (k - 1) * span / n_seg;
      const double tb = (k == n_seg) ? t1 : t0 + k * span / n_seg;
      rk4_advance(rhs, ta, tb, y, cfg.max_step);
      res.samples.push_back({tb, y});
    }
  }
  res.y_final = y;
  return res;
}

std::vector<double> unwrap_phase(const std::vector<double>& samples) {
  std::vector<double> out;
  out.reserve(samples.size());
  if (samples.empty()) return out;
  out.push_back(samples[0]);
  for (size_t i = 1; i < samples.size(); ++i) {
    double d = samples[i] - samples[i - 1];
    // map the raw difference into (-pi, pi]; a jump of exactly pi is kept
    d -= two_pi * std::ceil((d - pi) / two_pi);
    out.push_back(out.back() + d);
  }
  return out;
}

}  // namespace lzs
