#include "lzs/core.hpp"

#include <cmath>
#include <stdexcept>

namespace lzs {

void DriveParams::validate() const {
  if (!(v_dd > 0.0) || !std::isfinite(v_dd))
    throw std::invalid_argument("DriveParams: v_dd must be positive and finite");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("DriveParams: omega must be positive and finite");
  if (!std::isfinite(a) || !std::isfinite(delta0) || !std::isfinite(phi))
    throw std::invalid_argument("DriveParams: a, delta0, phi must be finite");
}

double delta_of_t(const DriveParams& p, double t) {
  return p.delta0 + p.a * std::cos(p.omega * t + p.phi);
}

double vdd_from_channel(const PhysicalChannel& ch) {
  if (!(ch.r > 0.0)) throw std::domain_error("PhysicalChannel: r must be > 0");
  return two_pi * ch.geometric_prefactor * std::abs(ch.c3) / (ch.r * ch.r * ch.r);
}

DecayRates decay_from_lifetimes(const PhysicalChannel& ch) {
  for (double tau : ch.lifetimes)
    if (!(tau > 0.0)) throw std::domain_error("PhysicalChannel: lifetimes must be > 0");
  return {1.0 / ch.lifetimes[0] + 1.0 / ch.lifetimes[1],
          1.0 / ch.lifetimes[2] + 1.0 / ch.lifetimes[3]};
}

}  // namespace lzs
