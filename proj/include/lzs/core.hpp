#pragma once

#include <array>
#include <complex>
#include <string>

namespace lzs {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Unit convention carried by a parameter set. All frequencies are angular
/// frequencies; Dimensionless means "measured in units of v_dd", Physical
/// means rad/us (so f/2pi is in MHz and times are in us).
enum class UnitSystem { Dimensionless, RadPerMicrosecond };

/// The periodic-drive parameter set: detuning delta(t) = delta0 + a*cos(omega*t + phi)
/// between the two collective pair states, coupled with strength v_dd.
struct DriveParams {
  double v_dd = 1.0;    ///< dipole-dipole coupling (gap of the avoided crossing)
  double a = 0.0;       ///< drive amplitude
  double delta0 = 0.0;  ///< static detuning offset
  double omega = 1.0;   ///< drive angular frequency
  double phi = 0.0;     ///< initial drive phase (radians)
  UnitSystem units = UnitSystem::Dimensionless;

  /// Throws std::invalid_argument unless v_dd > 0 and omega > 0 and all
  /// fields are finite.
  void validate() const;
};

/// Instantaneous detuning delta0 + a*cos(omega*t + phi).
double delta_of_t(const DriveParams& p, double t);

/// Amplitude pair (c_g, c_e) of the two collective states
/// |g> = |r,r> and |e> = symmetric exchanged pair state.
struct TwoLevelState {
  std::complex<double> c_g{1.0, 0.0};
  std::complex<double> c_e{0.0, 0.0};

  static TwoLevelState ground() { return {{1.0, 0.0}, {0.0, 0.0}}; }
  static TwoLevelState excited() { return {{0.0, 0.0}, {1.0, 0.0}}; }

  double p_g() const { return std::norm(c_g); }
  double p_e() const { return std::norm(c_e); }
  /// Total population |c_g|^2 + |c_e|^2 (1 under unitary evolution,
  /// non-increasing under the lossy conditional Hamiltonian).
  double total_norm() const { return p_g() + p_e(); }
};

/// Population loss rates of the two collective states, each the sum of the
/// decay rates of the single-atom Rydberg states it contains.
struct DecayRates {
  double gamma_g = 0.0;
  double gamma_e = 0.0;
};

/// Calibration constant relating |c3|/r^3 to the pair-state coupling; the
/// default reproduces v_dd/2pi = 3.2 MHz for the Cs channel's
/// c3 = -154968 MHz*um^3 at r = 20 um.
inline constexpr double default_geometric_prefactor = 25600.0 / 154968.0;

/// A concrete interaction channel: dipole coefficient, interatomic
/// distance and the four Rydberg-state lifetimes (g-pair first, e-pair
/// second). c3 in MHz*um^3, r in um, lifetimes in us.
struct PhysicalChannel {
  double c3 = 0.0;
  double r = 1.0;
  double geometric_prefactor = default_geometric_prefactor;
  std::array<double, 4> lifetimes{};  ///< {tau_s1, tau_s2, tau_p1, tau_p2}
  std::string label;
};

/// Coupling strength 2pi * prefactor * |c3| / r^3 in rad/us.
/// Throws std::domain_error for r <= 0.
double vdd_from_channel(const PhysicalChannel& ch);

/// gamma_g = 1/tau_s1 + 1/tau_s2, gamma_e = 1/tau_p1 + 1/tau_p2 (us^-1).
/// Infinite lifetimes give zero rates.
DecayRates decay_from_lifetimes(const PhysicalChannel& ch);

}  // namespace lzs
