#include "lzs/hamiltonians.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lzs/numerics.hpp"

namespace lzs {

namespace {

constexpr std::complex<double> ci{0.0, 1.0};

// Coupling harmonics Omega_n for n = 0..cutoff (negative orders follow from
// J_{-n} = (-1)^n J_n).
std::vector<double> harmonic_amplitudes(const DriveParams& p, int cutoff) {
  std::vector<double> amps(cutoff + 1);
  const double x = p.a / p.omega;
  for (int n = 0; n <= cutoff; ++n) amps[n] = p.v_dd * bessel_j(n, x);
  return amps;
}

// sum_{n=-N..N} (Omega_n / v_dd-scale baked in) e^{i n w t}: the truncated
// expansion of v_dd * e^{i x sin(w t)}, evaluated with phasor recurrences.
std::complex<double> truncated_coupling(const std::vector<double>& amps, double omega, double t) {
  const std::complex<double> base = std::exp(ci * (omega * t));
  std::complex<double> ph{1.0, 0.0};
  std::complex<double> acc{amps[0], 0.0};
  for (size_t n = 1; n < amps.size(); ++n) {
    ph *= base;
    const std::complex<double> conj_ph = std::conj(ph);
    acc += amps[n] * (n % 2 == 0 ? ph + conj_ph : ph - conj_ph);
  }
  return acc;
}

Eigen::Matrix2cd hermitian_from_upper(std::complex<double> h01, double h11) {
  Eigen::Matrix2cd h;
  h(0, 0) = 0.0;
  h(0, 1) = h01;
  h(1, 0) = std::conj(h01);
  h(1, 1) = h11;
  return h;
}

}  // namespace

int default_harmonic_cutoff(const DriveParams& p) {
  return static_cast<int>(std::ceil(std::abs(p.a) / p.omega)) + 10;
}

std::function<Eigen::Matrix2cd(double)> make_generator(const DriveParams& p, const Frame& frame) {
  p.validate();
  switch (frame.tag) {
    case FrameTag::Lab:
      return [p](double t) {
        return hermitian_from_upper(-0.5 * p.v_dd, -delta_of_t(p, t));
      };
    case FrameTag::Rotated:
      // The transformation that cancels the oscillating diagonal moves the
      // accumulated drive phase chi(t) = (a/w) sin(w t) onto the coupling.
      return [p](double t) {
        const double chi = (p.a / p.omega) * std::sin(p.omega * t);
        return hermitian_from_upper(-0.5 * p.v_dd * std::exp(ci * chi), -p.delta0);
      };
    case FrameTag::Interaction: {
      const auto amps = harmonic_amplitudes(p, default_harmonic_cutoff(p));
      const double d0 = p.delta0, w = p.omega;
      return [amps, d0, w](double t) {
        const std::complex<double> s =
            std::exp(ci * (d0 * t)) * truncated_coupling(amps, w, t);
        return hermitian_from_upper(-0.5 * s, 0.0);
      };
    }
    case FrameTag::FloquetTruncated: {
      if (frame.harmonic_cutoff < 1)
        throw std::invalid_argument("Frame: FloquetTruncated requires cutoff >= 1");
      const auto amps = harmonic_amplitudes(p, frame.harmonic_cutoff);
      const double d0 = p.delta0, w = p.omega;
      return [amps, d0, w](double t) {
        return hermitian_from_upper(-0.5 * truncated_coupling(amps, w, t), -d0);
      };
    }
  }
  throw std::logic_error("make_generator: unknown frame tag");
}

Eigen::Matrix2cd hamiltonian(const DriveParams& p, const Frame& frame, double t) {
  return make_generator(p, frame)(t);
}

SpectralPoint instantaneous_spectrum(const DriveParams& p, double t) {
  const double d = delta_of_t(p, t);
  const double gap = std::hypot(d, p.v_dd);
  return {t, 0.5 * (-d + gap), 0.5 * (-d - gap), 0.5 * std::atan2(p.v_dd, d)};
}

double effective_rabi(const DriveParams& p, int n) {
  if (p.a == 0.0) return n == 0 ? p.v_dd : 0.0;
  return p.v_dd * bessel_j(n, p.a / p.omega);
}

ResonanceOrder resonance_order(const DriveParams& p) {
  if (!(p.omega > 0.0)) throw std::invalid_argument("resonance_order: omega must be > 0");
  const int m = static_cast<int>(std::lround(p.delta0 / p.omega));
  return {m, p.delta0 - m * p.omega};
}

}  // namespace lzs
