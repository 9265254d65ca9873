#pragma once

#include <Eigen/Dense>

#include <functional>

#include "lzs/core.hpp"

namespace lzs {

/// Reference frame the two-level generator is expressed in. The g-component
/// of the state is identical in all four frames (every transformation acts
/// on |e> alone), which is what makes populations and the g-phase
/// frame-independent observables.
enum class FrameTag {
  Lab,               ///< full time-dependent detuning delta(t) on the diagonal
  Rotated,           ///< oscillating diagonal removed; coupling phase-modulated
  Interaction,       ///< rotated frame with the static detuning also removed
  FloquetTruncated,  ///< rotated frame with the coupling expanded in harmonics
};

struct Frame {
  FrameTag tag = FrameTag::Lab;
  int harmonic_cutoff = 0;  ///< |n| <= cutoff; used by FloquetTruncated only

  static Frame lab() { return {FrameTag::Lab, 0}; }
  static Frame rotated() { return {FrameTag::Rotated, 0}; }
  static Frame interaction() { return {FrameTag::Interaction, 0}; }
  static Frame floquet(int n_harmonics) { return {FrameTag::FloquetTruncated, n_harmonics}; }
};

/// ceil(a/omega) + 10: past the turning order n ~ a/omega the harmonic
/// amplitudes J_n(a/omega) decay super-exponentially, so this cutoff pushes
/// the truncation error below integrator tolerance.
int default_harmonic_cutoff(const DriveParams& p);

/// The 2x2 generator in the requested frame at time t, Hermitian, in
/// angular-frequency units; basis order (|g>, |e>).
///
/// The Rotated/Interaction/Floquet forms assume phi = 0 (drives with a
/// nonzero initial phase must be propagated in the Lab frame).
Eigen::Matrix2cd hamiltonian(const DriveParams& p, const Frame& frame, double t);

/// Closure form of the same generator for repeated evaluation along a
/// propagation; harmonic amplitudes are computed once up front.
std::function<Eigen::Matrix2cd(double)> make_generator(const DriveParams& p, const Frame& frame);

/// Instantaneous eigenvalues of the Lab-frame generator and the mixing
/// angle theta = atan2(v_dd, delta(t)) / 2, on the branch (0, pi/2).
struct SpectralPoint {
  double t;
  double e_plus;   ///< upper adiabatic frequency
  double e_minus;  ///< lower adiabatic frequency
  double theta;    ///< mixing angle (pi/4 exactly on resonance)
};

SpectralPoint instantaneous_spectrum(const DriveParams& p, double t);

/// Harmonic coupling amplitude Omega_n = v_dd * J_n(a/omega), signed.
double effective_rabi(const DriveParams& p, int n);

/// Nearest multi-photon resonance order m = round(delta0/omega) and the
/// residual mismatch delta0 - m*omega.
struct ResonanceOrder {
  int m;
  double mismatch;
};

ResonanceOrder resonance_order(const DriveParams& p);

}  // namespace lzs
