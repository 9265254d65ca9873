#include <doctest.h>

#include <cmath>

#include "lzs/hamiltonians.hpp"
#include "oracles.hpp"

using namespace lzs;

namespace {

DriveParams make(double a, double delta0, double omega, double v = 1.0) {
  DriveParams p;
  p.v_dd = v;
  p.a = a;
  p.delta0 = delta0;
  p.omega = omega;
  return p;
}

double hermiticity_defect(const Eigen::Matrix2cd& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("lab frame matrix entries") {
  const Eigen::Matrix2cd h = hamiltonian(make(0, 0, 1), Frame::lab(), 0.37);
  CHECK(h(0, 0) == std::complex<double>(0, 0));
  CHECK(h(0, 1) == std::complex<double>(-0.5, 0));
  CHECK(h(1, 0) == std::complex<double>(-0.5, 0));
  CHECK(h(1, 1) == std::complex<double>(0, 0));

  // (a, delta0, omega) = (10, 5, 1): delta(0) = 15
  const Eigen::Matrix2cd h2 = hamiltonian(make(10, 5, 1), Frame::lab(), 0.0);
  CHECK(h2(1, 1).real() == doctest::Approx(-15.0));
  CHECK(h2(1, 1).imag() == 0.0);
}

TEST_CASE("rotated frame at t = 0 has the bare coupling") {
  const Eigen::Matrix2cd h = hamiltonian(make(18, 6, 3), Frame::rotated(), 0.0);
  CHECK(h(0, 1).real() == doctest::Approx(-0.5));
  CHECK(h(0, 1).imag() == doctest::Approx(0.0));
  CHECK(h(1, 1).real() == doctest::Approx(-6.0));
}

TEST_CASE("all frames stay Hermitian along the drive") {
  const DriveParams p = make(13, 12, 3);
  const Frame frames[] = {Frame::lab(), Frame::rotated(), Frame::interaction(),
                          Frame::floquet(default_harmonic_cutoff(p))};
  for (const Frame& f : frames) {
    auto gen = make_generator(p, f);
    for (int i = 0; i < 50; ++i) {
      const double t = 0.11 * i;
      CHECK(hermiticity_defect(gen(t)) < 1e-12);
    }
  }
}

TEST_CASE("floquet coupling converges to the rotated-frame coupling") {
  const DriveParams p = make(18, 6, 0.75);
  const Frame full = Frame::rotated();
  const Frame trunc = Frame::floquet(default_harmonic_cutoff(p));
  auto g_full = make_generator(p, full);
  auto g_trunc = make_generator(p, trunc);
  for (int i = 0; i < 40; ++i) {
    const double t = 0.2 * i;
    CHECK(std::abs(g_full(t)(0, 1) - g_trunc(t)(0, 1)) < 1e-9);
  }
  // a too-small cutoff visibly truncates
  auto g_bad = make_generator(p, Frame::floquet(3));
  double worst = 0;
  for (int i = 0; i < 40; ++i) {
    const double t = 0.2 * i;
    worst = std::max(worst, std::abs(g_full(t)(0, 1) - g_bad(t)(0, 1)));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("instantaneous spectrum: gap and mixing angle") {
  // exact resonance
  const SpectralPoint on = instantaneous_spectrum(make(0, 0, 1), 0.0);
  CHECK(on.e_plus - on.e_minus == doctest::Approx(1.0));
  CHECK(on.theta == doctest::Approx(pi / 4));

  // decoupled limit: v_dd -> 0 with delta > 0
  const SpectralPoint off = instantaneous_spectrum(make(0, 7.0, 1, 1e-9), 0.0);
  CHECK(off.e_plus - off.e_minus == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(std::abs((off.theta) - (0.0)) < 1e-9);

  // ordering holds everywhere
  const DriveParams p = make(10, 5, 1);
  for (int i = 0; i <= 400; ++i) {
    const SpectralPoint s = instantaneous_spectrum(p, i * two_pi / 400.0);
    CHECK(s.e_plus >= s.e_minus);
    CHECK(s.e_plus - s.e_minus >= 1.0 - 1e-12);
  }
}

TEST_CASE("spectrum gap is minimized exactly at the detuning zeros") {
  const DriveParams p = make(10, 5, 1);
  // delta(t) = 5 + 10 cos t = 0 at t = acos(-1/2)
  const double t_cross = std::acos(-0.5);
  const SpectralPoint s = instantaneous_spectrum(p, t_cross);
  CHECK(s.e_plus - s.e_minus == doctest::Approx(p.v_dd).epsilon(1e-12));
  // any other sampled time has a larger gap
  for (int i = 1; i <= 200; ++i) {
    const double t = t_cross + 0.003 * i;
    const SpectralPoint q = instantaneous_spectrum(p, t);
    CHECK(q.e_plus - q.e_minus >= s.e_plus - s.e_minus - 1e-12);
  }
}

TEST_CASE("effective_rabi") {
  const DriveParams quiet = make(0, 5, 2, 3.0);
  CHECK(effective_rabi(quiet, 0) == doctest::Approx(3.0));
  CHECK(effective_rabi(quiet, 1) == 0.0);
  CHECK(effective_rabi(quiet, -4) == 0.0);

  // strong driving a/omega = 3
  const double j1_3 = static_cast<double>(oracles::bessel_series(1, 3.0L));
  CHECK(effective_rabi(make(18, 6, 6), 1) == doctest::Approx(j1_3).epsilon(1e-12));
  CHECK(j1_3 == doctest::Approx(0.3391).epsilon(1e-4));

  // intermediate m = 4 harmonic at a/omega = 13/3
  const double j4 = static_cast<double>(oracles::bessel_series(4, 13.0L / 3.0L));
  CHECK(effective_rabi(make(13, 12, 3), 4) == doctest::Approx(j4).epsilon(1e-12));
}

TEST_CASE("resonance_order") {
  const ResonanceOrder a = resonance_order(make(13, 12, 3));
  CHECK(a.m == 4);
  CHECK(std::abs((a.mismatch) - (0.0)) < 1e-14);

  const ResonanceOrder b = resonance_order(make(18, 6, 6));
  CHECK(b.m == 1);
  CHECK(std::abs((b.mismatch) - (0.0)) < 1e-14);

  const ResonanceOrder c = resonance_order(make(83.2 * two_pi, 76.8 * two_pi, 3.15 * two_pi));
  CHECK(c.m == 24);
  CHECK(c.mismatch == doctest::Approx(1.2 * two_pi).epsilon(1e-10));
}
