#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "pairsplit/spdc.hpp"
#include "pairsplit/units.hpp"

using namespace pairsplit;

TEST_CASE("bandwidth and walk-off defaults, frozen") {
  CHECK(default_bandwidth_omega() ==
        doctest::Approx(4.859729923720771e13).epsilon(1e-14));
  CHECK(default_dk_prime() ==
        doctest::Approx(5.726891823593719e-11).epsilon(1e-14));
  SourceParams p;
  CHECK(p.dk_prime_effective() == default_dk_prime());
  p.dk_prime = 1e-12;
  CHECK(p.dk_prime_effective() == 1e-12);
}

TEST_CASE("detuning grid is cell-centered and symmetric") {
  const auto g = make_detuning_grid(8, 1.0);
  REQUIRE(g.omega.size() == 8);
  CHECK(g.h == doctest::Approx(2.0 * default_bandwidth_omega() / 8.0)
                   .epsilon(1e-15));
  for (int k = 0; k < 8; ++k)
    CHECK(g.omega[k] == doctest::Approx((k - 4 + 0.5) * g.h).epsilon(1e-15));
  CHECK(g.omega[3] == doctest::Approx(-g.omega[4]).epsilon(1e-15));
  CHECK_THROWS(make_detuning_grid(1, 1.0));
  CHECK_THROWS(make_detuning_grid(16, 0.0));
}

TEST_CASE("state is normalized with the correct carrier") {
  SourceParams p;
  const auto st = biphoton_amplitude(p, make_detuning_grid(512, 3.0));
  CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(st.omega_p ==
        doctest::Approx(2 * PI * SPEED_OF_LIGHT / p.pump_lambda)
            .epsilon(1e-15));
  CHECK(st.omega0 == doctest::Approx(st.omega_p / 2).epsilon(1e-15));
  for (std::size_t k = 0; k < st.f.size(); k += 100) {
    CHECK(2 * PI * SPEED_OF_LIGHT / st.lambda_signal(k) ==
          doctest::Approx(st.omega0 + st.omega[k]).epsilon(1e-14));
    CHECK(2 * PI * SPEED_OF_LIGHT / st.lambda_idler(k) ==
          doctest::Approx(st.omega0 - st.omega[k]).epsilon(1e-14));
  }
}

TEST_CASE("surrogate mismatch polynomial") {
  SourceParams p;
  p.dk_prime = 2e-11;
  p.gvd = 3e-26;
  p.delta = 40.0;
  const double om = 1.7e13;
  CHECK(phase_mismatch_surrogate(p, om) ==
        doctest::Approx(40.0 + 2e-11 * om + 0.5 * 3e-26 * om * om)
            .epsilon(1e-15));
}

TEST_CASE("amplitude carries the sinc envelope and half-arg phase") {
  SourceParams p;
  p.delta = 150.0;
  const auto grid = make_detuning_grid(64, 2.0);
  const auto st = biphoton_amplitude(p, grid);
  for (int k = 0; k < 64; ++k) {
    const double arg = phase_mismatch_surrogate(p, grid.omega[k]) *
                       p.l_gen / 2.0;
    const double s = arg == 0.0 ? 1.0 : std::sin(arg) / arg;
    // rotate the phase off; the remainder is real with the sign of sinc
    const auto rot =
        st.f[k] * std::complex<double>(std::cos(arg), -std::sin(arg));
    CHECK(std::fabs(rot.imag()) < 1e-16);
    CHECK(rot.real() * s >= 0.0);
  }
  const auto flat = biphoton_amplitude(p, grid, true);
  for (const auto& v : flat.f) {
    CHECK(v.imag() == 0.0);
    CHECK(v.real() >= 0.0);
  }
}

TEST_CASE("spectral width hits the 60 nm design value") {
  SourceParams p;
  p.delta = 432.46335597496;
  const auto st = biphoton_amplitude(p, make_detuning_grid(4096, 3.0));
  CHECK(spectral_fwhm(st) / nm == doctest::Approx(60.615208).epsilon(1e-5));
}

TEST_CASE("width map anchors and monotonicity") {
  CHECK(pm_pump_wavelength(5.0 * um) / nm ==
        doctest::Approx(762.5).epsilon(1e-12));
  CHECK(pm_pump_wavelength(1.5 * um) / nm ==
        doctest::Approx(770.5).epsilon(1e-12));
  double prev = 1e9;
  for (double w = 1.0; w <= 6.0; w += 0.25) {
    const double lp = pm_pump_wavelength(w * um);
    CHECK(lp < prev);
    prev = lp;
  }
  CHECK_THROWS(pm_pump_wavelength(0.8 * um));
  CHECK_THROWS(pm_pump_wavelength(6.5 * um));
}

TEST_CASE("wide filter is the identity") {
  SourceParams p;
  const auto st = biphoton_amplitude(p, make_detuning_grid(512, 3.0));
  const auto fr = apply_filter(st, 1525 * nm, 500 * nm);
  CHECK(fr.pair_transmission == doctest::Approx(1.0).epsilon(1e-13));
  for (std::size_t k = 0; k < st.f.size(); ++k)
    CHECK(std::abs(fr.state.f[k] - st.f[k]) < 1e-14);
}

TEST_CASE("12 nm filter: transmission, support, width, frozen") {
  SourceParams p;
  p.delta = 432.46335597496;
  const auto st = biphoton_amplitude(p, make_detuning_grid(4096, 3.0));
  const auto fr = apply_filter(st, 1525 * nm, 12 * nm);
  CHECK(fr.pair_transmission == doctest::Approx(0.170831485).epsilon(1e-6));
  CHECK(fr.state.norm() == doctest::Approx(1.0).epsilon(1e-13));
  for (std::size_t k = 0; k < st.f.size(); ++k) {
    const bool in1 = std::fabs(st.lambda_signal(k) - 1525 * nm) <= 6 * nm;
    const bool in2 = std::fabs(st.lambda_idler(k) - 1525 * nm) <= 6 * nm;
    if (!(in1 && in2)) CHECK(std::abs(fr.state.f[k]) == 0.0);
  }
  CHECK(spectral_fwhm(fr.state) / nm ==
        doctest::Approx(11.865414).epsilon(1e-5));
  CHECK_THROWS(apply_filter(st, 1300 * nm, 1 * nm));
}

TEST_CASE("delay-domain transform widths, frozen") {
  SourceParams p;
  p.delta = 432.46335597496;
  const auto st = biphoton_amplitude(p, make_detuning_grid(4096, 3.0));
  CHECK(intensity_fourier_width(st) / fs ==
        doctest::Approx(59.537496).epsilon(1e-6));
  const auto fr = apply_filter(st, 1525 * nm, 12 * nm);
  CHECK(intensity_fourier_width(fr.state) / fs ==
        doctest::Approx(393.536636).epsilon(1e-6));
}

TEST_CASE("parameter guards") {
  SourceParams p;
  CHECK(p.validate().empty());
  p.l_gen = 0.0;
  CHECK(!p.validate().empty());
  p = SourceParams{};
  p.pump_lambda = -1.0;
  CHECK(!p.validate().empty());
  CHECK_THROWS(biphoton_amplitude_from([](double) { return 0.0; }, 0.0,
                                       762.5 * nm, make_detuning_grid(8)));
}
