#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pairsplit/coupler.hpp"
#include "pairsplit/csv.hpp"
#include "pairsplit/hom.hpp"
#include "pairsplit/units.hpp"

using namespace pairsplit;

namespace {

// asymmetry offset reproducing V = 0.89 with perfect splitting, frozen
// from the pinned calibration grids
constexpr double DELTA_STAR = 432.46335597496;

BiphotonState calibrated_state(int n = 4096, double span = 3.0) {
  SourceParams p;
  p.delta = DELTA_STAR;
  return biphoton_amplitude(p, make_detuning_grid(n, span));
}

SplittingFunctions reference_model() {
  return SplittingFunctions::from_model(
      [](double lambda) { return reference_device_splitting(lambda); });
}

const std::vector<double> TAU = make_delay_grid(500 * fs, 4001);

}  // namespace

TEST_CASE("delay grid endpoints are exact") {
  const auto tau = make_delay_grid(500 * fs, 4001);
  REQUIRE(tau.size() == 4001);
  CHECK(tau.front() == -500 * fs);
  CHECK(tau.back() == 500 * fs);
  CHECK(tau[2000] == doctest::Approx(0.0).epsilon(1e-20));
  CHECK_THROWS(make_delay_grid(0.0, 11));
  CHECK_THROWS(make_delay_grid(10 * fs, 1));
}

TEST_CASE("splitting function lookups") {
  const auto c = SplittingFunctions::constant(0.3, 0.8);
  CHECK(c.s_h(1e15) == 0.3);
  CHECK(c.s_v(2e15) == 0.8);
  CHECK(c.covers(1e15));

  // table sampled from the closed-form model reproduces it between nodes
  std::vector<double> lam, te, tm;
  for (double l = 1400; l <= 1650; l += 0.05) {
    const auto [a, b] = reference_device_splitting(l * nm);
    lam.push_back(l * nm);
    te.push_back(a);
    tm.push_back(b);
  }
  const auto t = SplittingFunctions::from_table(lam, te, tm);
  const auto m = reference_model();
  for (double l = 1480; l <= 1570; l += 7.3) {
    const double om = 2 * PI * SPEED_OF_LIGHT / (l * nm);
    CHECK(t.s_h(om) == doctest::Approx(m.s_h(om)).epsilon(1e-6));
    CHECK(t.s_v(om) == doctest::Approx(m.s_v(om)).epsilon(1e-6));
  }
  CHECK(t.covers(2 * PI * SPEED_OF_LIGHT / (1500 * nm)));
  CHECK(!t.covers(2 * PI * SPEED_OF_LIGHT / (1300 * nm)));
  CHECK_THROWS(t.s_h(2 * PI * SPEED_OF_LIGHT / (1300 * nm)));

  CHECK_THROWS(SplittingFunctions::constant(-0.1, 0.5));
  CHECK_THROWS(SplittingFunctions::from_table({1.0 * um, 0.9 * um},
                                              {0.5, 0.5}, {0.5, 0.5}));
}

TEST_CASE("phase-free symmetric state dips to zero") {
  SourceParams p;  // delta = 0
  const auto st = biphoton_amplitude(p, make_detuning_grid(4096, 3.0), true);
  auto ig = coincidence_probability(st, SplittingFunctions::constant(1, 1),
                                    TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ig.c_min < 1e-14);
  for (std::size_t i = 0; i < ig.tau.size(); ++i) {
    CHECK(ig.p_exp[i] > -1e-14);
    // symmetric state, symmetric curve
    CHECK(std::fabs(ig.p_exp[i] - ig.p_exp[ig.tau.size() - 1 - i]) < 1e-11);
  }
}

TEST_CASE("calibrated perfect-splitting dip, frozen") {
  auto ig = coincidence_probability(calibrated_state(),
                                    SplittingFunctions::constant(1, 1), TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.890000000).epsilon(1e-8));
  CHECK(ig.c_ref == doctest::Approx(0.499994463257).epsilon(1e-9));
  CHECK(ig.c_min == doctest::Approx(0.054999390958).epsilon(1e-8));
  CHECK(ig.fwhm / fs == doctest::Approx(64.065667).epsilon(1e-6));
  // perfect splitting leaves no bunched amplitude
  for (double b : ig.p_bunch) CHECK(std::fabs(b) < 1e-16);
}

TEST_CASE("reference-device dip, frozen") {
  auto ig =
      coincidence_probability(calibrated_state(), reference_model(), TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.799141124).epsilon(1e-8));
  CHECK(ig.c_ref == doctest::Approx(0.499947964097).epsilon(1e-9));
  CHECK(ig.c_min == doctest::Approx(0.100418986299).epsilon(1e-8));
  CHECK(ig.fwhm / fs == doctest::Approx(69.239514).epsilon(1e-6));
}

TEST_CASE("tabulated spectra agree with the closed form") {
  const auto sp = read_splitting_csv(PAIRSPLIT_DATA_DIR "/splitting_L1080.csv");
  const auto table = SplittingFunctions::from_table(sp.lambda, sp.s_te,
                                                    sp.s_tm);
  auto ig = coincidence_probability(calibrated_state(), table, TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.799141124).epsilon(2e-4));
}

TEST_CASE("polarized projection, frozen") {
  auto ig = with_polarizers(calibrated_state(), reference_model(), TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.914165857).epsilon(1e-7));
  CHECK(ig.c_ref == doctest::Approx(0.499999877131).epsilon(1e-9));
  for (double b : ig.p_bunch) CHECK(b == 0.0);
}

TEST_CASE("12 nm filtered dip on the long grid, frozen") {
  SourceParams p;
  p.delta = DELTA_STAR;
  const auto st = biphoton_amplitude(p, make_detuning_grid(16384, 3.0));
  const auto fr = apply_filter(st, 1525 * nm, 12 * nm);
  CHECK(fr.pair_transmission == doctest::Approx(0.170831419).epsilon(1e-6));

  const auto tau = make_delay_grid(40000 * fs, 64001);
  auto ig = coincidence_probability(fr.state, reference_model(), tau);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.992250329).epsilon(1e-7));
  CHECK(ig.c_ref == doctest::Approx(0.499996479).epsilon(1e-7));
  CHECK(ig.fwhm / fs == doctest::Approx(393.548287).epsilon(1e-6));

  auto pol = with_polarizers(fr.state, reference_model(), tau);
  analyze(pol);
  CHECK(pol.visibility == doctest::Approx(0.998619597).epsilon(1e-7));
  CHECK(std::fabs(pol.visibility - ig.visibility) ==
        doctest::Approx(0.006369267).epsilon(1e-4));

  // dip widths scale with the inverse bandwidth: unfiltered reference
  auto bare = coincidence_probability(
      st, SplittingFunctions::constant(1, 1), TAU);
  analyze(bare);
  CHECK(bare.fwhm / fs == doctest::Approx(64.065668).epsilon(1e-6));
  CHECK(ig.fwhm / bare.fwhm == doctest::Approx(6.142889).epsilon(1e-5));
}

TEST_CASE("fast fringe period matches the pump, frozen") {
  const auto st = calibrated_state();
  const auto tfine = make_delay_grid(20 * fs, 8001);
  const auto half = SplittingFunctions::constant(0.5, 0.5);
  const auto ig = coincidence_probability(st, half, tfine);
  const double period = oscillation_period(tfine, ig.p_bunch);
  CHECK(period / fs == doctest::Approx(2.542903).epsilon(1e-5));
  CHECK(std::fabs(period - 2 * PI / st.omega_p) / period < 1e-3);

  // no oscillation, no period
  const auto flat = coincidence_probability(
      st, SplittingFunctions::constant(1, 1), tfine);
  CHECK_THROWS(oscillation_period(tfine, flat.p_bunch));
}

TEST_CASE("averaging window semantics") {
  const auto st = calibrated_state(256, 3.0);
  const auto s = SplittingFunctions::constant(0.5, 0.5);
  const auto tau = make_delay_grid(10 * fs, 11);  // dt = 2 fs

  const auto raw = coincidence_probability(st, s, tau, 0.0);
  for (std::size_t i = 0; i < tau.size(); ++i)
    CHECK(std::fabs(raw.p_exp[i] - (raw.p_sep[i] + raw.p_bunch[i])) < 1e-14);

  // window of 2 samples rounds up to an odd 3-sample boxcar
  const auto sm = coincidence_probability(st, s, tau, 4 * fs);
  const auto& b = raw.p_bunch;
  for (std::size_t i = 1; i + 1 < tau.size(); ++i)
    CHECK(std::fabs(sm.p_exp[i] -
                    (sm.p_sep[i] + (b[i - 1] + b[i] + b[i + 1]) / 3.0)) <
          1e-14);
  CHECK(std::fabs(sm.p_exp[0] - (sm.p_sep[0] + (b[0] + b[1]) / 2.0)) < 1e-14);
  CHECK(std::fabs(sm.p_exp[10] - (sm.p_sep[10] + (b[9] + b[10]) / 2.0)) <
        1e-14);

  CHECK_THROWS(coincidence_probability(st, s, tau, -1 * fs));
}

TEST_CASE("asymmetry calibration reproduces the frozen offset") {
  SourceParams base;
  const double d = calibrate_asymmetry(0.89, base);
  CHECK(d == doctest::Approx(DELTA_STAR).epsilon(1e-7));

  SourceParams check;
  check.delta = d;
  auto ig = coincidence_probability(
      biphoton_amplitude(check, make_detuning_grid(4096, 3.0)),
      SplittingFunctions::constant(1, 1), TAU);
  analyze(ig);
  CHECK(ig.visibility == doctest::Approx(0.89).epsilon(1e-9));

  CHECK_THROWS(calibrate_asymmetry(0.4, base));
  CHECK_THROWS(calibrate_asymmetry(1.2, base));
  SourceParams bad;
  bad.l_gen = -1.0;
  CHECK_THROWS(calibrate_asymmetry(0.89, bad));
}

TEST_CASE("short delay spans are rejected, not mis-measured") {
  // the filtered dip is ~394 fs wide; +-500 fs has no flat shoulder
  SourceParams p;
  p.delta = DELTA_STAR;
  const auto st = biphoton_amplitude(p, make_detuning_grid(4096, 3.0));
  const auto fr = apply_filter(st, 1525 * nm, 12 * nm);
  auto ig = coincidence_probability(fr.state, reference_model(), TAU);
  CHECK_THROWS_WITH_AS(analyze(ig), doctest::Contains("delay span"),
                       std::runtime_error);
  CHECK_THROWS(visibility(ig));
  CHECK_THROWS(dip_width(ig));
}

TEST_CASE("brute-force pump-envelope model reduces to the 1D curve") {
  const auto st = calibrated_state(64, 3.0);
  const auto s = SplittingFunctions::constant(0.8, 0.9);
  const auto tau = make_delay_grid(100 * fs, 201);
  const auto one = coincidence_probability(st, s, tau);
  const auto two = oracle_2d(st, 1e11, 64, s, tau);
  double sup = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i)
    sup = std::max(sup, std::fabs(one.p_exp[i] - two.p_exp[i]));
  CHECK(sup < 1e-3);
  CHECK_THROWS(oracle_2d(st, 1e11, 500, s, tau));
}
