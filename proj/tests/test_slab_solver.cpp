#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "pairsplit/slab_solver.hpp"
#include "pairsplit/units.hpp"

using namespace pairsplit;

namespace {

// symmetric-slab guidance relation, bounded form (no tan poles).
// even TE: g cos u = k sin u; odd TE: g sin u = -k cos u; TM carries n^2.
double symmetric_residual(double n0, double n1, double d, double lambda,
                          Pol pol, int m, double n_eff) {
  const double k0 = 2.0 * PI / lambda;
  const double kap = k0 * std::sqrt(n1 * n1 - n_eff * n_eff);
  const double gam = k0 * std::sqrt(n_eff * n_eff - n0 * n0);
  const double u = 0.5 * kap * d;
  const double wte = pol == Pol::TM ? n1 * n1 / (n0 * n0) : 1.0;
  if (m % 2 == 0) return wte * gam * std::cos(u) - kap * std::sin(u);
  return wte * gam * std::sin(u) + kap * std::cos(u);
}

SlabProblem symmetric_slab(double n0, double n1, double d) {
  return SlabProblem{{{n1, d}}, n0, n0};
}

}  // namespace

TEST_CASE("random symmetric slabs satisfy the analytic relation") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> un0(1.4, 3.0);
  std::uniform_real_distribution<double> udn(0.05, 0.6);
  std::uniform_real_distribution<double> ud(0.2, 4.0);
  std::uniform_real_distribution<double> ul(0.7, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double n0 = un0(rng);
    const double n1 = n0 + udn(rng);
    const double d = ud(rng) * um;
    const double lambda = ul(rng) * um;
    const Pol pol = (trial % 2 == 0) ? Pol::TE : Pol::TM;

    const auto modes = find_slab_modes(symmetric_slab(n0, n1, d), lambda, pol);
    const double umax =
        PI * d / lambda * std::sqrt(n1 * n1 - n0 * n0);
    const double frac = 2.0 * umax / PI - std::floor(2.0 * umax / PI);
    if (frac > 0.02 && frac < 0.98) {
      CHECK(modes.size() ==
            static_cast<std::size_t>(std::floor(2.0 * umax / PI)) + 1);
    }
    for (std::size_t m = 0; m < modes.size(); ++m) {
      CHECK(modes[m] > n0);
      CHECK(modes[m] < n1);
      if (m > 0) CHECK(modes[m] < modes[m - 1]);
      // residual scaled by its slope-driven uncertainty
      const double k0 = 2.0 * PI / lambda;
      const double scale = k0 * (n0 + n1);
      CHECK(std::abs(symmetric_residual(n0, n1, d, lambda, pol,
                                        static_cast<int>(m), modes[m])) /
                scale <
            1e-6);
    }
  }
}

TEST_CASE("TE fundamental sits above TM in a symmetric slab") {
  const auto p = symmetric_slab(3.0, 3.4, 0.5 * um);
  const auto te = find_slab_modes(p, 1.525 * um, Pol::TE);
  const auto tm = find_slab_modes(p, 1.525 * um, Pol::TM);
  REQUIRE(!te.empty());
  REQUIRE(!tm.empty());
  CHECK(te[0] > tm[0]);
}

TEST_CASE("no guided mode below cutoff is not an error") {
  // asymmetric bounds push even the fundamental below cutoff
  const SlabProblem p{{{3.21, 0.05 * um}}, 3.2, 1.0};
  CHECK(find_slab_modes(p, 1.55 * um, Pol::TE).empty());
  CHECK(find_slab_modes(p, 1.55 * um, Pol::TM).empty());
}

TEST_CASE("asymmetric stack roots bracket a sign change") {
  const SlabProblem p{{{3.2, 0.3 * um}, {3.38, 0.351 * um}, {3.2, 0.2 * um}},
                      2.98, 1.0};
  for (Pol pol : {Pol::TE, Pol::TM}) {
    const auto modes = find_slab_modes(p, 1.525 * um, pol);
    REQUIRE(!modes.empty());
    for (double n : modes) {
      CHECK(n > 2.98);
      CHECK(n < 3.38);
      const double lo = dispersion_residual(p, 1.525 * um, pol, n - 1e-7);
      const double hi = dispersion_residual(p, 1.525 * um, pol, n + 1e-7);
      CHECK(lo * hi <= 0.0);
    }
  }
}

TEST_CASE("fundamental field peaks in the core and decays outside") {
  const double d = 0.6 * um;
  const auto p = symmetric_slab(3.0, 3.4, d);
  const auto modes = find_slab_modes(p, 1.525 * um, Pol::TE);
  REQUIRE(!modes.empty());
  const std::vector<double> xs = {-0.8 * um, -0.3 * um, 0.5 * d,
                                  d + 0.3 * um, d + 0.8 * um};
  const auto f = sample_mode_field(p, 1.525 * um, Pol::TE, modes[0], xs);
  const double peak = std::abs(f[2]);
  CHECK(std::abs(f[1]) < peak);
  CHECK(std::abs(f[0]) < std::abs(f[1]));  // monotone decay into substrate
  CHECK(std::abs(f[3]) < peak);
  CHECK(std::abs(f[4]) < std::abs(f[3]));
  // symmetric slab, symmetric fundamental
  CHECK(std::abs(f[1]) == doctest::Approx(std::abs(f[3])).epsilon(1e-9));
}

TEST_CASE("reflection reduces to Fresnel forms at normal incidence") {
  // n_eff = 0 turns the in-plane problem into plane waves at normal
  // incidence; single interface
  const auto r0 =
      stack_reflection_te({}, 3.0, 1.0, 0.0, 1.0 * um);
  CHECK(std::abs(std::abs(r0) - 2.0 / 4.0) < 1e-12);

  // quarter-wave layer: |r| = |n1^2 - n_in n_term| / (n1^2 + n_in n_term)
  const double n1 = 2.0, nin = 1.0, nterm = 3.0, lambda = 1.0 * um;
  const auto rq = stack_reflection_te({{n1, lambda / (4.0 * n1)}}, nterm, nin,
                                      0.0, lambda);
  const double expect =
      std::abs(n1 * n1 - nin * nterm) / (n1 * n1 + nin * nterm);
  CHECK(std::abs(std::abs(rq) - expect) < 1e-12);

  // half-wave layer is absentee, including phase
  const auto rh = stack_reflection_te({{n1, lambda / (2.0 * n1)}}, nterm, nin,
                                      0.0, lambda);
  CHECK(std::abs(rh - r0) < 1e-12);

  // evanescent termination, lossless: unit magnitude
  const auto re = stack_reflection_te({{3.2, 0.3 * um}}, 2.9, 3.38, 3.0,
                                      1.0 * um);
  CHECK(std::abs(re) == doctest::Approx(1.0).epsilon(1e-9));
}
