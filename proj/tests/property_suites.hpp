#pragma once
// randomized invariant suites shared by the unit tests and the acceptance
// runner; each returns a pass/fail tally instead of asserting so both
// harnesses can report in their own format
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pairsplit/counting.hpp"
#include "pairsplit/hom.hpp"
#include "pairsplit/spdc.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit_tests {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

namespace detail {

inline void record(SuiteResult& r, int case_idx, const char* what, double a,
                   double b) {
  ++r.failures;
  if (!r.first_failure.empty()) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "case %d: %s (%.6e vs %.6e)", case_idx, what,
                a, b);
  r.first_failure = buf;
}

inline pairsplit::SourceParams random_source(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  pairsplit::SourceParams s;
  s.delta = 2000.0 * u(rng);
  s.dk_prime = pairsplit::default_dk_prime() * (0.5 + u(rng));
  s.pump_lambda = (750.0 + 40.0 * u(rng)) * pairsplit::nm;
  s.l_gen = (1.0 + 2.0 * u(rng)) * pairsplit::mm;
  return s;
}

// table spanning the occupied signal/idler wavelengths with margin
inline pairsplit::SplittingFunctions random_table(
    const pairsplit::BiphotonState& state, std::mt19937& rng) {
  using namespace pairsplit;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double om_max =
      std::max(std::abs(state.omega.front()), std::abs(state.omega.back()));
  const double lam_lo = 2.0 * PI * SPEED_OF_LIGHT / (state.omega0 + 1.05 * om_max);
  const double lam_hi = 2.0 * PI * SPEED_OF_LIGHT / (state.omega0 - 1.05 * om_max);
  const int nn = 64;
  std::vector<double> lam(nn), ste(nn), stm(nn);
  for (int i = 0; i < nn; ++i) {
    lam[i] = lam_lo + (lam_hi - lam_lo) * i / (nn - 1);
    ste[i] = u(rng);
    stm[i] = u(rng);
  }
  return SplittingFunctions::from_table(lam, ste, stm);
}

}  // namespace detail

// every generated state is unit-normalized, and stays unit-normalized
// through the bandpass filter's renormalization
inline SuiteResult suite_normalization(int cases, unsigned seed) {
  using namespace pairsplit;
  SuiteResult r{"normalization"};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> ni(64, 512);
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    const SourceParams s = detail::random_source(rng);
    const DetuningGrid grid = make_detuning_grid(ni(rng), 1.5 + 4.5 * u(rng));
    const BiphotonState state = biphoton_amplitude(s, grid, (c % 3) == 0);
    if (std::abs(state.norm() - 1.0) > 1e-12)
      detail::record(r, c, "state norm", state.norm(), 1.0);
    if (c % 2 == 0) {
      const double lam0 = 2.0 * PI * SPEED_OF_LIGHT / state.omega0;
      const double width = (10.0 + 50.0 * u(rng)) * nm;
      // keep the degenerate samples inside the band on both photons
      const double center = lam0 + 0.3 * (u(rng) - 0.5) * width;
      const FilterResult fr = apply_filter(state, center, width);
      if (std::abs(fr.state.norm() - 1.0) > 1e-12)
        detail::record(r, c, "filtered norm", fr.state.norm(), 1.0);
      if (!(fr.pair_transmission > 0.0 && fr.pair_transmission <= 1.0 + 1e-12))
        detail::record(r, c, "pair transmission", fr.pair_transmission, 1.0);
    }
  }
  return r;
}

// coincidence curves are probabilities for any splitting ratios, delays,
// and averaging windows
inline SuiteResult suite_probability_bounds(int cases, unsigned seed) {
  using namespace pairsplit;
  SuiteResult r{"probability bounds"};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    SourceParams s = detail::random_source(rng);
    s.delta = 2500.0 * u(rng);
    const BiphotonState state =
        biphoton_amplitude(s, make_detuning_grid(128, 3.0), (c % 2) == 0);
    const SplittingFunctions sf = SplittingFunctions::constant(u(rng), u(rng));
    const std::vector<double> tau =
        make_delay_grid((100.0 + 900.0 * u(rng)) * fs, 101);
    const HomInterferogram ig =
        coincidence_probability(state, sf, tau, 40.0 * u(rng) * fs);
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (ig.p_sep[i] < -1e-10 || ig.p_sep[i] > 1.0 + 1e-10) {
        detail::record(r, c, "p_sep out of range", ig.p_sep[i], 0.0);
        break;
      }
      if (ig.p_exp[i] < -1e-10 || ig.p_exp[i] > 1.0 + 1e-10) {
        detail::record(r, c, "p_exp out of range", ig.p_exp[i], 0.0);
        break;
      }
      if (ig.p_bunch[i] < -1e-12 || ig.p_bunch[i] > 1.0 + 1e-9) {
        detail::record(r, c, "p_bunch out of range", ig.p_bunch[i], 0.0);
        break;
      }
    }
  }
  return r;
}

// pure-amplitude states give delay-symmetric interferograms at any
// asymmetry offset
inline SuiteResult suite_delay_symmetry(int cases, unsigned seed) {
  using namespace pairsplit;
  SuiteResult r{"delay symmetry"};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    SourceParams s = detail::random_source(rng);
    s.delta = 2500.0 * u(rng);
    const BiphotonState state =
        biphoton_amplitude(s, make_detuning_grid(128, 3.0), true);
    const SplittingFunctions sf = SplittingFunctions::constant(u(rng), u(rng));
    const std::vector<double> tau = make_delay_grid(500.0 * fs, 201);
    const HomInterferogram ig =
        coincidence_probability(state, sf, tau, 30.0 * fs);
    const std::size_t n = tau.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
      if (std::abs(ig.p_exp[i] - ig.p_exp[n - 1 - i]) > 1e-10) {
        detail::record(r, c, "p_exp asymmetric", ig.p_exp[i],
                       ig.p_exp[n - 1 - i]);
        break;
      }
    }
  }
  return r;
}

// the four pair configurations always partition the outcome space
inline SuiteResult suite_configuration_sum(int cases, unsigned seed) {
  using namespace pairsplit;
  SuiteResult r{"configuration sum"};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> ni(64, 256);
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    SourceParams s = detail::random_source(rng);
    s.delta = 2500.0 * u(rng);
    const BiphotonState state =
        biphoton_amplitude(s, make_detuning_grid(ni(rng), 2.0 + 2.0 * u(rng)));
    const SplittingFunctions sf = detail::random_table(state, rng);
    const ConfigurationProbabilities p = four_config_probabilities(state, sf);
    if (std::abs(p.sum() - 1.0) > 1e-12)
      detail::record(r, c, "sum != 1", p.sum(), 1.0);
    for (double v : {p.split, p.both_b, p.both_a, p.swapped})
      if (v < 0.0 || v > 1.0 + 1e-12) {
        detail::record(r, c, "probability out of range", v, 0.0);
        break;
      }
  }
  return r;
}

// a larger asymmetry offset never improves the visibility
inline SuiteResult suite_visibility_monotone(int cases, unsigned seed) {
  using namespace pairsplit;
  SuiteResult r{"visibility monotone"};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SplittingFunctions sf = SplittingFunctions::constant(1.0, 1.0);
  const std::vector<double> tau = make_delay_grid(500.0 * fs, 401);
  const DetuningGrid grid = make_detuning_grid(256, 3.0);
  auto vis_at = [&](double delta) {
    SourceParams s;
    s.delta = delta;
    HomInterferogram ig = coincidence_probability(
        biphoton_amplitude(s, grid), sf, tau, 30.0 * fs);
    return visibility(ig);
  };
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    const double d1 = 2400.0 * u(rng);
    const double d2 = d1 + 10.0 + u(rng) * (2500.0 - d1 - 10.0);
    const double v1 = vis_at(d1), v2 = vis_at(d2);
    if (!(v1 >= v2 - 1e-9)) detail::record(r, c, "visibility increased", v1, v2);
  }
  return r;
}

inline std::vector<SuiteResult> run_all_property_suites(int cases,
                                                        unsigned seed = 2026) {
  return {
      suite_normalization(cases, seed + 1),
      suite_probability_bounds(cases, seed + 2),
      suite_delay_symmetry(cases, seed + 3),
      suite_configuration_sum(cases, seed + 4),
      suite_visibility_monotone(cases, seed + 5),
  };
}

}  // namespace pairsplit_tests
