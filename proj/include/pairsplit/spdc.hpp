#pragma once
#include <complex>
#include <functional>
#include <vector>

#include "pairsplit/eim.hpp"

namespace pairsplit {

// sinc half-power argument: sin(x)/x = 1/sqrt(2)
inline constexpr double SINC_HALF_POWER_X = 1.3915573782515105;

// degenerate-pair spectral bandwidth target, 60 nm around 1525 nm,
// expressed as an angular-frequency FWHM
double default_bandwidth_omega();

// group-velocity mismatch giving that bandwidth for a 2 mm source
double default_dk_prime();

struct SourceParams {
  double l_gen = 2.0 * mm;
  double dk_prime = 0.0;  // 0 means "use default_dk_prime()"
  double gvd = 0.0;       // s^2/m
  double delta = 0.0;     // rad/m, birefringence asymmetry offset
  double pump_lambda = 762.5 * nm;
  // source metadata consumed by the counting module
  double brightness_per_mw_nm = 2.0e5;
  double pairs_per_s_mw = 7.0e6;

  double dk_prime_effective() const;
  std::vector<std::string> validate() const;
};

struct DetuningGrid {
  std::vector<double> omega;  // cell-centered, symmetric about 0 [rad/s]
  double h = 0.0;             // spacing [rad/s]
};

DetuningGrid make_detuning_grid(int n = 4096, double span = 3.0,
                                double bandwidth = 0.0 /* default */);

struct BiphotonState {
  double omega_p = 0.0;  // pump angular frequency
  double omega0 = 0.0;   // degeneracy frequency, omega_p / 2
  std::vector<double> omega;  // detuning grid
  double h = 0.0;
  std::vector<std::complex<double>> f;  // sum |f|^2 h = 1

  double norm() const;
  double lambda_signal(size_t k) const;  // photon 1 wavelength at node k
  double lambda_idler(size_t k) const;   // photon 2 wavelength at node k
};

// second-order phase-mismatch surrogate around degeneracy
double phase_mismatch_surrogate(const SourceParams& params, double detuning);

// mode-solver-backed mismatch: pump Bragg index against the TE/TM
// telecom indices of the isolated generation guide of width w
double phase_mismatch_solver(const SourceParams& params,
                             const LayerStack& stack,
                             const AlloyDispersion& disp, double w,
                             double detuning);

// f ~ sinc(db L/2) exp(i db L/2) on the grid, normalized; drop_phase
// replaces f by |f| (pure-amplitude state)
BiphotonState biphoton_amplitude(const SourceParams& params,
                                 const DetuningGrid& grid,
                                 bool drop_phase = false);

// same, with an arbitrary mismatch curve
BiphotonState biphoton_amplitude_from(
    const std::function<double(double)>& mismatch, double l_gen,
    double pump_lambda, const DetuningGrid& grid, bool drop_phase = false);

// anchored phase-matching map: pump wavelength vs generation-guide width,
// exact at (5 um, 762.5 nm) and (1.5 um, 770.5 nm), strictly decreasing
double pm_pump_wavelength(double w);

struct FilterResult {
  BiphotonState state;
  double pair_transmission;  // fraction of pairs with both photons passed
};

// rectangular bandpass applied to both photons, then renormalized
FilterResult apply_filter(const BiphotonState& state, double center,
                          double width);

// FWHM of |f|^2 expressed as a signal-wavelength width [m]
double spectral_fwhm(const BiphotonState& state);

// FWHM in delay of |sum |f|^2 exp(-2i Omega tau) h|, the transform width
// that bounds the interference dip
double intensity_fourier_width(const BiphotonState& state);

}  // namespace pairsplit
