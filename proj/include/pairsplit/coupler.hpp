#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "pairsplit/eim.hpp"
#include "pairsplit/geometry.hpp"

namespace pairsplit {

// L_c = lambda / (2 (n_S - n_AS)); throws on n_S <= n_AS
double beat_length(double n_s, double n_as, double lambda);

// s_TE = (1 + cos(pi L / Lc_TE))/2, s_TM = (1 - cos(pi L / Lc_TM))/2
std::pair<double, double> splitting_ratios(double L, double lc_te,
                                           double lc_tm);

struct SplittingSpectrum {
  std::vector<double> lambda;  // strictly increasing [m]
  std::vector<double> s_te;
  std::vector<double> s_tm;
};

// supplies (Lc_TE, Lc_TM) for a candidate geometry at one wavelength;
// returns false where the guides are uncoupled/cutoff (infeasible point).
// Lets sweep logic be tested against closed-form beat-length models.
using BeatLengthProvider = std::function<bool(
    double w, double g, double lambda, double& lc_te, double& lc_tm)>;

// mode-solver-backed provider; memoizes the vertical solves shared by all
// (w, g) points at one wavelength, so sweeps stay desk-scale
BeatLengthProvider eim_beat_provider(const LayerStack& stack,
                                     const AlloyDispersion& disp,
                                     double etch_depth);

// spectrum of the physical device: effective length gamma * L
SplittingSpectrum splitting_spectrum(const LayerStack& stack,
                                     const AlloyDispersion& disp,
                                     const CouplerGeometry& geometry,
                                     const std::vector<double>& lambda_grid);

struct DesignPoint {
  double w;
  double g;
  double L;  // 4 * Lc_TE(lambda0), the ideal-structure choice (no gamma)
  double objective;       // band-averaged min(s_TE, s_TM) at L
  double ratio;           // Lc_TE / Lc_TM at lambda0
  double ratio_residual;  // |ratio - 3/4|
};

struct SweepRow {
  double w;
  double g;
  double s_te;   // band-averaged
  double s_tm;   // band-averaged
  double ratio;  // Lc_TE / Lc_TM at lambda0; NaN where infeasible
};

struct SweepRequest {
  double lambda0;
  double w_lo, w_hi;
  int nw = 50;
  double g_lo, g_hi;
  int ng = 50;
  double band = 50.0 * nm;
  int band_points = 11;
};

// picks the grid point maximizing the band-averaged min(s_TE, s_TM) at
// L = 4 Lc_TE(lambda0); ties within 1e-3 of the best objective go to the
// smallest |ratio - 3/4|, then the smallest L, then scan order (w outer,
// g inner). Throws "no coupling region" if nothing is feasible.
DesignPoint design_sweep(const BeatLengthProvider& provider,
                         const SweepRequest& req,
                         std::vector<SweepRow>* surface = nullptr);

// fitted splitting model of the reference splitter device family used for
// the quantum-observable pipelines; same curve as data/splitting_L1080.csv
std::pair<double, double> reference_device_splitting(double lambda);

}  // namespace pairsplit
