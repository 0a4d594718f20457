#pragma once
#include <utility>

#include "pairsplit/geometry.hpp"
#include "pairsplit/layer_stack.hpp"

namespace pairsplit {

// vertical solves for the two cross-section regions
struct VerticalPair {
  double n_ridge;
  double n_etched;
  // etched region had no guided slab mode; its index fell back to the
  // superstrate value and lateral results should be treated as rough
  bool degraded;
};

VerticalPair vertical_pair(const LayerStack& stack,
                           const AlloyDispersion& disp, double lambda,
                           Pol pol, double etch_depth);

// lateral reduction of the cross-section. pol is the physical mode
// polarization; the lateral slab equation uses the swapped type.
struct LateralProfile {
  SlabProblem prob;  // piecewise lateral index profile
  Pol pol;           // physical polarization
  bool degraded;
};

LateralProfile effective_index_profile(const LayerStack& stack,
                                       const AlloyDispersion& disp,
                                       double w, double g, double etch_depth,
                                       double lambda, Pol pol);

LateralProfile single_guide_profile(const LayerStack& stack,
                                    const AlloyDispersion& disp, double w,
                                    double etch_depth, double lambda,
                                    Pol pol);

// lateral guidance-equation polarization for a physical mode
Pol lateral_pol(Pol pol);

// (n_S, n_AS) of a two-guide profile; throws if fewer than two lateral
// modes exist (guides uncoupled or below cutoff)
std::pair<double, double> supermode_indices(const LateralProfile& profile,
                                            double lambda);

// fundamental lateral mode of any profile; throws if none
double fundamental_index(const LateralProfile& profile, double lambda);

// isolated-guide effective index at telecom wavelengths
double single_guide_index(const LayerStack& stack,
                          const AlloyDispersion& disp, double w,
                          double lambda, Pol pol);

// (n_TE + n_TM)/2 of the isolated guide, the pair-averaged telecom index
// entering the phase-matching condition
double telecom_mean_index(const LayerStack& stack,
                          const AlloyDispersion& disp, double w,
                          double lambda);

// pump Bragg mode: transverse-resonance root of the core round trip
// nearest the mirror quarter-wave band center. _raw is the bare search;
// bragg_pump_index adds stack.bragg_offset.
double bragg_band_center(const LayerStack& stack,
                         const AlloyDispersion& disp, double lambda);
double bragg_pump_index_raw(const LayerStack& stack,
                            const AlloyDispersion& disp, double lambda);
double bragg_pump_index(const LayerStack& stack, const AlloyDispersion& disp,
                        double lambda);

}  // namespace pairsplit
