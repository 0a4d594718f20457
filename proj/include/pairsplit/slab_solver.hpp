#pragma once
#include <complex>
#include <vector>

namespace pairsplit {

enum class Pol { TE, TM };

// one homogeneous slab layer, refractive index + thickness [m]
struct SlabLayer {
  double n;
  double t;
};

// 1D multilayer bounded by semi-infinite substrate/superstrate.
// Layers are ordered from the substrate side up.
struct SlabProblem {
  std::vector<SlabLayer> layers;
  double n_sub;
  double n_sup;
};

// Transfer-matrix guidance-condition residual F(n_eff). Guided modes are
// its roots on (max(n_sub, n_sup), max layer index). TM propagates
// [H, H'/n^2] so the 1/n^2 derivative weighting is built in.
double dispersion_residual(const SlabProblem& p, double lambda, Pol pol,
                           double n_eff);

// All guided modes, effective indices strictly descending. Scan npts
// brackets, bisect each sign change to |b-a| < 1e-13. Empty result means
// no guided mode (not an error).
std::vector<double> find_slab_modes(const SlabProblem& p, double lambda,
                                    Pol pol, int npts = 2000);

// Transverse field profile of a guided mode at positions x [m] measured
// from the substrate interface (x<0 substrate, x>total superstrate).
// Principal component only: E_y for TE, H_y for TM. No per-layer
// renormalization, so intended for few-layer (lateral) problems.
std::vector<double> sample_mode_field(const SlabProblem& p, double lambda,
                                      Pol pol, double n_eff,
                                      const std::vector<double>& x);

// Complex TE reflection coefficient looking from a semi-infinite incidence
// medium n_in into `layers` terminated by semi-infinite n_term, at fixed
// in-plane index n_eff (may exceed layer indices; evanescent layers fine).
// Outgoing-wave condition in the terminal medium.
std::complex<double> stack_reflection_te(const std::vector<SlabLayer>& layers,
                                         double n_term, double n_in,
                                         double n_eff, double lambda);

}  // namespace pairsplit
