#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "pairsplit/spdc.hpp"

namespace pairsplit {

// frequency-dependent splitting ratios s_H (TE photon) and s_V (TM photon).
// Lookups outside a tabulated range are a hard error, never clamped.
class SplittingFunctions {
 public:
  using Model = std::function<std::pair<double, double>(double lambda)>;

  static SplittingFunctions constant(double s_h, double s_v);
  // rows (wavelength [m], s_te, s_tm); wavelengths strictly increasing
  static SplittingFunctions from_table(const std::vector<double>& lambda,
                                       const std::vector<double>& s_te,
                                       const std::vector<double>& s_tm);
  // closed-form spectrum evaluated exactly at each requested frequency
  static SplittingFunctions from_model(Model model);

  double s_h(double omega) const;
  double s_v(double omega) const;
  bool covers(double omega) const;

 private:
  enum class Kind { Constant, Table, Functional };
  Kind kind_ = Kind::Constant;
  double const_h_ = 1.0, const_v_ = 1.0;
  Model model_;
  std::vector<double> omega_;  // ascending
  std::vector<double> sh_, sv_;
  double interp(const std::vector<double>& ys, double omega) const;
};

struct HomInterferogram {
  std::vector<double> tau;
  std::vector<double> p_sep;
  std::vector<double> p_bunch;  // raw, before delay averaging
  std::vector<double> p_exp;    // p_sep + boxcar mean of p_bunch
  double window = 30.0 * fs;
  // filled by analyze()
  double c_ref = 0.0;
  double c_min = 0.0;
  double visibility = 0.0;
  double fwhm = 0.0;
  bool analyzed = false;
};

std::vector<double> make_delay_grid(double span, int npts);

// full coincidence-vs-delay computation; phases e^{-2i Omega tau} on the
// separated branch pairs and e^{-i omega_p tau} on the bunched cross term;
// midpoint quadrature on the state grid
HomInterferogram coincidence_probability(const BiphotonState& state,
                                         const SplittingFunctions& s,
                                         const std::vector<double>& tau,
                                         double window = 30.0 * fs);

// polarizers on both arms project out the bunched amplitudes; the curve is
// the surviving separated branch renormalized by its pair probability
HomInterferogram with_polarizers(const BiphotonState& state,
                                 const SplittingFunctions& s,
                                 const std::vector<double>& tau);

// C_ref from the outer 10% of samples at each end; requires that plateau
// to vary by < 1% (else the delay grid is too short and this throws)
double visibility(const HomInterferogram& ig);

// full width at half depth of C_ref - P_exp, linear interpolation
double dip_width(const HomInterferogram& ig);

// fills c_ref / c_min / visibility / fwhm
void analyze(HomInterferogram& ig);

// mean double-spacing of the sign changes of P_bunch around its mean;
// measures the fast-fringe period on a fine delay grid
double oscillation_period(const std::vector<double>& tau,
                          const std::vector<double>& p_bunch);

// delta >= 0 reproducing target_V with perfect splitting, bisection on the
// pinned reference grids (4096-point state, +-500 fs delays)
double calibrate_asymmetry(double target_v, const SourceParams& base);

// brute-force check of the monochromatic-pump reduction: 2D amplitude
// alpha(nu) f(Omega) with a Gaussian pump envelope of width sigma_nu,
// evaluated as a direct double sum per delay with no factorization
HomInterferogram oracle_2d(const BiphotonState& state, double sigma_nu,
                           int n_nu, const SplittingFunctions& s,
                           const std::vector<double>& tau,
                           double window = 30.0 * fs);

}  // namespace pairsplit
