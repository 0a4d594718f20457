#pragma once
#include <string>

namespace pairsplit {

// Al(x)Ga(1-x)As refractive index from a single-effective-oscillator
// (Afromowitz-type) fit. Coefficients are polynomials in the aluminum
// fraction x; fixed 20 C operating temperature is baked in.
struct AlloyDispersion {
  // oscillator energy E0(x) = e0_0 + e0_1 x + e0_2 x^2   [eV]
  double e0_0, e0_1, e0_2;
  // dispersion energy Ed(x) = ed_0 + ed_1 x              [eV]
  double ed_0, ed_1;
  // absorption edge Eg(x) = eg_0 + eg_1 x + eg_2 x^2     [eV]
  double eg_0, eg_1, eg_2;
  double lambda_min, lambda_max;  // validity window [m]
  double gap_margin_ev;           // require E_photon + margin < Eg(x)

  static AlloyDispersion builtin();
  static AlloyDispersion load(const std::string& path);
  void save(const std::string& path) const;

  // Throws std::invalid_argument outside the validity window (no silent
  // extrapolation). Returned index is real and > 1 in the window.
  double index(double x, double lambda) const;

  bool in_window(double x, double lambda) const;
};

// builtin-coefficient convenience entry point
double refractive_index(double x, double lambda);

}  // namespace pairsplit
