#pragma once
#include <string>
#include <vector>

#include "pairsplit/units.hpp"

namespace pairsplit {

// ridge-waveguide directional coupler: two guides of width w separated by
// gap g over coupling length L. gamma rescales L to the effective length
// actually used for splitting spectra (fabrication calibration).
struct CouplerGeometry {
  double w = 1.29 * um;
  double g = 1.51 * um;
  double L = 1080.0 * um;
  double etch_depth = 800.0 * nm;
  double gamma = 0.8;

  std::vector<std::string> validate() const;
  void require_valid() const;
};

}  // namespace pairsplit
