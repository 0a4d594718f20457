#pragma once
#include <string>
#include <vector>

#include "pairsplit/hom.hpp"
#include "pairsplit/spdc.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit {

// per-arm detection budget for the rate model
struct EfficiencyBudget {
  double eta = 0.117;           // chip-to-fiber coupling per arm
  double eta_det = 0.85;        // detector efficiency
  double alpha_te = 90.0;       // propagation loss, TE arm [1/m]
  double alpha_tm = 150.0;      // propagation loss, TM arm [1/m]
  double length = 7.0 * mm;     // on-chip path from source to facet
  double window = 324.0 * ps;   // coincidence window
  double pairs_per_s_mw = 7e6;  // generated pairs per second per mW of pump
  std::vector<std::string> validate() const;
  void require_valid() const;
};

// where the two photons of a pair end up: split across the output ports,
// both in one port, or split the wrong way around
struct ConfigurationProbabilities {
  double split;
  double both_b;
  double both_a;
  double swapped;
  double sum() const { return split + both_b + both_a + swapped; }
};

ConfigurationProbabilities four_config_probabilities(
    const BiphotonState& state, const SplittingFunctions& s);

struct CountRow {
  double pump_mw = 0.0;
  double singles_a = 0.0;      // Hz
  double singles_b = 0.0;      // Hz
  double coincidences = 0.0;   // Hz
  double accidentals = 0.0;    // Hz
  double car = 0.0;
  bool car_defined = false;    // false at zero pump power
};

CountRow count_rates(double pump_mw, const EfficiencyBudget& budget);
std::vector<CountRow> count_rates(const std::vector<double>& pump_mw,
                                  const EfficiencyBudget& budget);

}  // namespace pairsplit
