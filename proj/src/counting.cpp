#include "pairsplit/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace pairsplit {

std::vector<std::string> EfficiencyBudget::validate() const {
  std::vector<std::string> issues;
  if (!(eta > 0.0 && eta <= 1.0))
    issues.push_back("coupling efficiency must lie in (0, 1]");
  if (!(eta_det > 0.0 && eta_det <= 1.0))
    issues.push_back("detector efficiency must lie in (0, 1]");
  if (!(alpha_te >= 0.0) || !(alpha_tm >= 0.0))
    issues.push_back("propagation loss must be >= 0");
  if (!(length >= 0.0)) issues.push_back("propagation length must be >= 0");
  if (!(window > 0.0)) issues.push_back("coincidence window must be > 0");
  if (!(pairs_per_s_mw > 0.0))
    issues.push_back("pair generation rate must be > 0");
  return issues;
}

void EfficiencyBudget::require_valid() const {
  const auto issues = validate();
  if (!issues.empty()) throw std::invalid_argument(issues.front());
}

ConfigurationProbabilities four_config_probabilities(
    const BiphotonState& state, const SplittingFunctions& s) {
  const std::size_t n = state.f.size();
  if (n < 2 || state.omega.size() != n)
    throw std::invalid_argument("biphoton state is empty or inconsistent");
  ConfigurationProbabilities p{0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const double ab2 = std::norm(state.f[k]);
    const double sh = s.s_h(state.omega0 + state.omega[k]);
    const double sv = s.s_v(state.omega0 - state.omega[k]);
    p.split += ab2 * sh * sv;
    p.both_b += ab2 * (1.0 - sh) * sv;
    p.both_a += ab2 * sh * (1.0 - sv);
    p.swapped += ab2 * (1.0 - sh) * (1.0 - sv);
  }
  p.split *= state.h;
  p.both_b *= state.h;
  p.both_a *= state.h;
  p.swapped *= state.h;
  return p;
}

CountRow count_rates(double pump_mw, const EfficiencyBudget& budget) {
  budget.require_valid();
  if (!(pump_mw >= 0.0))
    throw std::invalid_argument("pump power must be >= 0");

  CountRow row;
  row.pump_mw = pump_mw;
  if (pump_mw == 0.0) return row;  // car_defined stays false

  const double rate = budget.pairs_per_s_mw * pump_mw;
  const double t_te = std::exp(-budget.alpha_te * budget.length);
  const double t_tm = std::exp(-budget.alpha_tm * budget.length);
  const double arm = budget.eta * budget.eta_det;
  row.singles_a = rate * t_te * arm;
  row.singles_b = rate * t_tm * arm;
  row.coincidences = rate * t_te * t_tm * arm * arm;
  row.accidentals = row.singles_a * row.singles_b * budget.window;
  row.car = row.coincidences / row.accidentals;
  row.car_defined = true;
  return row;
}

std::vector<CountRow> count_rates(const std::vector<double>& pump_mw,
                                  const EfficiencyBudget& budget) {
  std::vector<CountRow> rows;
  rows.reserve(pump_mw.size());
  for (double p : pump_mw) rows.push_back(count_rates(p, budget));
  return rows;
}

}  // namespace pairsplit
