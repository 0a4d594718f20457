#pragma once
#include <set>
#include <string>
#include <vector>

#include "pairsplit/counting.hpp"
#include "pairsplit/coupler.hpp"
#include "pairsplit/geometry.hpp"
#include "pairsplit/kvfile.hpp"
#include "pairsplit/spdc.hpp"

namespace pairsplit {

// One flat-keyed run description. Values are stored in the units the file
// uses, so parse/serialize round-trips bit-exactly; the make_* accessors
// convert to SI for the engines. Every field has a working default, an
// empty file is a valid config.
struct RunConfig {
  std::string scenario = "hom";

  std::string stack_file;  // empty: built-in epitaxy

  double w_um = 1.29;
  double g_um = 1.51;
  double l_um = 1080.0;
  double etch_nm = 800.0;
  double gamma = 0.8;

  double l_gen_mm = 2.0;
  double dk_prime = 0.0;  // 0: birefringent walk-off default
  double gvd = 0.0;
  double pump_nm = 762.5;
  double delta = 0.0;
  double target_v = 0.89;
  std::string asymmetry = "target_v";  // target_v | delta
  // phase matching from the pump wavelength directly or from the ridge
  // width through the width->wavelength map
  std::string pump_source = "wavelength";  // wavelength | width
  double width_um = 5.0;

  double lambda_min_nm = 1450.0;
  double lambda_max_nm = 1600.0;
  int lambda_points = 151;
  int detuning_points = 4096;
  double detuning_span = 3.0;
  double delay_span_fs = 500.0;
  int delay_points = 4001;

  double window_fs = 30.0;
  bool drop_phase = false;

  std::string splitting_file;  // empty: solve the shipped structure instead

  bool filter_enabled = false;
  double filter_center_nm = 1525.0;
  double filter_width_nm = 12.0;

  double eta = 0.117;
  double eta_det = 0.85;
  double alpha_te = 90.0;
  double alpha_tm = 150.0;
  double length_mm = 7.0;
  double window_ps = 324.0;
  double pairs_per_s_mw = 7e6;
  std::vector<double> powers_mw = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};

  double sweep_lambda0_nm = 1525.0;
  double sweep_w_lo_um = 0.90;
  double sweep_w_hi_um = 1.40;
  int sweep_nw = 50;
  double sweep_g_lo_um = 1.00;
  double sweep_g_hi_um = 1.60;
  int sweep_ng = 50;
  double sweep_band_nm = 50.0;
  int sweep_band_points = 11;

  // block names seen in the file; informational only, not compared
  std::set<std::string> blocks_present;

  CouplerGeometry make_geometry() const;
  SourceParams make_source() const;  // delta as given; target_v not applied
  EfficiencyBudget make_budget() const;
  SweepRequest make_sweep() const;

  std::vector<std::string> validate() const;
  void require_valid() const;
};

bool operator==(const RunConfig& a, const RunConfig& b);
inline bool operator!=(const RunConfig& a, const RunConfig& b) {
  return !(a == b);
}

extern const std::vector<std::string> kScenarios;

RunConfig parse_run_config(const KvFile& kv, const std::string& origin);
// resolves stack.file / splitting.file relative to the config's directory
RunConfig load_run_config(const std::string& path);
KvFile serialize_run_config(const RunConfig& cfg);

}  // namespace pairsplit
