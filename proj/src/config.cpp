#include "pairsplit/config.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pairsplit/units.hpp"

namespace pairsplit {

const std::vector<std::string> kScenarios = {"splitting", "sweep",   "source",
                                             "hom",       "configs", "counts"};

namespace {

const char* const kKnownKeys[] = {
    "scenario",
    "stack.file",
    "geometry.w_um",
    "geometry.g_um",
    "geometry.l_um",
    "geometry.etch_nm",
    "geometry.gamma",
    "source.l_gen_mm",
    "source.dk_prime",
    "source.gvd",
    "source.pump_nm",
    "source.delta",
    "source.target_v",
    "source.asymmetry",
    "source.pump_source",
    "source.width_um",
    "grid.lambda_min_nm",
    "grid.lambda_max_nm",
    "grid.lambda_points",
    "grid.detuning_points",
    "grid.detuning_span",
    "grid.delay_span_fs",
    "grid.delay_points",
    "hom.window_fs",
    "hom.drop_phase",
    "splitting.file",
    "filter.enabled",
    "filter.center_nm",
    "filter.width_nm",
    "counting.eta",
    "counting.eta_det",
    "counting.alpha_te",
    "counting.alpha_tm",
    "counting.length_mm",
    "counting.window_ps",
    "counting.pairs_per_s_mw",
    "counting.powers_mw",
    "sweep.lambda0_nm",
    "sweep.w_lo_um",
    "sweep.w_hi_um",
    "sweep.nw",
    "sweep.g_lo_um",
    "sweep.g_hi_um",
    "sweep.ng",
    "sweep.band_nm",
    "sweep.band_points",
};

bool known_key(const std::string& key) {
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

bool parse_bool(const std::string& value, const std::string& key,
                const std::string& origin) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::runtime_error(origin + ": " + key +
                           " must be true or false, got '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& value,
                                      const std::string& key,
                                      const std::string& origin) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string field;
  while (std::getline(in, field, ',')) {
    const auto a = field.find_first_not_of(" \t");
    const auto b = field.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw std::runtime_error(origin + ": " + key + " has an empty entry");
    field = field.substr(a, b - a + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size())
      throw std::runtime_error(origin + ": " + key + ": not a number: '" +
                               field + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::runtime_error(origin + ": " + key + " must list >= 1 value");
  return out;
}

std::string format_double_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_double(v[i]);
  }
  return out;
}

std::string dirname_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  if (pos == std::string::npos) return "";
  return path.substr(0, pos + 1);
}

void resolve_relative(std::string& file, const std::string& dir) {
  if (file.empty() || dir.empty()) return;
  if (file.front() == '/') return;
  file = dir + file;
}

}  // namespace

CouplerGeometry RunConfig::make_geometry() const {
  CouplerGeometry g;
  g.w = w_um * um;
  g.g = g_um * um;
  g.L = l_um * um;
  g.etch_depth = etch_nm * nm;
  g.gamma = gamma;
  return g;
}

SourceParams RunConfig::make_source() const {
  SourceParams s;
  s.l_gen = l_gen_mm * mm;
  s.dk_prime = dk_prime;
  s.gvd = gvd;
  s.delta = delta;
  s.pump_lambda = pump_nm * nm;
  return s;
}

EfficiencyBudget RunConfig::make_budget() const {
  EfficiencyBudget b;
  b.eta = eta;
  b.eta_det = eta_det;
  b.alpha_te = alpha_te;
  b.alpha_tm = alpha_tm;
  b.length = length_mm * mm;
  b.window = window_ps * ps;
  b.pairs_per_s_mw = pairs_per_s_mw;
  return b;
}

SweepRequest RunConfig::make_sweep() const {
  SweepRequest r;
  r.lambda0 = sweep_lambda0_nm * nm;
  r.w_lo = sweep_w_lo_um * um;
  r.w_hi = sweep_w_hi_um * um;
  r.nw = sweep_nw;
  r.g_lo = sweep_g_lo_um * um;
  r.g_hi = sweep_g_hi_um * um;
  r.ng = sweep_ng;
  r.band = sweep_band_nm * nm;
  r.band_points = sweep_band_points;
  return r;
}

std::vector<std::string> RunConfig::validate() const {
  std::vector<std::string> issues;
  if (std::find(kScenarios.begin(), kScenarios.end(), scenario) ==
      kScenarios.end()) {
    std::string names;
    for (const auto& s : kScenarios) names += (names.empty() ? "" : "|") + s;
    issues.push_back("unknown scenario '" + scenario + "' (expected " + names +
                     ")");
  }
  for (const auto& m : make_geometry().validate())
    issues.push_back("geometry: " + m);
  for (const auto& m : make_source().validate())
    issues.push_back("source: " + m);
  if (asymmetry != "target_v" && asymmetry != "delta")
    issues.push_back("source.asymmetry must be target_v or delta");
  if (asymmetry == "target_v" && !(target_v > 0.5 && target_v <= 1.0))
    issues.push_back("source.target_v must lie in (0.5, 1]");
  if (pump_source != "wavelength" && pump_source != "width")
    issues.push_back("source.pump_source must be wavelength or width");
  if (pump_source == "width" && !(width_um > 0.0))
    issues.push_back("source.width_um must be > 0");
  if (!(lambda_min_nm > 0.0) || !(lambda_max_nm > lambda_min_nm))
    issues.push_back("grid: need 0 < lambda_min_nm < lambda_max_nm");
  if (lambda_points < 2) issues.push_back("grid.lambda_points must be >= 2");
  if (detuning_points < 2)
    issues.push_back("grid.detuning_points must be >= 2");
  if (!(detuning_span > 0.0))
    issues.push_back("grid.detuning_span must be > 0");
  if (!(delay_span_fs > 0.0))
    issues.push_back("grid.delay_span_fs must be > 0");
  if (delay_points < 2) issues.push_back("grid.delay_points must be >= 2");
  if (!(window_fs >= 0.0)) issues.push_back("hom.window_fs must be >= 0");
  if (filter_enabled) {
    if (!(filter_center_nm > 0.0))
      issues.push_back("filter.center_nm must be > 0");
    if (!(filter_width_nm > 0.0))
      issues.push_back("filter.width_nm must be > 0");
  }
  for (const auto& m : make_budget().validate())
    issues.push_back("counting: " + m);
  for (double p : powers_mw)
    if (!(p >= 0.0)) {
      issues.push_back("counting.powers_mw entries must be >= 0");
      break;
    }
  if (!(sweep_lambda0_nm > 0.0))
    issues.push_back("sweep.lambda0_nm must be > 0");
  if (!(sweep_w_lo_um > 0.0) || !(sweep_w_hi_um >= sweep_w_lo_um))
    issues.push_back("sweep: need 0 < w_lo_um <= w_hi_um");
  if (!(sweep_g_lo_um > 0.0) || !(sweep_g_hi_um >= sweep_g_lo_um))
    issues.push_back("sweep: need 0 < g_lo_um <= g_hi_um");
  if (sweep_nw < 1 || sweep_ng < 1)
    issues.push_back("sweep: nw and ng must be >= 1");
  if (!(sweep_band_nm >= 0.0)) issues.push_back("sweep.band_nm must be >= 0");
  if (sweep_band_points < 1)
    issues.push_back("sweep.band_points must be >= 1");
  return issues;
}

void RunConfig::require_valid() const {
  const auto issues = validate();
  if (issues.empty()) return;
  std::string msg = "invalid run config:";
  for (const auto& m : issues) msg += "\n  - " + m;
  throw std::invalid_argument(msg);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.scenario == b.scenario && a.stack_file == b.stack_file &&
         a.w_um == b.w_um && a.g_um == b.g_um && a.l_um == b.l_um &&
         a.etch_nm == b.etch_nm && a.gamma == b.gamma &&
         a.l_gen_mm == b.l_gen_mm && a.dk_prime == b.dk_prime &&
         a.gvd == b.gvd && a.pump_nm == b.pump_nm && a.delta == b.delta &&
         a.target_v == b.target_v && a.asymmetry == b.asymmetry &&
         a.pump_source == b.pump_source && a.width_um == b.width_um &&
         a.lambda_min_nm == b.lambda_min_nm &&
         a.lambda_max_nm == b.lambda_max_nm &&
         a.lambda_points == b.lambda_points &&
         a.detuning_points == b.detuning_points &&
         a.detuning_span == b.detuning_span &&
         a.delay_span_fs == b.delay_span_fs &&
         a.delay_points == b.delay_points && a.window_fs == b.window_fs &&
         a.drop_phase == b.drop_phase &&
         a.splitting_file == b.splitting_file &&
         a.filter_enabled == b.filter_enabled &&
         a.filter_center_nm == b.filter_center_nm &&
         a.filter_width_nm == b.filter_width_nm && a.eta == b.eta &&
         a.eta_det == b.eta_det && a.alpha_te == b.alpha_te &&
         a.alpha_tm == b.alpha_tm && a.length_mm == b.length_mm &&
         a.window_ps == b.window_ps &&
         a.pairs_per_s_mw == b.pairs_per_s_mw && a.powers_mw == b.powers_mw &&
         a.sweep_lambda0_nm == b.sweep_lambda0_nm &&
         a.sweep_w_lo_um == b.sweep_w_lo_um &&
         a.sweep_w_hi_um == b.sweep_w_hi_um && a.sweep_nw == b.sweep_nw &&
         a.sweep_g_lo_um == b.sweep_g_lo_um &&
         a.sweep_g_hi_um == b.sweep_g_hi_um && a.sweep_ng == b.sweep_ng &&
         a.sweep_band_nm == b.sweep_band_nm &&
         a.sweep_band_points == b.sweep_band_points;
}

RunConfig parse_run_config(const KvFile& kv, const std::string& origin) {
  RunConfig cfg;
  for (const auto& [key, value] : kv.entries) {
    if (!known_key(key))
      throw std::runtime_error(origin + ": unknown key '" + key + "'");
    const auto dot = key.find('.');
    if (dot != std::string::npos)
      cfg.blocks_present.insert(key.substr(0, dot));
  }

  auto str = [&](const char* key, std::string& dst) {
    if (auto v = kv.get(key)) dst = *v;
  };
  auto num = [&](const char* key, double& dst) {
    if (kv.has(key)) dst = kv.get_double(key, origin);
  };
  auto integer = [&](const char* key, int& dst) {
    if (kv.has(key)) dst = static_cast<int>(kv.get_long_or(key, dst));
  };
  auto flag = [&](const char* key, bool& dst) {
    if (auto v = kv.get(key)) dst = parse_bool(*v, key, origin);
  };

  str("scenario", cfg.scenario);
  str("stack.file", cfg.stack_file);
  num("geometry.w_um", cfg.w_um);
  num("geometry.g_um", cfg.g_um);
  num("geometry.l_um", cfg.l_um);
  num("geometry.etch_nm", cfg.etch_nm);
  num("geometry.gamma", cfg.gamma);
  num("source.l_gen_mm", cfg.l_gen_mm);
  num("source.dk_prime", cfg.dk_prime);
  num("source.gvd", cfg.gvd);
  num("source.pump_nm", cfg.pump_nm);
  num("source.delta", cfg.delta);
  num("source.target_v", cfg.target_v);
  str("source.asymmetry", cfg.asymmetry);
  str("source.pump_source", cfg.pump_source);
  num("source.width_um", cfg.width_um);
  num("grid.lambda_min_nm", cfg.lambda_min_nm);
  num("grid.lambda_max_nm", cfg.lambda_max_nm);
  integer("grid.lambda_points", cfg.lambda_points);
  integer("grid.detuning_points", cfg.detuning_points);
  num("grid.detuning_span", cfg.detuning_span);
  num("grid.delay_span_fs", cfg.delay_span_fs);
  integer("grid.delay_points", cfg.delay_points);
  num("hom.window_fs", cfg.window_fs);
  flag("hom.drop_phase", cfg.drop_phase);
  str("splitting.file", cfg.splitting_file);
  flag("filter.enabled", cfg.filter_enabled);
  num("filter.center_nm", cfg.filter_center_nm);
  num("filter.width_nm", cfg.filter_width_nm);
  num("counting.eta", cfg.eta);
  num("counting.eta_det", cfg.eta_det);
  num("counting.alpha_te", cfg.alpha_te);
  num("counting.alpha_tm", cfg.alpha_tm);
  num("counting.length_mm", cfg.length_mm);
  num("counting.window_ps", cfg.window_ps);
  num("counting.pairs_per_s_mw", cfg.pairs_per_s_mw);
  if (auto v = kv.get("counting.powers_mw"))
    cfg.powers_mw = parse_double_list(*v, "counting.powers_mw", origin);
  num("sweep.lambda0_nm", cfg.sweep_lambda0_nm);
  num("sweep.w_lo_um", cfg.sweep_w_lo_um);
  num("sweep.w_hi_um", cfg.sweep_w_hi_um);
  integer("sweep.nw", cfg.sweep_nw);
  num("sweep.g_lo_um", cfg.sweep_g_lo_um);
  num("sweep.g_hi_um", cfg.sweep_g_hi_um);
  integer("sweep.ng", cfg.sweep_ng);
  num("sweep.band_nm", cfg.sweep_band_nm);
  integer("sweep.band_points", cfg.sweep_band_points);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  RunConfig cfg = parse_run_config(KvFile::parse_file(path), path);
  const std::string dir = dirname_of(path);
  resolve_relative(cfg.stack_file, dir);
  resolve_relative(cfg.splitting_file, dir);
  return cfg;
}

KvFile serialize_run_config(const RunConfig& cfg) {
  KvFile kv;
  kv.set("scenario", cfg.scenario);
  kv.set("stack.file", cfg.stack_file);
  kv.set_double("geometry.w_um", cfg.w_um);
  kv.set_double("geometry.g_um", cfg.g_um);
  kv.set_double("geometry.l_um", cfg.l_um);
  kv.set_double("geometry.etch_nm", cfg.etch_nm);
  kv.set_double("geometry.gamma", cfg.gamma);
  kv.set_double("source.l_gen_mm", cfg.l_gen_mm);
  kv.set_double("source.dk_prime", cfg.dk_prime);
  kv.set_double("source.gvd", cfg.gvd);
  kv.set_double("source.pump_nm", cfg.pump_nm);
  kv.set_double("source.delta", cfg.delta);
  kv.set_double("source.target_v", cfg.target_v);
  kv.set("source.asymmetry", cfg.asymmetry);
  kv.set("source.pump_source", cfg.pump_source);
  kv.set_double("source.width_um", cfg.width_um);
  kv.set_double("grid.lambda_min_nm", cfg.lambda_min_nm);
  kv.set_double("grid.lambda_max_nm", cfg.lambda_max_nm);
  kv.set("grid.lambda_points", std::to_string(cfg.lambda_points));
  kv.set("grid.detuning_points", std::to_string(cfg.detuning_points));
  kv.set_double("grid.detuning_span", cfg.detuning_span);
  kv.set_double("grid.delay_span_fs", cfg.delay_span_fs);
  kv.set("grid.delay_points", std::to_string(cfg.delay_points));
  kv.set_double("hom.window_fs", cfg.window_fs);
  kv.set("hom.drop_phase", cfg.drop_phase ? "true" : "false");
  kv.set("splitting.file", cfg.splitting_file);
  kv.set("filter.enabled", cfg.filter_enabled ? "true" : "false");
  kv.set_double("filter.center_nm", cfg.filter_center_nm);
  kv.set_double("filter.width_nm", cfg.filter_width_nm);
  kv.set_double("counting.eta", cfg.eta);
  kv.set_double("counting.eta_det", cfg.eta_det);
  kv.set_double("counting.alpha_te", cfg.alpha_te);
  kv.set_double("counting.alpha_tm", cfg.alpha_tm);
  kv.set_double("counting.length_mm", cfg.length_mm);
  kv.set_double("counting.window_ps", cfg.window_ps);
  kv.set_double("counting.pairs_per_s_mw", cfg.pairs_per_s_mw);
  kv.set("counting.powers_mw", format_double_list(cfg.powers_mw));
  kv.set_double("sweep.lambda0_nm", cfg.sweep_lambda0_nm);
  kv.set_double("sweep.w_lo_um", cfg.sweep_w_lo_um);
  kv.set_double("sweep.w_hi_um", cfg.sweep_w_hi_um);
  kv.set("sweep.nw", std::to_string(cfg.sweep_nw));
  kv.set_double("sweep.g_lo_um", cfg.sweep_g_lo_um);
  kv.set_double("sweep.g_hi_um", cfg.sweep_g_hi_um);
  kv.set("sweep.ng", std::to_string(cfg.sweep_ng));
  kv.set_double("sweep.band_nm", cfg.sweep_band_nm);
  kv.set("sweep.band_points", std::to_string(cfg.sweep_band_points));
  return kv;
}

}  // namespace pairsplit
