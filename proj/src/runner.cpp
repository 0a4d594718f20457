#include "pairsplit/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "pairsplit/counting.hpp"
#include "pairsplit/coupler.hpp"
#include "pairsplit/csv.hpp"
#include "pairsplit/hom.hpp"
#include "pairsplit/layer_stack.hpp"
#include "pairsplit/materials.hpp"
#include "pairsplit/spdc.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

LayerStack load_stack(const RunConfig& cfg) {
  LayerStack stack = cfg.stack_file.empty() ? LayerStack::builtin()
                                            : LayerStack::load(cfg.stack_file);
  stack.require_valid();
  return stack;
}

// pump wavelength and asymmetry offset resolved to concrete numbers
SourceParams prepare_source(const RunConfig& cfg, KvFile& summary) {
  SourceParams s = cfg.make_source();
  if (cfg.pump_source == "width")
    s.pump_lambda = pm_pump_wavelength(cfg.width_um * um);
  if (cfg.asymmetry == "target_v")
    s.delta = calibrate_asymmetry(cfg.target_v, s);
  summary.set_double("source.pump_nm", s.pump_lambda / nm);
  summary.set_double("source.delta", s.delta);
  return s;
}

BiphotonState prepare_state(const RunConfig& cfg, const SourceParams& s,
                            KvFile& summary) {
  const DetuningGrid grid =
      make_detuning_grid(cfg.detuning_points, cfg.detuning_span);
  BiphotonState state = biphoton_amplitude(s, grid, cfg.drop_phase);
  if (cfg.filter_enabled) {
    FilterResult fr = apply_filter(state, cfg.filter_center_nm * nm,
                                   cfg.filter_width_nm * nm);
    summary.set_double("filter.pair_transmission", fr.pair_transmission);
    state = std::move(fr.state);
  }
  return state;
}

SplittingFunctions prepare_splitting(const RunConfig& cfg,
                                     const BiphotonState& state,
                                     KvFile& summary) {
  if (!cfg.splitting_file.empty()) {
    const SplittingSpectrum sp = read_splitting_csv(cfg.splitting_file);
    summary.set("splitting.source", cfg.splitting_file);
    return SplittingFunctions::from_table(sp.lambda, sp.s_te, sp.s_tm);
  }
  // solve the configured structure across the state support, with margin so
  // the edge bins stay inside the table
  const double om_max =
      std::max(std::abs(state.omega.front()), std::abs(state.omega.back()));
  const double w_lo = state.omega0 - 1.01 * om_max;
  const double w_hi = state.omega0 + 1.01 * om_max;
  const double lam_lo = 2.0 * PI * SPEED_OF_LIGHT / w_hi;
  const double lam_hi = 2.0 * PI * SPEED_OF_LIGHT / w_lo;
  std::vector<double> lambda(cfg.lambda_points);
  const double step = (lam_hi - lam_lo) / (cfg.lambda_points - 1);
  for (int i = 0; i < cfg.lambda_points; ++i) lambda[i] = lam_lo + i * step;
  lambda.back() = lam_hi;

  const AlloyDispersion disp = AlloyDispersion::builtin();
  const LayerStack stack = load_stack(cfg);
  const SplittingSpectrum sp =
      splitting_spectrum(stack, disp, cfg.make_geometry(), lambda);
  summary.set("splitting.source", "mode solver");
  return SplittingFunctions::from_table(sp.lambda, sp.s_te, sp.s_tm);
}

void write_state_csv(const std::string& path, const BiphotonState& state,
                     RunResult& res) {
  auto out = open_out(path);
  out << "detuning_rad_s,wavelength_signal_nm,re_f,im_f,abs2_f\n";
  char buf[160];
  for (std::size_t k = 0; k < state.f.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.9e,%.6f,%.12e,%.12e,%.12e\n",
                  state.omega[k], state.lambda_signal(k) / nm,
                  state.f[k].real(), state.f[k].imag(), std::norm(state.f[k]));
    out << buf;
  }
  res.files.push_back(path);
}

void write_hom_csv(const std::string& path, const HomInterferogram& ig,
                   RunResult& res) {
  auto out = open_out(path);
  out << "tau_fs,p_sep,p_bunch,p_exp\n";
  char buf[160];
  for (std::size_t i = 0; i < ig.tau.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9f,%.12e,%.12e,%.12e\n", ig.tau[i] / fs,
                  ig.p_sep[i], ig.p_bunch[i], ig.p_exp[i]);
    out << buf;
  }
  res.files.push_back(path);
}

void write_probabilities_csv(const std::string& path,
                             const ConfigurationProbabilities& p,
                             RunResult& res) {
  auto out = open_out(path);
  out << "configuration,probability\n";
  char buf[96];
  const std::pair<const char*, double> rows[] = {
      {"split", p.split},
      {"both_a", p.both_a},
      {"both_b", p.both_b},
      {"swapped", p.swapped},
  };
  for (const auto& [label, v] : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.12e\n", label, v);
    out << buf;
  }
  res.files.push_back(path);
}

// least-squares slope of log10(y) against log10(x), positive entries only
double loglog_slope(const std::vector<double>& x,
                    const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log10(x[i]), ly = std::log10(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::runtime_error("log-log fit needs >= 2 positive rows");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void run_splitting(const RunConfig& cfg, const std::string& dir,
                   RunResult& res) {
  const AlloyDispersion disp = AlloyDispersion::builtin();
  const LayerStack stack = load_stack(cfg);
  const CouplerGeometry geo = cfg.make_geometry();

  std::vector<double> lambda(cfg.lambda_points);
  const double lo = cfg.lambda_min_nm * nm, hi = cfg.lambda_max_nm * nm;
  const double step = (hi - lo) / (cfg.lambda_points - 1);
  for (int i = 0; i < cfg.lambda_points; ++i) lambda[i] = lo + i * step;
  lambda.back() = hi;

  const SplittingSpectrum sp = splitting_spectrum(stack, disp, geo, lambda);
  res.summary.set("splitting.source", "mode solver");
  const std::string path = dir + "splitting.csv";
  write_splitting_csv(path, sp);
  res.files.push_back(path);

  const double lam_c = 0.5 * (lo + hi);
  const auto provider = eim_beat_provider(stack, disp, geo.etch_depth);
  double lc_te = 0.0, lc_tm = 0.0;
  if (provider(geo.w, geo.g, lam_c, lc_te, lc_tm)) {
    res.summary.set_double("beat.lambda_nm", lam_c / nm);
    res.summary.set_double("beat.lc_te_um", lc_te / um);
    res.summary.set_double("beat.lc_tm_um", lc_tm / um);
    res.summary.set_double("beat.ratio", lc_te / lc_tm);
    res.summary.set_double("beat.design_l_um", 4.0 * lc_te / um);
  }
}

void run_sweep(const RunConfig& cfg, const std::string& dir, RunResult& res) {
  const AlloyDispersion disp = AlloyDispersion::builtin();
  const LayerStack stack = load_stack(cfg);
  const CouplerGeometry geo = cfg.make_geometry();
  const auto provider = eim_beat_provider(stack, disp, geo.etch_depth);

  std::vector<SweepRow> surface;
  const DesignPoint best = design_sweep(provider, cfg.make_sweep(), &surface);

  const std::string path = dir + "sweep_surface.csv";
  auto out = open_out(path);
  out << "w_um,g_um,s_te,s_tm,ratio\n";
  char buf[128];
  for (const auto& row : surface) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.9f,%.9f,%.9f\n", row.w / um,
                  row.g / um, row.s_te, row.s_tm, row.ratio);
    out << buf;
  }
  res.files.push_back(path);

  res.summary.set_double("best.w_um", best.w / um);
  res.summary.set_double("best.g_um", best.g / um);
  res.summary.set_double("best.l_um", best.L / um);
  res.summary.set_double("best.objective", best.objective);
  res.summary.set_double("best.ratio", best.ratio);
  res.summary.set_double("best.ratio_residual", best.ratio_residual);
}

void run_source(const RunConfig& cfg, const std::string& dir, RunResult& res) {
  const SourceParams s = prepare_source(cfg, res.summary);
  const BiphotonState state = prepare_state(cfg, s, res.summary);
  write_state_csv(dir + "state.csv", state, res);
  res.summary.set_double("state.norm", state.norm());
  res.summary.set_double("state.spectral_fwhm_nm", spectral_fwhm(state) / nm);
  res.summary.set_double("state.fourier_width_fs",
                         intensity_fourier_width(state) / fs);
}

void run_hom(const RunConfig& cfg, const std::string& dir, RunResult& res) {
  const SourceParams s = prepare_source(cfg, res.summary);
  const BiphotonState state = prepare_state(cfg, s, res.summary);
  const SplittingFunctions sf = prepare_splitting(cfg, state, res.summary);

  const std::vector<double> tau =
      make_delay_grid(cfg.delay_span_fs * fs, cfg.delay_points);
  HomInterferogram ig =
      coincidence_probability(state, sf, tau, cfg.window_fs * fs);
  analyze(ig);

  write_state_csv(dir + "state.csv", state, res);
  write_hom_csv(dir + "hom.csv", ig, res);
  const ConfigurationProbabilities probs =
      four_config_probabilities(state, sf);
  write_probabilities_csv(dir + "config_probabilities.csv", probs, res);

  res.summary.set_double("hom.visibility", ig.visibility);
  res.summary.set_double("hom.c_ref", ig.c_ref);
  res.summary.set_double("hom.c_min", ig.c_min);
  res.summary.set_double("hom.fwhm_fs", ig.fwhm / fs);
  res.summary.set_double("configs.split", probs.split);
  res.summary.set_double("configs.both_a", probs.both_a);
  res.summary.set_double("configs.both_b", probs.both_b);
  res.summary.set_double("configs.swapped", probs.swapped);
}

void run_configs(const RunConfig& cfg, const std::string& dir,
                 RunResult& res) {
  const SourceParams s = prepare_source(cfg, res.summary);
  const BiphotonState state = prepare_state(cfg, s, res.summary);
  const SplittingFunctions sf = prepare_splitting(cfg, state, res.summary);
  const ConfigurationProbabilities probs =
      four_config_probabilities(state, sf);
  write_probabilities_csv(dir + "config_probabilities.csv", probs, res);
  res.summary.set_double("configs.split", probs.split);
  res.summary.set_double("configs.both_a", probs.both_a);
  res.summary.set_double("configs.both_b", probs.both_b);
  res.summary.set_double("configs.swapped", probs.swapped);
  res.summary.set_double("configs.sum", probs.sum());
}

void run_counts(const RunConfig& cfg, const std::string& dir,
                RunResult& res) {
  const EfficiencyBudget budget = cfg.make_budget();
  const std::vector<CountRow> rows = count_rates(cfg.powers_mw, budget);

  const std::string path = dir + "counts.csv";
  auto out = open_out(path);
  out << "pump_mw,singles_a_hz,singles_b_hz,coincidences_hz,accidentals_hz,"
         "car\n";
  char buf[192];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9e,%.9e,%.9e,%.9e,%s\n", r.pump_mw,
                  r.singles_a, r.singles_b, r.coincidences, r.accidentals,
                  r.car_defined ? format_double(r.car).c_str() : "nan");
    out << buf;
  }
  res.files.push_back(path);

  std::vector<double> p, singles, coinc, acc, car;
  for (const auto& r : rows) {
    p.push_back(r.pump_mw);
    singles.push_back(r.singles_a);
    coinc.push_back(r.coincidences);
    acc.push_back(r.accidentals);
    car.push_back(r.car_defined ? r.car : 0.0);
  }
  res.summary.set_double("slope.singles", loglog_slope(p, singles));
  res.summary.set_double("slope.coincidences", loglog_slope(p, coinc));
  res.summary.set_double("slope.accidentals", loglog_slope(p, acc));
  res.summary.set_double("slope.car", loglog_slope(p, car));
}

}  // namespace

RunResult run_scenario(const RunConfig& cfg, const std::string& out_dir,
                       unsigned long seed) {
  cfg.require_valid();
  std::filesystem::create_directories(out_dir);
  std::string dir = out_dir;
  if (!dir.empty() && dir.back() != '/') dir += '/';

  RunResult res;
  res.summary.set("scenario", cfg.scenario);
  res.summary.set("seed", std::to_string(seed));

  if (cfg.scenario == "splitting")
    run_splitting(cfg, dir, res);
  else if (cfg.scenario == "sweep")
    run_sweep(cfg, dir, res);
  else if (cfg.scenario == "source")
    run_source(cfg, dir, res);
  else if (cfg.scenario == "hom")
    run_hom(cfg, dir, res);
  else if (cfg.scenario == "configs")
    run_configs(cfg, dir, res);
  else if (cfg.scenario == "counts")
    run_counts(cfg, dir, res);
  else
    throw std::invalid_argument("unknown scenario '" + cfg.scenario + "'");

  const std::string cfg_path = dir + "config_used.cfg";
  serialize_run_config(cfg).save(cfg_path);
  res.files.push_back(cfg_path);

  const std::string summary_path = dir + "summary.txt";
  res.summary.save(summary_path);
  res.files.push_back(summary_path);
  return res;
}

}  // namespace pairsplit
