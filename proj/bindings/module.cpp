// python surface: thin wrappers over the core library, SI units unless a
// suffix says otherwise
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "pairsplit/config.hpp"
#include "pairsplit/counting.hpp"
#include "pairsplit/coupler.hpp"
#include "pairsplit/hom.hpp"
#include "pairsplit/materials.hpp"
#include "pairsplit/runner.hpp"
#include "pairsplit/spdc.hpp"
#include "pairsplit/units.hpp"

namespace py = pybind11;
using namespace pairsplit;

namespace {

py::dict probabilities_dict(const ConfigurationProbabilities& p) {
  py::dict d;
  d["split"] = p.split;
  d["both_a"] = p.both_a;
  d["both_b"] = p.both_b;
  d["swapped"] = p.swapped;
  d["sum"] = p.sum();
  return d;
}

py::dict interferogram_dict(HomInterferogram ig) {
  analyze(ig);
  std::vector<double> tau_fs(ig.tau.size());
  for (std::size_t i = 0; i < ig.tau.size(); ++i) tau_fs[i] = ig.tau[i] / fs;
  py::dict d;
  d["tau_fs"] = tau_fs;
  d["p_sep"] = ig.p_sep;
  d["p_bunch"] = ig.p_bunch;
  d["p_exp"] = ig.p_exp;
  d["visibility"] = ig.visibility;
  d["fwhm_fs"] = ig.fwhm / fs;
  d["c_ref"] = ig.c_ref;
  d["c_min"] = ig.c_min;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pair-source and polarization-splitter chip models";

  m.def(
      "alloy_index",
      [](double x, double lambda_nm) {
        return refractive_index(x, lambda_nm * nm);
      },
      py::arg("x"), py::arg("lambda_nm"),
      "AlGaAs refractive index at aluminum fraction x");

  m.def(
      "reference_splitting",
      [](double lambda_nm) { return reference_device_splitting(lambda_nm * nm); },
      py::arg("lambda_nm"),
      "(s_TE, s_TM) of the fitted reference splitter device");

  m.def("splitting_ratios", &splitting_ratios, py::arg("l"), py::arg("lc_te"),
        py::arg("lc_tm"),
        "(s_TE, s_TM) after length l; any consistent length unit");

  m.def("beat_length", &beat_length, py::arg("n_s"), py::arg("n_as"),
        py::arg("lambda"));

  m.def(
      "pm_pump_wavelength_nm",
      [](double w_um) { return pm_pump_wavelength(w_um * um) / nm; },
      py::arg("w_um"), "phase-matched pump wavelength of a guide of width w");

  py::class_<SourceParams>(m, "SourceParams")
      .def(py::init<>())
      .def_readwrite("l_gen", &SourceParams::l_gen)
      .def_readwrite("dk_prime", &SourceParams::dk_prime)
      .def_readwrite("gvd", &SourceParams::gvd)
      .def_readwrite("delta", &SourceParams::delta)
      .def_readwrite("pump_lambda", &SourceParams::pump_lambda)
      .def_readwrite("pairs_per_s_mw", &SourceParams::pairs_per_s_mw);

  py::class_<BiphotonState>(m, "BiphotonState")
      .def_readonly("omega_p", &BiphotonState::omega_p)
      .def_readonly("omega0", &BiphotonState::omega0)
      .def_readonly("omega", &BiphotonState::omega)
      .def_readonly("h", &BiphotonState::h)
      .def("norm", &BiphotonState::norm)
      .def_property_readonly("abs2", [](const BiphotonState& s) {
        std::vector<double> out(s.f.size());
        for (std::size_t k = 0; k < s.f.size(); ++k) out[k] = std::norm(s.f[k]);
        return out;
      });

  m.def(
      "biphoton_state",
      [](const SourceParams& p, int n, double span, bool drop_phase) {
        return biphoton_amplitude(p, make_detuning_grid(n, span), drop_phase);
      },
      py::arg("params"), py::arg("n") = 4096, py::arg("span") = 3.0,
      py::arg("drop_phase") = false);

  m.def(
      "spectral_fwhm_nm",
      [](const BiphotonState& s) { return spectral_fwhm(s) / nm; },
      py::arg("state"));

  m.def(
      "apply_filter",
      [](const BiphotonState& s, double center_nm, double width_nm) {
        FilterResult fr = apply_filter(s, center_nm * nm, width_nm * nm);
        return py::make_tuple(std::move(fr.state), fr.pair_transmission);
      },
      py::arg("state"), py::arg("center_nm"), py::arg("width_nm"),
      "(filtered state, pair transmission)");

  py::class_<SplittingFunctions>(m, "SplittingFunctions")
      .def_static("constant", &SplittingFunctions::constant, py::arg("s_h"),
                  py::arg("s_v"))
      .def_static(
          "from_table",
          [](std::vector<double> lambda_nm, const std::vector<double>& s_te,
             const std::vector<double>& s_tm) {
            for (auto& l : lambda_nm) l *= nm;
            return SplittingFunctions::from_table(lambda_nm, s_te, s_tm);
          },
          py::arg("lambda_nm"), py::arg("s_te"), py::arg("s_tm"))
      .def("s_h", &SplittingFunctions::s_h, py::arg("omega"))
      .def("s_v", &SplittingFunctions::s_v, py::arg("omega"));

  m.def(
      "four_config_probabilities",
      [](const BiphotonState& st, const SplittingFunctions& sf) {
        return probabilities_dict(four_config_probabilities(st, sf));
      },
      py::arg("state"), py::arg("splitting"));

  m.def(
      "hom_curve",
      [](const BiphotonState& st, const SplittingFunctions& sf,
         double span_fs, int npts, double window_fs) {
        return interferogram_dict(coincidence_probability(
            st, sf, make_delay_grid(span_fs * fs, npts), window_fs * fs));
      },
      py::arg("state"), py::arg("splitting"), py::arg("span_fs") = 500.0,
      py::arg("npts") = 4001, py::arg("window_fs") = 30.0);

  m.def(
      "polarized_curve",
      [](const BiphotonState& st, const SplittingFunctions& sf,
         double span_fs, int npts) {
        return interferogram_dict(
            with_polarizers(st, sf, make_delay_grid(span_fs * fs, npts)));
      },
      py::arg("state"), py::arg("splitting"), py::arg("span_fs") = 500.0,
      py::arg("npts") = 4001);

  m.def("calibrate_asymmetry", &calibrate_asymmetry, py::arg("target_v"),
        py::arg("params"));

  py::class_<EfficiencyBudget>(m, "EfficiencyBudget")
      .def(py::init<>())
      .def_readwrite("eta", &EfficiencyBudget::eta)
      .def_readwrite("eta_det", &EfficiencyBudget::eta_det)
      .def_readwrite("alpha_te", &EfficiencyBudget::alpha_te)
      .def_readwrite("alpha_tm", &EfficiencyBudget::alpha_tm)
      .def_readwrite("length", &EfficiencyBudget::length)
      .def_readwrite("window", &EfficiencyBudget::window)
      .def_readwrite("pairs_per_s_mw", &EfficiencyBudget::pairs_per_s_mw);

  m.def(
      "count_rates",
      [](const std::vector<double>& powers_mw, const EfficiencyBudget& b) {
        py::list rows;
        for (const CountRow& r : count_rates(powers_mw, b)) {
          py::dict d;
          d["pump_mw"] = r.pump_mw;
          d["singles_a"] = r.singles_a;
          d["singles_b"] = r.singles_b;
          d["coincidences"] = r.coincidences;
          d["accidentals"] = r.accidentals;
          d["car"] = r.car_defined ? py::cast(r.car) : py::none();
          rows.append(d);
        }
        return rows;
      },
      py::arg("powers_mw"), py::arg("budget"));

  m.def(
      "run_config_file",
      [](const std::string& path, const std::string& out_dir,
         const std::string& scenario, unsigned long seed) {
        RunConfig cfg = load_run_config(path);
        if (!scenario.empty()) cfg.scenario = scenario;
        const RunResult res = run_scenario(cfg, out_dir, seed);
        py::dict summary;
        for (const auto& e : res.summary.entries)
          summary[py::str(e.first)] = e.second;
        py::dict d;
        d["summary"] = summary;
        d["files"] = res.files;
        return d;
      },
      py::arg("path"), py::arg("out_dir"), py::arg("scenario") = "",
      py::arg("seed") = 0,
      "load a config file, execute its scenario, return summary + files");
}
