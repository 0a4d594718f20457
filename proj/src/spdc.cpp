#include "pairsplit/spdc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairsplit/phase_sum.hpp"

namespace pairsplit {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

constexpr double DEGEN_LAMBDA = 1525.0 * nm;

}  // namespace

double default_bandwidth_omega() {
  return 60.0 * nm * 2.0 * PI * SPEED_OF_LIGHT / (DEGEN_LAMBDA * DEGEN_LAMBDA);
}

double default_dk_prime() {
  return 4.0 * SINC_HALF_POWER_X / (default_bandwidth_omega() * 2.0 * mm);
}

double SourceParams::dk_prime_effective() const {
  return dk_prime == 0.0 ? default_dk_prime() : dk_prime;
}

std::vector<std::string> SourceParams::validate() const {
  std::vector<std::string> out;
  std::ostringstream os;
  if (!(l_gen > 0.0)) {
    os << "source.l_gen: must be > 0, got " << l_gen;
    out.push_back(os.str());
    os.str("");
  }
  if (!std::isfinite(dk_prime) || !std::isfinite(gvd) ||
      !std::isfinite(delta))
    out.push_back("source: dk_prime, gvd, delta must be finite");
  if (!(pump_lambda > 0.0)) {
    os << "source.pump_lambda: must be > 0, got " << pump_lambda;
    out.push_back(os.str());
    os.str("");
  }
  return out;
}

DetuningGrid make_detuning_grid(int n, double span, double bandwidth) {
  if (n < 2) throw std::invalid_argument("detuning grid needs n >= 2");
  if (!(span > 0.0)) throw std::invalid_argument("detuning span must be > 0");
  if (bandwidth == 0.0) bandwidth = default_bandwidth_omega();
  DetuningGrid g;
  g.h = 2.0 * span * bandwidth / n;
  g.omega.resize(n);
  for (int k = 0; k < n; ++k) g.omega[k] = (k - n / 2 + 0.5) * g.h;
  return g;
}

double BiphotonState::norm() const {
  double s = 0.0;
  for (const auto& v : f) s += std::norm(v);
  return s * h;
}

double BiphotonState::lambda_signal(size_t k) const {
  return 2.0 * PI * SPEED_OF_LIGHT / (omega0 + omega[k]);
}

double BiphotonState::lambda_idler(size_t k) const {
  return 2.0 * PI * SPEED_OF_LIGHT / (omega0 - omega[k]);
}

double phase_mismatch_surrogate(const SourceParams& params, double detuning) {
  return params.delta + params.dk_prime_effective() * detuning +
         0.5 * params.gvd * detuning * detuning;
}

double phase_mismatch_solver(const SourceParams& params,
                             const LayerStack& stack,
                             const AlloyDispersion& disp, double w,
                             double detuning) {
  const double omega_p = 2.0 * PI * SPEED_OF_LIGHT / params.pump_lambda;
  const double omega0 = omega_p / 2.0;
  const double lam1 = 2.0 * PI * SPEED_OF_LIGHT / (omega0 + detuning);
  const double lam2 = 2.0 * PI * SPEED_OF_LIGHT / (omega0 - detuning);
  const double beta_pump =
      2.0 * PI * bragg_pump_index(stack, disp, params.pump_lambda) /
      params.pump_lambda;
  const double beta_te =
      2.0 * PI * single_guide_index(stack, disp, w, lam1, Pol::TE) / lam1;
  const double beta_tm =
      2.0 * PI * single_guide_index(stack, disp, w, lam2, Pol::TM) / lam2;
  return beta_pump - beta_te - beta_tm;
}

BiphotonState biphoton_amplitude_from(
    const std::function<double(double)>& mismatch, double l_gen,
    double pump_lambda, const DetuningGrid& grid, bool drop_phase) {
  if (!(l_gen > 0.0)) throw std::invalid_argument("l_gen must be > 0");
  BiphotonState st;
  st.omega_p = 2.0 * PI * SPEED_OF_LIGHT / pump_lambda;
  st.omega0 = st.omega_p / 2.0;
  st.omega = grid.omega;
  st.h = grid.h;
  st.f.resize(grid.omega.size());
  for (size_t k = 0; k < grid.omega.size(); ++k) {
    const double arg = mismatch(grid.omega[k]) * l_gen / 2.0;
    const double amp = sinc(arg);
    if (drop_phase) {
      st.f[k] = std::fabs(amp);
    } else {
      st.f[k] = amp * std::complex<double>(std::cos(arg), std::sin(arg));
    }
  }
  const double nrm = st.norm();
  if (!(nrm > 1e-300)) {
    std::ostringstream os;
    os << "biphoton amplitude vanished on the grid (span "
       << grid.omega.front() << " .. " << grid.omega.back()
       << " rad/s misses the phase-matching lobe)";
    throw std::runtime_error(os.str());
  }
  const double scale = 1.0 / std::sqrt(nrm);
  for (auto& v : st.f) v *= scale;
  return st;
}

BiphotonState biphoton_amplitude(const SourceParams& params,
                                 const DetuningGrid& grid, bool drop_phase) {
  return biphoton_amplitude_from(
      [&params](double om) { return phase_mismatch_surrogate(params, om); },
      params.l_gen, params.pump_lambda, grid, drop_phase);
}

double pm_pump_wavelength(double w) {
  if (!(w >= 1.0 * um && w <= 6.0 * um)) {
    std::ostringstream os;
    os << "phase-matching map calibrated for widths in [1, 6] um, got "
       << w / um << " um";
    throw std::invalid_argument(os.str());
  }
  // lambda(w) = lambda_inf + K / w^2, exact through both anchors
  const double w_um = w / um;
  const double lambda_inf_nm = 762.5 - 72.0 / 91.0;
  const double K = 1800.0 / 91.0;  // nm um^2
  return (lambda_inf_nm + K / (w_um * w_um)) * nm;
}

FilterResult apply_filter(const BiphotonState& state, double center,
                          double width) {
  if (!(width > 0.0)) throw std::invalid_argument("filter width must be > 0");
  FilterResult out;
  out.state = state;
  const double halfw = width / 2.0;
  for (size_t k = 0; k < state.f.size(); ++k) {
    const bool pass1 = std::fabs(state.lambda_signal(k) - center) <= halfw;
    const bool pass2 = std::fabs(state.lambda_idler(k) - center) <= halfw;
    if (!(pass1 && pass2)) out.state.f[k] = 0.0;
  }
  out.pair_transmission = out.state.norm();
  if (!(out.pair_transmission > 1e-12)) {
    std::ostringstream os;
    os << "filter (center " << center / nm << " nm, width " << width / nm
       << " nm) passes no pairs on this grid";
    throw std::runtime_error(os.str());
  }
  const double scale = 1.0 / std::sqrt(out.pair_transmission);
  for (auto& v : out.state.f) v *= scale;
  return out;
}

double spectral_fwhm(const BiphotonState& state) {
  const size_t n = state.f.size();
  double peak = 0.0;
  for (const auto& v : state.f) peak = std::max(peak, std::norm(v));
  if (!(peak > 0.0)) throw std::runtime_error("empty state");
  const double half = peak / 2.0;
  size_t first = n, last = 0;
  for (size_t k = 0; k < n; ++k) {
    if (std::norm(state.f[k]) >= half) {
      if (first == n) first = k;
      last = k;
    }
  }
  return std::fabs(state.lambda_signal(last) - state.lambda_signal(first));
}

double intensity_fourier_width(const BiphotonState& state) {
  const size_t n = state.f.size();
  std::vector<double> ab2(n);
  for (size_t k = 0; k < n; ++k) ab2[k] = std::norm(state.f[k]);
  auto absG = [&](double tau) {
    return std::abs(phased_sum(ab2.data(), n, state.omega.front(), state.h,
                               -2.0 * tau)) *
           state.h;
  };
  const double g0 = absG(0.0);
  const double half = g0 / 2.0;
  const int npts = 120001;
  const double t_max = 3.0 * ps;
  double prev_t = 0.0, prev_g = g0;
  for (int i = 1; i < npts; ++i) {
    const double t = t_max * i / (npts - 1);
    const double g = absG(t);
    if (g < half) {
      const double tc = prev_t + (half - prev_g) / (g - prev_g) * (t - prev_t);
      return 2.0 * tc;
    }
    prev_t = t;
    prev_g = g;
  }
  throw std::runtime_error("transform width exceeds the 3 ps search window");
}

}  // namespace pairsplit
