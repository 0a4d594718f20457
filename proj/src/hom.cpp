#include "pairsplit/hom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "pairsplit/phase_sum.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit {

namespace {

using cplx = std::complex<double>;

void check_ratio(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << v << " lies outside [0, 1]";
    throw std::invalid_argument(os.str());
  }
}

// centered boxcar mean, edge-truncated, via prefix sums
std::vector<double> boxcar_mean(const std::vector<double>& y, long wlen) {
  const long n = static_cast<long>(y.size());
  const long pad = wlen / 2;
  std::vector<double> cs(n + 1, 0.0);
  for (long i = 0; i < n; ++i) cs[i + 1] = cs[i] + y[i];
  std::vector<double> out(n);
  for (long i = 0; i < n; ++i) {
    const long a = std::max<long>(0, i - pad);
    const long b = std::min<long>(n, i + pad + 1);
    out[i] = (cs[b] - cs[a]) / static_cast<double>(b - a);
  }
  return out;
}

long averaging_length(const std::vector<double>& tau, double window) {
  if (tau.size() < 2 || window <= 0.0) return 1;
  const double dt = tau[1] - tau[0];
  long wlen = std::lround(window / dt);
  if (wlen % 2 == 0) wlen += 1;
  return std::max<long>(wlen, 1);
}

struct CurveStats {
  double plateau_var;
  double c_ref;
  double c_min;
  double v;
  double fwhm;
};

// reference level from the outer 10% of samples at each end, depth-based
// half-width between the outermost half-depth crossings
CurveStats curve_stats(const std::vector<double>& tau,
                       const std::vector<double>& p) {
  const std::size_t n = p.size();
  if (n < 4 || tau.size() != n)
    throw std::invalid_argument("interferogram too short to analyze");
  const std::size_t m = std::max<std::size_t>(2, n / 10);

  double outer_lo = p[0], outer_hi = p[0], outer_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    outer_sum += p[i];
    outer_lo = std::min(outer_lo, p[i]);
    outer_hi = std::max(outer_hi, p[i]);
  }
  for (std::size_t i = n - m; i < n; ++i) {
    outer_sum += p[i];
    outer_lo = std::min(outer_lo, p[i]);
    outer_hi = std::max(outer_hi, p[i]);
  }
  CurveStats st;
  st.c_ref = outer_sum / static_cast<double>(2 * m);
  st.plateau_var = (outer_hi - outer_lo) / st.c_ref;
  st.c_min = *std::min_element(p.begin(), p.end());
  st.v = (st.c_ref - st.c_min) / st.c_ref;

  const double half = 0.5 * (st.c_ref - st.c_min);
  std::size_t i0 = n, i1 = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (st.c_ref - p[i] >= half) {
      if (i0 == n) i0 = i;
      i1 = i;
    }
  }
  if (i0 == n) {
    st.fwhm = 0.0;
    return st;
  }
  auto depth = [&](std::size_t i) { return st.c_ref - p[i]; };
  double t_lo, t_hi;
  if (i0 == 0) {
    t_lo = tau[0];
  } else {
    t_lo = tau[i0 - 1] + (half - depth(i0 - 1)) / (depth(i0) - depth(i0 - 1)) *
                             (tau[i0] - tau[i0 - 1]);
  }
  if (i1 == n - 1) {
    t_hi = tau[n - 1];
  } else {
    t_hi = tau[i1] + (half - depth(i1)) / (depth(i1 + 1) - depth(i1)) *
                         (tau[i1 + 1] - tau[i1]);
  }
  st.fwhm = t_hi - t_lo;
  return st;
}

void require_plateau(const CurveStats& st) {
  if (!(st.plateau_var < 0.01)) {
    std::ostringstream os;
    os << "coincidence baseline varies by " << st.plateau_var * 100.0
       << "% across the outer delay samples (limit 1%); the delay span is "
          "too short, extend it until the curve flattens";
    throw std::runtime_error(os.str());
  }
}

void check_state(const BiphotonState& state) {
  const std::size_t n = state.f.size();
  if (n < 2 || state.omega.size() != n)
    throw std::invalid_argument("biphoton state is empty or inconsistent");
  if (!(state.h > 0.0))
    throw std::invalid_argument("biphoton state has a nonpositive grid step");
}

struct BranchAmplitudes {
  cplx x1, y1, x2, y2, a, b;
};

// splitting ratios sampled at the signal/idler frequencies of bin k and of
// its frequency-swapped partner
BranchAmplitudes branch_amplitudes(const SplittingFunctions& s, double w_hi,
                                   double w_lo, cplx f, cplx fsw) {
  const double sh1 = s.s_h(w_hi);
  const double sv2 = s.s_v(w_lo);
  const double sh2 = s.s_h(w_lo);
  const double sv1 = s.s_v(w_hi);
  check_ratio(sh1, "s_h");
  check_ratio(sv2, "s_v");
  check_ratio(sh2, "s_h");
  check_ratio(sv1, "s_v");
  BranchAmplitudes r;
  r.x1 = f * std::sqrt(sh1 * sv2);
  r.y1 = fsw * std::sqrt(sh2 * sv1);
  r.x2 = f * std::sqrt((1.0 - sh1) * (1.0 - sv2));
  r.y2 = fsw * std::sqrt((1.0 - sh2) * (1.0 - sv1));
  r.a = f * std::sqrt(sh1 * (1.0 - sv2));
  r.b = fsw * std::sqrt((1.0 - sh2) * sv1);
  return r;
}

}  // namespace

SplittingFunctions SplittingFunctions::constant(double s_h, double s_v) {
  check_ratio(s_h, "s_h");
  check_ratio(s_v, "s_v");
  SplittingFunctions s;
  s.kind_ = Kind::Constant;
  s.const_h_ = s_h;
  s.const_v_ = s_v;
  return s;
}

SplittingFunctions SplittingFunctions::from_table(
    const std::vector<double>& lambda, const std::vector<double>& s_te,
    const std::vector<double>& s_tm) {
  const std::size_t n = lambda.size();
  if (n < 2 || s_te.size() != n || s_tm.size() != n)
    throw std::invalid_argument(
        "splitting table needs >= 2 rows of equal length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambda[i] > 0.0))
      throw std::invalid_argument("splitting table wavelength must be > 0");
    if (i > 0 && !(lambda[i] > lambda[i - 1]))
      throw std::invalid_argument(
          "splitting table wavelengths must be strictly increasing");
    check_ratio(s_te[i], "s_te");
    check_ratio(s_tm[i], "s_tm");
  }
  SplittingFunctions s;
  s.kind_ = Kind::Table;
  s.omega_.resize(n);
  s.sh_.resize(n);
  s.sv_.resize(n);
  // ascending in frequency, so reverse the wavelength order
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    s.omega_[i] = 2.0 * PI * SPEED_OF_LIGHT / lambda[j];
    s.sh_[i] = s_te[j];
    s.sv_[i] = s_tm[j];
  }
  return s;
}

SplittingFunctions SplittingFunctions::from_model(Model model) {
  if (!model) throw std::invalid_argument("splitting model is empty");
  SplittingFunctions s;
  s.kind_ = Kind::Functional;
  s.model_ = std::move(model);
  return s;
}

double SplittingFunctions::interp(const std::vector<double>& ys,
                                  double omega) const {
  if (omega < omega_.front() || omega > omega_.back()) {
    const double lam_nm = 2.0 * PI * SPEED_OF_LIGHT / omega / nm;
    const double lo_nm = 2.0 * PI * SPEED_OF_LIGHT / omega_.back() / nm;
    const double hi_nm = 2.0 * PI * SPEED_OF_LIGHT / omega_.front() / nm;
    std::ostringstream os;
    os << "splitting table covers " << lo_nm << ".." << hi_nm << " nm but "
       << lam_nm << " nm was requested; extend the table";
    throw std::out_of_range(os.str());
  }
  const auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
  std::size_t i = static_cast<std::size_t>(it - omega_.begin());
  if (i == 0) i = 1;
  if (i == omega_.size()) i = omega_.size() - 1;
  const double t = (omega - omega_[i - 1]) / (omega_[i] - omega_[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

double SplittingFunctions::s_h(double omega) const {
  switch (kind_) {
    case Kind::Constant:
      return const_h_;
    case Kind::Table:
      return interp(sh_, omega);
    case Kind::Functional:
      if (!(omega > 0.0))
        throw std::invalid_argument("splitting lookup needs omega > 0");
      return model_(2.0 * PI * SPEED_OF_LIGHT / omega).first;
  }
  throw std::logic_error("unreachable");
}

double SplittingFunctions::s_v(double omega) const {
  switch (kind_) {
    case Kind::Constant:
      return const_v_;
    case Kind::Table:
      return interp(sv_, omega);
    case Kind::Functional:
      if (!(omega > 0.0))
        throw std::invalid_argument("splitting lookup needs omega > 0");
      return model_(2.0 * PI * SPEED_OF_LIGHT / omega).second;
  }
  throw std::logic_error("unreachable");
}

bool SplittingFunctions::covers(double omega) const {
  if (kind_ != Kind::Table) return omega > 0.0;
  return omega >= omega_.front() && omega <= omega_.back();
}

std::vector<double> make_delay_grid(double span, int npts) {
  if (!(span > 0.0)) throw std::invalid_argument("delay span must be > 0");
  if (npts < 2) throw std::invalid_argument("delay grid needs >= 2 points");
  std::vector<double> tau(npts);
  const double step = 2.0 * span / (npts - 1);
  for (int i = 0; i < npts; ++i) tau[i] = -span + i * step;
  tau.back() = span;
  return tau;
}

HomInterferogram coincidence_probability(const BiphotonState& state,
                                         const SplittingFunctions& s,
                                         const std::vector<double>& tau,
                                         double window) {
  check_state(state);
  if (tau.empty()) throw std::invalid_argument("empty delay grid");
  if (!(window >= 0.0))
    throw std::invalid_argument("averaging window must be >= 0");

  const std::size_t n = state.f.size();
  std::vector<cplx> msep(n);
  double c_sep = 0.0, dc_bun = 0.0;
  cplx ab(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double om = state.omega[k];
    const auto br =
        branch_amplitudes(s, state.omega0 + om, state.omega0 - om, state.f[k],
                          state.f[n - 1 - k]);
    c_sep += std::norm(br.x1) + std::norm(br.y1) + std::norm(br.x2) +
             std::norm(br.y2);
    dc_bun += std::norm(br.a) + std::norm(br.b);
    ab += br.a * std::conj(br.b);
    msep[k] = br.x1 * std::conj(br.y1) + br.x2 * std::conj(br.y2);
  }
  c_sep *= 0.25 * state.h;
  dc_bun *= 0.5 * state.h;
  ab *= state.h;

  HomInterferogram ig;
  ig.tau = tau;
  ig.window = window;
  const std::size_t nt = tau.size();
  ig.p_sep.resize(nt);
  ig.p_bunch.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const double t = tau[i];
    const cplx cross =
        phased_sum(msep.data(), n, state.omega.front(), state.h, -2.0 * t);
    ig.p_sep[i] = c_sep - 0.5 * state.h * cross.real();
    // Re(e^{-i omega_p t} ab)
    const double c = std::cos(state.omega_p * t);
    const double si = std::sin(state.omega_p * t);
    ig.p_bunch[i] = dc_bun - (c * ab.real() + si * ab.imag());
  }

  const long wlen = averaging_length(tau, window);
  std::vector<double> averaged = boxcar_mean(ig.p_bunch, wlen);
  ig.p_exp.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) ig.p_exp[i] = ig.p_sep[i] + averaged[i];
  return ig;
}

HomInterferogram with_polarizers(const BiphotonState& state,
                                 const SplittingFunctions& s,
                                 const std::vector<double>& tau) {
  check_state(state);
  if (tau.empty()) throw std::invalid_argument("empty delay grid");

  const std::size_t n = state.f.size();
  std::vector<cplx> m(n);
  double p_split = 0.0, cs = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double om = state.omega[k];
    const double sh1 = s.s_h(state.omega0 + om);
    const double sv2 = s.s_v(state.omega0 - om);
    const double sh2 = s.s_h(state.omega0 - om);
    const double sv1 = s.s_v(state.omega0 + om);
    check_ratio(sh1, "s_h");
    check_ratio(sv2, "s_v");
    check_ratio(sh2, "s_h");
    check_ratio(sv1, "s_v");
    const cplx x = state.f[k] * std::sqrt(sh1 * sv2);
    const cplx y = state.f[n - 1 - k] * std::sqrt(sh2 * sv1);
    p_split += std::norm(state.f[k]) * sh1 * sv2;
    cs += std::norm(x) + std::norm(y);
    m[k] = x * std::conj(y);
  }
  p_split *= state.h;
  cs *= 0.25 * state.h;
  if (p_split < 1e-9)
    throw std::runtime_error(
        "polarized projection has vanishing pair probability");

  HomInterferogram ig;
  ig.tau = tau;
  ig.window = 0.0;
  const std::size_t nt = tau.size();
  ig.p_sep.resize(nt);
  ig.p_bunch.assign(nt, 0.0);
  for (std::size_t i = 0; i < nt; ++i) {
    const cplx cross =
        phased_sum(m.data(), n, state.omega.front(), state.h, -2.0 * tau[i]);
    ig.p_sep[i] = (cs - 0.5 * state.h * cross.real()) / p_split;
  }
  ig.p_exp = ig.p_sep;
  return ig;
}

double visibility(const HomInterferogram& ig) {
  const CurveStats st = curve_stats(ig.tau, ig.p_exp);
  require_plateau(st);
  return st.v;
}

double dip_width(const HomInterferogram& ig) {
  const CurveStats st = curve_stats(ig.tau, ig.p_exp);
  require_plateau(st);
  return st.fwhm;
}

void analyze(HomInterferogram& ig) {
  const CurveStats st = curve_stats(ig.tau, ig.p_exp);
  require_plateau(st);
  ig.c_ref = st.c_ref;
  ig.c_min = st.c_min;
  ig.visibility = st.v;
  ig.fwhm = st.fwhm;
  ig.analyzed = true;
}

double oscillation_period(const std::vector<double>& tau,
                          const std::vector<double>& p_bunch) {
  const std::size_t n = p_bunch.size();
  if (n < 3 || tau.size() != n)
    throw std::invalid_argument("oscillation grid too short");
  double mean = 0.0;
  for (double v : p_bunch) mean += v;
  mean /= static_cast<double>(n);
  auto sgn = [&](std::size_t i) {
    const double d = p_bunch[i] - mean;
    return (d > 0.0) - (d < 0.0);
  };
  std::vector<std::size_t> zc;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sgn(i) * sgn(i + 1) < 0) zc.push_back(i);
  if (zc.size() < 2)
    throw std::runtime_error(
        "fewer than two oscillation nodes in the delay window");
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < zc.size(); ++j)
    acc += (tau[zc[j + 1]] - tau[zc[j]]) * 2.0;
  return acc / static_cast<double>(zc.size() - 1);
}

double calibrate_asymmetry(double target_v, const SourceParams& base) {
  if (!(target_v > 0.5 && target_v <= 1.0))
    throw std::invalid_argument("target visibility must lie in (0.5, 1]");
  const auto issues = base.validate();
  if (!issues.empty()) throw std::invalid_argument(issues.front());

  const DetuningGrid grid = make_detuning_grid(4096, 3.0);
  const std::vector<double> tau = make_delay_grid(500.0 * fs, 4001);
  const SplittingFunctions ones = SplittingFunctions::constant(1.0, 1.0);

  // no plateau guard inside the search; the reference grids hold it by
  // construction at the returned value
  auto vis_of = [&](double delta) {
    SourceParams p = base;
    p.delta = delta;
    const BiphotonState st = biphoton_amplitude(p, grid, false);
    const HomInterferogram ig =
        coincidence_probability(st, ones, tau, 30.0 * fs);
    return curve_stats(ig.tau, ig.p_exp).v;
  };

  double lo = 0.0, hi = 3000.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (vis_of(mid) > target_v)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

HomInterferogram oracle_2d(const BiphotonState& state, double sigma_nu,
                           int n_nu, const SplittingFunctions& s,
                           const std::vector<double>& tau, double window) {
  check_state(state);
  if (tau.empty()) throw std::invalid_argument("empty delay grid");
  if (!(sigma_nu > 0.0))
    throw std::invalid_argument("pump bandwidth must be > 0");
  if (n_nu < 2) throw std::invalid_argument("pump grid needs >= 2 points");
  const std::size_t n = state.f.size();
  if (n > 256 || n_nu > 256)
    throw std::invalid_argument(
        "brute-force pump-envelope check is limited to 256 x 256 grids");

  const double hn = 8.0 * sigma_nu / n_nu;
  std::vector<double> nu(n_nu), alpha(n_nu);
  double anorm = 0.0;
  for (int i = 0; i < n_nu; ++i) {
    nu[i] = (i - 0.5 * n_nu + 0.5) * hn;
    alpha[i] = std::exp(-nu[i] * nu[i] / (4.0 * sigma_nu * sigma_nu));
    anorm += alpha[i] * alpha[i];
  }
  anorm = std::sqrt(anorm * hn);
  for (double& a : alpha) a /= anorm;

  const std::size_t total = static_cast<std::size_t>(n_nu) * n;
  std::vector<cplx> msep(total), mbun(total);
  double c_sep = 0.0, dc_bun = 0.0;
  for (int i = 0; i < n_nu; ++i) {
    const double w_half = 0.5 * (state.omega_p + nu[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double w1 = w_half + state.omega[j];
      const double w2 = w_half - state.omega[j];
      const auto br = branch_amplitudes(s, w1, w2, alpha[i] * state.f[j],
                                        alpha[i] * state.f[n - 1 - j]);
      c_sep += std::norm(br.x1) + std::norm(br.y1) + std::norm(br.x2) +
               std::norm(br.y2);
      dc_bun += std::norm(br.a) + std::norm(br.b);
      msep[i * n + j] = br.x1 * std::conj(br.y1) + br.x2 * std::conj(br.y2);
      mbun[i * n + j] = br.a * std::conj(br.b);
    }
  }
  const double hh = hn * state.h;
  c_sep *= 0.25 * hh;
  dc_bun *= 0.5 * hh;

  HomInterferogram ig;
  ig.tau = tau;
  ig.window = window;
  const std::size_t nt = tau.size();
  ig.p_sep.resize(nt);
  ig.p_bunch.resize(nt);
  std::vector<double> phr(n), phi(n), qr(n_nu), qi(n_nu);
  for (std::size_t it = 0; it < nt; ++it) {
    const double t = tau[it];
    for (std::size_t j = 0; j < n; ++j) {
      phr[j] = std::cos(-2.0 * state.omega[j] * t);
      phi[j] = std::sin(-2.0 * state.omega[j] * t);
    }
    for (int i = 0; i < n_nu; ++i) {
      qr[i] = std::cos(-(state.omega_p + nu[i]) * t);
      qi[i] = std::sin(-(state.omega_p + nu[i]) * t);
    }
    // direct double sums over the full amplitude grid, no factorization
    double sep_re = 0.0, bun_re = 0.0;
    for (int i = 0; i < n_nu; ++i) {
      const std::size_t row = static_cast<std::size_t>(i) * n;
      double srow = 0.0, br_re = 0.0, br_im = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const cplx ms = msep[row + j];
        srow += ms.real() * phr[j] - ms.imag() * phi[j];
        const cplx mb = mbun[row + j];
        br_re += mb.real();
        br_im += mb.imag();
      }
      sep_re += srow;
      bun_re += br_re * qr[i] - br_im * qi[i];
    }
    ig.p_sep[it] = c_sep - 0.5 * hh * sep_re;
    ig.p_bunch[it] = dc_bun - hh * bun_re;
  }

  const long wlen = averaging_length(tau, window);
  std::vector<double> averaged = boxcar_mean(ig.p_bunch, wlen);
  ig.p_exp.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) ig.p_exp[i] = ig.p_sep[i] + averaged[i];
  return ig;
}

}  // namespace pairsplit
