#include "pairsplit/coupler.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace pairsplit {

std::vector<std::string> CouplerGeometry::validate() const {
  std::vector<std::string> out;
  std::ostringstream os;
  if (!(w > 0.0)) {
    os << "geometry.w: must be > 0, got " << w;
    out.push_back(os.str());
    os.str("");
  }
  if (!(g > 0.0)) {
    os << "geometry.g: must be > 0, got " << g;
    out.push_back(os.str());
    os.str("");
  }
  if (!(L > 0.0)) {
    os << "geometry.L: must be > 0, got " << L;
    out.push_back(os.str());
    os.str("");
  }
  if (!(etch_depth >= 0.0)) {
    os << "geometry.etch_depth: must be >= 0, got " << etch_depth;
    out.push_back(os.str());
    os.str("");
  }
  if (!(gamma > 0.0 && gamma <= 1.5)) {
    os << "geometry.gamma: must be in (0, 1.5], got " << gamma;
    out.push_back(os.str());
    os.str("");
  }
  return out;
}

void CouplerGeometry::require_valid() const {
  const auto v = validate();
  if (!v.empty()) throw std::invalid_argument(v.front());
}

double beat_length(double n_s, double n_as, double lambda) {
  if (!(n_s > n_as))
    throw std::invalid_argument(
        "beat length undefined: supermodes degenerate (n_S <= n_AS)");
  return lambda / (2.0 * (n_s - n_as));
}

std::pair<double, double> splitting_ratios(double L, double lc_te,
                                           double lc_tm) {
  if (!(L >= 0.0) || !(lc_te > 0.0) || !(lc_tm > 0.0))
    throw std::invalid_argument("splitting_ratios needs L >= 0, Lc > 0");
  const double s_te = 0.5 * (1.0 + std::cos(PI * L / lc_te));
  const double s_tm = 0.5 * (1.0 - std::cos(PI * L / lc_tm));
  return {s_te, s_tm};
}

BeatLengthProvider eim_beat_provider(const LayerStack& stack,
                                     const AlloyDispersion& disp,
                                     double etch_depth) {
  struct Cache {
    LayerStack stack;
    AlloyDispersion disp;
    double etch;
    std::map<std::pair<double, int>, VerticalPair> vertical;
  };
  auto cache = std::make_shared<Cache>(Cache{stack, disp, etch_depth, {}});
  return [cache](double w, double g, double lambda, double& lc_te,
                 double& lc_tm) -> bool {
    double lc[2];
    for (int p = 0; p < 2; ++p) {
      const Pol pol = p == 0 ? Pol::TE : Pol::TM;
      const auto key = std::make_pair(lambda, p);
      auto it = cache->vertical.find(key);
      if (it == cache->vertical.end()) {
        it = cache->vertical
                 .emplace(key, vertical_pair(cache->stack, cache->disp,
                                             lambda, pol, cache->etch))
                 .first;
      }
      const VerticalPair& v = it->second;
      LateralProfile prof;
      prof.pol = pol;
      prof.degraded = v.degraded;
      prof.prob.n_sub = v.n_etched;
      prof.prob.n_sup = v.n_etched;
      prof.prob.layers = {{v.n_ridge, w}, {v.n_etched, g}, {v.n_ridge, w}};
      try {
        const auto [ns, nas] = supermode_indices(prof, lambda);
        lc[p] = beat_length(ns, nas, lambda);
      } catch (const std::exception&) {
        return false;
      }
    }
    lc_te = lc[0];
    lc_tm = lc[1];
    return true;
  };
}

SplittingSpectrum splitting_spectrum(const LayerStack& stack,
                                     const AlloyDispersion& disp,
                                     const CouplerGeometry& geometry,
                                     const std::vector<double>& lambda_grid) {
  geometry.require_valid();
  if (lambda_grid.size() < 2)
    throw std::invalid_argument("wavelength grid needs >= 2 points");
  for (size_t i = 1; i < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] > lambda_grid[i - 1]))
      throw std::invalid_argument(
          "wavelength grid must be strictly increasing");
  const auto provider = eim_beat_provider(stack, disp, geometry.etch_depth);
  SplittingSpectrum out;
  out.lambda = lambda_grid;
  const double L_eff = geometry.gamma * geometry.L;
  for (const double lam : lambda_grid) {
    double lc_te = 0.0, lc_tm = 0.0;
    if (!provider(geometry.w, geometry.g, lam, lc_te, lc_tm)) {
      std::ostringstream os;
      os << "splitting spectrum failed at lambda = " << lam / nm
         << " nm: guides uncoupled or below cutoff";
      throw std::runtime_error(os.str());
    }
    const auto [s_te, s_tm] = splitting_ratios(L_eff, lc_te, lc_tm);
    out.s_te.push_back(s_te);
    out.s_tm.push_back(s_tm);
  }
  return out;
}

DesignPoint design_sweep(const BeatLengthProvider& provider,
                         const SweepRequest& req,
                         std::vector<SweepRow>* surface) {
  if (req.nw < 1 || req.ng < 1)
    throw std::invalid_argument("sweep grid needs nw, ng >= 1");
  if (!(req.w_hi >= req.w_lo) || !(req.g_hi >= req.g_lo))
    throw std::invalid_argument("sweep ranges must be ordered");
  if (req.band_points < 1)
    throw std::invalid_argument("sweep needs band_points >= 1");
  struct Candidate {
    DesignPoint pt;
    bool valid = false;
  };
  std::vector<Candidate> feasible;
  if (surface) surface->clear();
  const double nanv = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < req.nw; ++i) {
    const double w =
        req.nw == 1 ? req.w_lo
                    : req.w_lo + (req.w_hi - req.w_lo) * i / (req.nw - 1);
    for (int j = 0; j < req.ng; ++j) {
      const double g =
          req.ng == 1 ? req.g_lo
                      : req.g_lo + (req.g_hi - req.g_lo) * j / (req.ng - 1);
      double lc_te0 = 0.0, lc_tm0 = 0.0;
      if (!provider(w, g, req.lambda0, lc_te0, lc_tm0)) {
        if (surface) surface->push_back({w, g, nanv, nanv, nanv});
        continue;
      }
      const double Lstar = 4.0 * lc_te0;
      const double ratio = lc_te0 / lc_tm0;
      double sum_min = 0.0, sum_te = 0.0, sum_tm = 0.0;
      bool ok = true;
      for (int k = 0; k < req.band_points; ++k) {
        const double lam =
            req.band_points == 1
                ? req.lambda0
                : req.lambda0 - req.band / 2.0 +
                      req.band * k / (req.band_points - 1);
        double lc_te = 0.0, lc_tm = 0.0;
        if (!provider(w, g, lam, lc_te, lc_tm)) {
          ok = false;
          break;
        }
        const auto [s_te, s_tm] = splitting_ratios(Lstar, lc_te, lc_tm);
        sum_min += std::min(s_te, s_tm);
        sum_te += s_te;
        sum_tm += s_tm;
      }
      if (!ok) {
        if (surface) surface->push_back({w, g, nanv, nanv, nanv});
        continue;
      }
      const double objective = sum_min / req.band_points;
      if (surface)
        surface->push_back({w, g, sum_te / req.band_points,
                            sum_tm / req.band_points, ratio});
      Candidate c;
      c.valid = true;
      c.pt = {w, g, Lstar, objective, ratio, std::fabs(ratio - 0.75)};
      feasible.push_back(c);
    }
  }
  if (feasible.empty())
    throw std::runtime_error(
        "no coupling region: every swept (w, g) point is uncoupled or "
        "below cutoff");
  double best_obj = -1.0;
  for (const auto& c : feasible) best_obj = std::max(best_obj, c.pt.objective);
  const Candidate* pick = nullptr;
  for (const auto& c : feasible) {
    if (c.pt.objective < best_obj - 1e-3) continue;
    if (!pick || c.pt.ratio_residual < pick->pt.ratio_residual ||
        (c.pt.ratio_residual == pick->pt.ratio_residual &&
         c.pt.L < pick->pt.L))
      pick = &c;
  }
  return pick->pt;
}

std::pair<double, double> reference_device_splitting(double lambda) {
  const double s_te =
      0.5 * (1.0 + std::cos(4.0 * PI * std::pow(lambda / (1528.0 * nm), 2.8)));
  const double s_tm =
      0.5 * (1.0 - std::cos(3.0 * PI * std::pow(lambda / (1518.0 * nm), 2.6)));
  return {s_te, s_tm};
}

}  // namespace pairsplit
