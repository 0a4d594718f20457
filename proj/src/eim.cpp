#include "pairsplit/eim.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "pairsplit/units.hpp"

namespace pairsplit {

namespace {

double fundamental_or_throw(const SlabProblem& p, double lambda, Pol pol,
                            const char* what) {
  const auto modes = find_slab_modes(p, lambda, pol);
  if (modes.empty()) {
    std::ostringstream os;
    os << what << ": no guided mode at lambda = " << lambda / nm << " nm";
    throw std::runtime_error(os.str());
  }
  return modes.front();
}

}  // namespace

Pol lateral_pol(Pol pol) { return pol == Pol::TE ? Pol::TM : Pol::TE; }

VerticalPair vertical_pair(const LayerStack& stack,
                           const AlloyDispersion& disp, double lambda,
                           Pol pol, double etch_depth) {
  stack.require_valid();
  VerticalPair out{};
  out.degraded = false;
  out.n_ridge =
      fundamental_or_throw(stack.slab(disp, lambda), lambda, pol, "ridge");
  const LayerStack et = stack.etched(etch_depth);
  const auto modes = find_slab_modes(et.slab(disp, lambda), lambda, pol);
  if (modes.empty()) {
    // deep etch can push the etched region below cutoff; fall back to the
    // superstrate index so the lateral problem stays well posed
    out.n_etched = stack.superstrate_index;
    out.degraded = true;
  } else {
    out.n_etched = modes.front();
  }
  return out;
}

LateralProfile effective_index_profile(const LayerStack& stack,
                                       const AlloyDispersion& disp,
                                       double w, double g, double etch_depth,
                                       double lambda, Pol pol) {
  if (!(w > 0.0) || !(g > 0.0))
    throw std::invalid_argument("profile needs w > 0 and g > 0");
  const VerticalPair v = vertical_pair(stack, disp, lambda, pol, etch_depth);
  LateralProfile prof;
  prof.pol = pol;
  prof.degraded = v.degraded;
  prof.prob.n_sub = v.n_etched;
  prof.prob.n_sup = v.n_etched;
  prof.prob.layers = {{v.n_ridge, w}, {v.n_etched, g}, {v.n_ridge, w}};
  return prof;
}

LateralProfile single_guide_profile(const LayerStack& stack,
                                    const AlloyDispersion& disp, double w,
                                    double etch_depth, double lambda,
                                    Pol pol) {
  if (!(w > 0.0)) throw std::invalid_argument("profile needs w > 0");
  const VerticalPair v = vertical_pair(stack, disp, lambda, pol, etch_depth);
  LateralProfile prof;
  prof.pol = pol;
  prof.degraded = v.degraded;
  prof.prob.n_sub = v.n_etched;
  prof.prob.n_sup = v.n_etched;
  prof.prob.layers = {{v.n_ridge, w}};
  return prof;
}

std::pair<double, double> supermode_indices(const LateralProfile& profile,
                                            double lambda) {
  // wide gaps leave the pair nearly degenerate; both roots can share one
  // scan bracket, so densify until they separate
  std::vector<double> roots;
  for (int npts = 3000; npts <= 768000; npts *= 4) {
    roots = find_slab_modes(profile.prob, lambda, lateral_pol(profile.pol),
                            npts);
    if (roots.size() >= 2) return {roots[0], roots[1]};
  }
  std::ostringstream os;
  os << "supermodes: found " << roots.size()
     << " lateral mode(s); guides are uncoupled or below cutoff";
  throw std::runtime_error(os.str());
}

double fundamental_index(const LateralProfile& profile, double lambda) {
  const auto roots =
      find_slab_modes(profile.prob, lambda, lateral_pol(profile.pol));
  if (roots.empty())
    throw std::runtime_error("lateral profile has no guided mode");
  return roots.front();
}

double single_guide_index(const LayerStack& stack,
                          const AlloyDispersion& disp, double w,
                          double lambda, Pol pol) {
  return fundamental_index(
      single_guide_profile(stack, disp, w, stack.etch_depth, lambda, pol),
      lambda);
}

double telecom_mean_index(const LayerStack& stack,
                          const AlloyDispersion& disp, double w,
                          double lambda) {
  return 0.5 * (single_guide_index(stack, disp, w, lambda, Pol::TE) +
                single_guide_index(stack, disp, w, lambda, Pol::TM));
}

// ---- pump Bragg mode -------------------------------------------------

namespace {

struct BraggParts {
  std::vector<SlabLayer> up;     // outward from core toward superstrate
  std::vector<SlabLayer> down;   // outward from core toward substrate
  double n_core;
  double t_core;
  double n_sub;
  double n_sup;
};

BraggParts bragg_parts(const LayerStack& stack, const AlloyDispersion& disp,
                       double lambda) {
  stack.require_valid();
  size_t core = 0;
  for (size_t i = 1; i < stack.layers.size(); ++i)
    if (stack.layers[i].t > stack.layers[core].t) core = i;
  BraggParts bp;
  bp.n_core = disp.index(stack.layers[core].x, lambda);
  bp.t_core = stack.layers[core].t;
  bp.n_sub = disp.index(stack.substrate_x, lambda);
  bp.n_sup = stack.superstrate_index;
  for (size_t i = core + 1; i < stack.layers.size(); ++i)
    bp.up.push_back({disp.index(stack.layers[i].x, lambda),
                     stack.layers[i].t});
  for (size_t i = core; i-- > 0;)
    bp.down.push_back({disp.index(stack.layers[i].x, lambda),
                       stack.layers[i].t});
  if (bp.up.empty() || bp.down.empty())
    throw std::runtime_error("pump mode needs mirror layers on both sides");
  return bp;
}

std::complex<double> round_trip(const BraggParts& bp, double n_eff,
                                double lambda, double* abs_r_dn) {
  const auto r_up =
      stack_reflection_te(bp.up, bp.n_sup, bp.n_core, n_eff, lambda);
  const auto r_dn =
      stack_reflection_te(bp.down, bp.n_sub, bp.n_core, n_eff, lambda);
  if (abs_r_dn) *abs_r_dn = std::abs(r_dn);
  const double k0 = 2.0 * PI / lambda;
  const std::complex<double> kc =
      k0 * std::sqrt(std::complex<double>(
               bp.n_core * bp.n_core - n_eff * n_eff, 0.0));
  const std::complex<double> I(0.0, 1.0);
  return r_up * r_dn * std::exp(2.0 * I * kc * bp.t_core);
}

}  // namespace

double bragg_band_center(const LayerStack& stack, const AlloyDispersion& disp,
                         double lambda) {
  const BraggParts bp = bragg_parts(stack, disp, lambda);
  const double k0 = 2.0 * PI / lambda;
  // scan stops just below the substrate index, same window the resonance
  // search uses
  const double hi = bp.n_sub - 1e-4;
  const double lo = 2.2;
  const int npts = 4000;
  double best_n = lo, best_cost = 1e300;
  for (int i = 0; i < npts; ++i) {
    const double n = lo + (hi - lo) * i / (npts - 1);
    double cost = 0.0;
    auto add = [&](const SlabLayer& L) {
      const double q2 = L.n * L.n - n * n;
      const double q = q2 > 0.0 ? std::sqrt(q2) : 0.0;
      const double d = k0 * q * L.t - PI / 2.0;
      cost += d * d;
    };
    for (const auto& L : bp.up) add(L);
    for (const auto& L : bp.down) add(L);
    if (cost < best_cost) {
      best_cost = cost;
      best_n = n;
    }
  }
  return best_n;
}

double bragg_pump_index_raw(const LayerStack& stack,
                            const AlloyDispersion& disp, double lambda) {
  const BraggParts bp = bragg_parts(stack, disp, lambda);
  const double nB = bragg_band_center(stack, disp, lambda);
  const double lo = 2.2;
  const double hi = bp.n_sub - 2e-4;
  const int npts = 2400;
  const double rmin = 0.9;
  std::vector<double> ns(npts), ph(npts), rd(npts);
  for (int i = 0; i < npts; ++i) {
    ns[i] = lo + (hi - lo) * i / (npts - 1);
    double ard = 0.0;
    const auto rho = round_trip(bp, ns[i], lambda, &ard);
    ph[i] = std::arg(rho);
    rd[i] = ard;
  }
  // unwrap the round-trip phase along the scan
  for (int i = 1; i < npts; ++i) {
    double d = ph[i] - ph[i - 1];
    while (d > PI) d -= 2.0 * PI;
    while (d < -PI) d += 2.0 * PI;
    ph[i] = ph[i - 1] + d;
  }
  std::vector<double> roots;
  for (int m = -10; m <= 10; ++m) {
    const double level = 2.0 * PI * m;
    for (int i = 0; i + 1 < npts; ++i) {
      const double a = ph[i] - level, b = ph[i + 1] - level;
      if ((a > 0.0) == (b > 0.0) || a == b) continue;
      if (std::min(rd[i], rd[i + 1]) < rmin) continue;  // outside stopband
      const double t = a / (a - b);
      roots.push_back(ns[i] + t * (ns[i + 1] - ns[i]));
    }
  }
  if (roots.empty()) {
    std::ostringstream os;
    os << "no pump resonance found in n_eff window [" << lo << ", " << hi
       << "] at lambda = " << lambda / nm << " nm";
    throw std::runtime_error(os.str());
  }
  double best = roots.front();
  for (const double r : roots)
    if (std::fabs(r - nB) < std::fabs(best - nB)) best = r;
  return best;
}

double bragg_pump_index(const LayerStack& stack, const AlloyDispersion& disp,
                        double lambda) {
  return bragg_pump_index_raw(stack, disp, lambda) + stack.bragg_offset;
}

}  // namespace pairsplit
