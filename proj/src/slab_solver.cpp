#include "pairsplit/slab_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairsplit/units.hpp"

namespace pairsplit {

namespace {

struct Vec2 {
  double a, b;
};

// propagate [field, weighted derivative] through one layer thickness t
Vec2 advance(const Vec2& v, double n, double t, double k0, double b2,
             Pol pol) {
  const double q = (k0 * n) * (k0 * n) - b2;
  double m00, m01, m10, m11;
  if (q > 0.0) {
    const double kap = std::sqrt(q);
    const double s = std::sin(kap * t), c = std::cos(kap * t);
    if (pol == Pol::TE) {
      m00 = c; m01 = s / kap; m10 = -kap * s; m11 = c;
    } else {
      m00 = c; m01 = n * n * s / kap; m10 = -kap * s / (n * n); m11 = c;
    }
  } else {
    const double g = std::sqrt(-q);
    const double sh = std::sinh(g * t), ch = std::cosh(g * t);
    if (pol == Pol::TE) {
      m00 = ch; m01 = sh / g; m10 = g * sh; m11 = ch;
    } else {
      m00 = ch; m01 = n * n * sh / g; m10 = g * sh / (n * n); m11 = ch;
    }
  }
  return {m00 * v.a + m01 * v.b, m10 * v.a + m11 * v.b};
}

Vec2 substrate_start(const SlabProblem& p, double k0, double b2, Pol pol) {
  const double gs =
      std::sqrt(std::max(b2 - (k0 * p.n_sub) * (k0 * p.n_sub), 1e-30));
  if (pol == Pol::TE) return {1.0, gs};
  return {1.0, gs / (p.n_sub * p.n_sub)};
}

}  // namespace

double dispersion_residual(const SlabProblem& p, double lambda, Pol pol,
                           double n_eff) {
  const double k0 = 2.0 * PI / lambda;
  const double b2 = (k0 * n_eff) * (k0 * n_eff);
  Vec2 v = substrate_start(p, k0, b2, pol);
  for (const auto& L : p.layers) {
    v = advance(v, L.n, L.t, k0, b2, pol);
    // per-layer rescale keeps deep mirror stacks inside double range;
    // positive factor preserves the sign structure of the residual
    const double m = std::max(std::fabs(v.a), std::fabs(v.b));
    if (m > 0.0) {
      v.a /= m;
      v.b /= m;
    }
  }
  const double gc =
      std::sqrt(std::max(b2 - (k0 * p.n_sup) * (k0 * p.n_sup), 1e-30));
  if (pol == Pol::TE) return v.b + gc * v.a;
  return v.b + gc / (p.n_sup * p.n_sup) * v.a;
}

std::vector<double> find_slab_modes(const SlabProblem& p, double lambda,
                                    Pol pol, int npts) {
  if (npts < 2) throw std::invalid_argument("mode scan needs npts >= 2");
  double hi = std::max(p.n_sub, p.n_sup);
  for (const auto& L : p.layers) hi = std::max(hi, L.n);
  const double lo = std::max(p.n_sub, p.n_sup) + 1e-9;
  hi -= 1e-9;
  if (hi <= lo) return {};
  std::vector<double> xs(npts), Fx(npts);
  for (int i = 0; i < npts; ++i) {
    xs[i] = lo + (hi - lo) * i / (npts - 1);
    Fx[i] = dispersion_residual(p, lambda, pol, xs[i]);
  }
  std::vector<double> roots;
  for (int i = 0; i + 1 < npts; ++i) {
    if (Fx[i] == 0.0) {
      roots.push_back(xs[i]);
    } else if (Fx[i] * Fx[i + 1] < 0.0) {
      double a = xs[i], b = xs[i + 1], fa = Fx[i];
      for (int it = 0; it < 100; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = dispersion_residual(p, lambda, pol, m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
        if (b - a < 1e-13) break;
      }
      roots.push_back(0.5 * (a + b));
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

std::vector<double> sample_mode_field(const SlabProblem& p, double lambda,
                                      Pol pol, double n_eff,
                                      const std::vector<double>& x) {
  const double k0 = 2.0 * PI / lambda;
  const double b2 = (k0 * n_eff) * (k0 * n_eff);
  // interface positions and state at the bottom of each layer
  std::vector<double> z0;
  std::vector<Vec2> v0;
  Vec2 v = substrate_start(p, k0, b2, pol);
  double z = 0.0;
  for (const auto& L : p.layers) {
    z0.push_back(z);
    v0.push_back(v);
    v = advance(v, L.n, L.t, k0, b2, pol);
    z += L.t;
  }
  const double z_top = z;
  const Vec2 v_top = v;
  const double gs =
      std::sqrt(std::max(b2 - (k0 * p.n_sub) * (k0 * p.n_sub), 1e-30));
  const double gc =
      std::sqrt(std::max(b2 - (k0 * p.n_sup) * (k0 * p.n_sup), 1e-30));
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (xi <= 0.0) {
      out[i] = std::exp(gs * xi);
    } else if (xi >= z_top) {
      out[i] = v_top.a * std::exp(-gc * (xi - z_top));
    } else {
      size_t j = p.layers.size() - 1;
      while (j > 0 && z0[j] > xi) --j;
      const Vec2 w = advance(v0[j], p.layers[j].n, xi - z0[j], k0, b2, pol);
      out[i] = w.a;
    }
  }
  return out;
}

std::complex<double> stack_reflection_te(const std::vector<SlabLayer>& layers,
                                         double n_term, double n_in,
                                         double n_eff, double lambda) {
  using cd = std::complex<double>;
  const double k0 = 2.0 * PI / lambda;
  auto qn = [&](double n) {
    return std::sqrt(cd(n * n - n_eff * n_eff, 0.0));
  };
  // transfer matrix on [E, E'/k0], layer-by-layer outward from n_in
  cd M00 = 1.0, M01 = 0.0, M10 = 0.0, M11 = 1.0;
  for (const auto& L : layers) {
    const cd q = qn(L.n);
    const cd ph = k0 * q * L.t;
    const cd c = std::cos(ph), s = std::sin(ph);
    const cd a00 = c, a01 = s / q, a10 = -q * s, a11 = c;
    const cd n00 = a00 * M00 + a01 * M10;
    const cd n01 = a00 * M01 + a01 * M11;
    const cd n10 = a10 * M00 + a11 * M10;
    const cd n11 = a10 * M01 + a11 * M11;
    M00 = n00; M01 = n01; M10 = n10; M11 = n11;
  }
  const cd qt = qn(n_term);
  const cd qc = qn(n_in);
  const cd I(0.0, 1.0);
  // incidence side E = 1+r, E'/k0 = i qc (1-r); terminal E'/k0 = i qt E
  const cd U = M10 - I * qt * M00;
  const cd V = I * qc * (M11 - I * qt * M01);
  return -(U + V) / (U - V);
}

}  // namespace pairsplit
