#pragma once
#include <cmath>
#include <complex>
#include <cstddef>

namespace pairsplit {

// sum_k c_k exp(i a omega_k) for a uniform grid omega_k = omega0 + k h.
// Phase recurrence with a trig resync every 256 steps keeps the rounding
// drift below 1e-12 while avoiding a sincos per term.  Explicit re/im
// arithmetic so the inner loop stays free of libgcc complex-mult calls.
inline std::complex<double> phased_sum(const std::complex<double>* c,
                                       std::size_t n, double omega0, double h,
                                       double a) {
  const double step = a * h;
  const double sc = std::cos(step), ss = std::sin(step);
  double zr = 1.0, zi = 0.0, ar = 0.0, ai = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k % 256 == 0) {
      const double ph = a * (omega0 + static_cast<double>(k) * h);
      zr = std::cos(ph);
      zi = std::sin(ph);
    }
    const double cr = c[k].real(), ci = c[k].imag();
    ar += cr * zr - ci * zi;
    ai += cr * zi + ci * zr;
    const double t = zr * sc - zi * ss;
    zi = zr * ss + zi * sc;
    zr = t;
  }
  return {ar, ai};
}

inline std::complex<double> phased_sum(const double* c, std::size_t n,
                                       double omega0, double h, double a) {
  const double step = a * h;
  const double sc = std::cos(step), ss = std::sin(step);
  double zr = 1.0, zi = 0.0, ar = 0.0, ai = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k % 256 == 0) {
      const double ph = a * (omega0 + static_cast<double>(k) * h);
      zr = std::cos(ph);
      zi = std::sin(ph);
    }
    ar += c[k] * zr;
    ai += c[k] * zi;
    const double t = zr * sc - zi * ss;
    zi = zr * ss + zi * sc;
    zr = t;
  }
  return {ar, ai};
}

}  // namespace pairsplit
