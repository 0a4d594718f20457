#pragma once

namespace pairsplit {

inline constexpr double SPEED_OF_LIGHT = 299792458.0;   // m/s
inline constexpr double HC_EV_NM = 1239.841984;         // photon energy (eV) * wavelength (nm)
inline constexpr double PI = 3.14159265358979323846;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double fs = 1e-15;
inline constexpr double ps = 1e-12;

// wavelength (m) <-> angular frequency (rad/s)
inline double omega_of(double lambda) { return 2.0 * PI * SPEED_OF_LIGHT / lambda; }
inline double lambda_of(double omega) { return 2.0 * PI * SPEED_OF_LIGHT / omega; }

}  // namespace pairsplit
