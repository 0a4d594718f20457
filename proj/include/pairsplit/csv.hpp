#pragma once
#include <string>

#include "pairsplit/coupler.hpp"

namespace pairsplit {

// header "wavelength_nm,s_te,s_tm"; wavelengths strictly increasing,
// ratios within [0, 1]; stored in meters
SplittingSpectrum read_splitting_csv(const std::string& path);

void write_splitting_csv(const std::string& path,
                         const SplittingSpectrum& spectrum);

}  // namespace pairsplit
