"""Pair-source and polarization-splitter chip models (C++ core)."""

from ._core import (
    BiphotonState,
    EfficiencyBudget,
    SourceParams,
    SplittingFunctions,
    alloy_index,
    apply_filter,
    beat_length,
    biphoton_state,
    calibrate_asymmetry,
    count_rates,
    four_config_probabilities,
    hom_curve,
    pm_pump_wavelength_nm,
    polarized_curve,
    reference_splitting,
    run_config_file,
    spectral_fwhm_nm,
    splitting_ratios,
)

__all__ = [
    "BiphotonState",
    "EfficiencyBudget",
    "SourceParams",
    "SplittingFunctions",
    "alloy_index",
    "apply_filter",
    "beat_length",
    "biphoton_state",
    "calibrate_asymmetry",
    "count_rates",
    "four_config_probabilities",
    "hom_curve",
    "pm_pump_wavelength_nm",
    "polarized_curve",
    "reference_splitting",
    "run_config_file",
    "spectral_fwhm_nm",
    "splitting_ratios",
]
