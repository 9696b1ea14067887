"""Skin thermal-injury risk for millimeter-wave beam exposures.

The package evaluates, for a Gaussian beam switched off by the exposed
subject's flight action, the beam-center surface temperature history, the
Arrhenius damage parameter Omega, and the resulting burn class — all from
two inputs: the observed flight-action time and the beam radius expressed
as a multiple of the model's lateral scale.
"""

from .activation import (
    VOLUME_THRESHOLD_ND,
    activated_depth,
    activated_volume_nd,
    flight_initiation_time,
    invert_power,
)
from .damage import (
    OMEGA_FIRST_DEGREE,
    OMEGA_SECOND_DEGREE,
    OMEGA_THIRD_DEGREE,
    BurnClass,
    DamageCoefficients,
    TimeGrid,
    build_grids,
    classify_burn,
    damage_coefficients,
    damage_integral,
    damage_integral_reference,
    damage_rate,
    settlement_time,
)
from .errors import (
    FlightTimeTooSmall,
    InvalidGrid,
    MmwBurnError,
    NoBracket,
    NonPositivePower,
    UnknownParameter,
    UnstableConfig,
)
from .fdcheck import FdConfig, FdSolution, max_error_vs_closed_form, solve_fd
from .kernel import kernel_h, kernel_u, surface_trace, temp_field_nd, to_physical
from .params import (
    NormalizationScales,
    SkinExposureParams,
    default_params,
    female_srt_params,
    male_srt_params,
    normalize,
)
from .scenario import (
    SWEEPABLE_PARAMS,
    CurvePoint,
    ExposureOutcome,
    SweepCase,
    omega_curve,
    run_exposure,
    sensitivity_sweep,
    surface_temperature_trace,
    transition_window,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # kernel
    "kernel_u",
    "kernel_h",
    "surface_trace",
    "temp_field_nd",
    "to_physical",
    # activation / inversion
    "VOLUME_THRESHOLD_ND",
    "activated_depth",
    "activated_volume_nd",
    "flight_initiation_time",
    "invert_power",
    # damage
    "OMEGA_FIRST_DEGREE",
    "OMEGA_SECOND_DEGREE",
    "OMEGA_THIRD_DEGREE",
    "BurnClass",
    "DamageCoefficients",
    "TimeGrid",
    "build_grids",
    "classify_burn",
    "damage_coefficients",
    "damage_integral",
    "damage_integral_reference",
    "damage_rate",
    "settlement_time",
    # parameters
    "SkinExposureParams",
    "NormalizationScales",
    "default_params",
    "female_srt_params",
    "male_srt_params",
    "normalize",
    # scenarios
    "SWEEPABLE_PARAMS",
    "CurvePoint",
    "ExposureOutcome",
    "SweepCase",
    "omega_curve",
    "run_exposure",
    "sensitivity_sweep",
    "surface_temperature_trace",
    "transition_window",
    # finite-difference oracle
    "FdConfig",
    "FdSolution",
    "max_error_vs_closed_form",
    "solve_fd",
    # errors
    "MmwBurnError",
    "FlightTimeTooSmall",
    "NonPositivePower",
    "NoBracket",
    "UnknownParameter",
    "InvalidGrid",
    "UnstableConfig",
]
