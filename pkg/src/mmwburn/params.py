"""Physical skin/exposure parameters and the derived normalization scales.

All model mathematics runs in dimensionless variables; this module owns the
physical constants (SI units, temperatures in Celsius) and the scale factors
that map between the two:

    depth scale   z_s = 1/mu                (penetration depth)
    time scale    t_s = rho_m*C_p/(k*mu^2)  (diffusion time over z_s)
    power scale   P_s = k*mu*(T_act-T_base)

The lateral scale r_s = sqrt(mu * v_c / pi) depends on the flight-threshold
volume v_c, which is never assigned a number; every beam radius in the API
is therefore a multiple of r_s, and r_s itself stays symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .damage import DamageCoefficients, damage_coefficients

__all__ = [
    "SkinExposureParams",
    "NormalizationScales",
    "default_params",
    "female_srt_params",
    "male_srt_params",
    "normalize",
]


@dataclass(frozen=True)
class SkinExposureParams:
    """Physical constants of the exposure model.

    rho_m:  skin (dermis) mass density, kg/m^3
    C_p:    specific heat capacity, J/(kg K)
    k:      thermal conductivity, W/(m K)
    mu_inv: beam penetration depth 1/mu, m
    T_base: baseline skin temperature, deg C
    T_act:  nociceptor activation temperature, deg C
    t_R:    simple reaction time, s
    A:      Arrhenius frequency factor, 1/s
    dE_a:   Arrhenius activation energy, J/mol
    R:      universal gas constant, J/(mol K)
    """

    rho_m: float = 1116.0
    C_p: float = 3300.0
    k: float = 0.445
    mu_inv: float = 0.16e-3
    T_base: float = 32.0
    T_act: float = 40.4
    t_R: float = 0.275
    A: float = 8.82e94
    dE_a: float = 6.03e5
    R: float = 8.314

    def __post_init__(self) -> None:
        for name in ("rho_m", "C_p", "k", "mu_inv", "t_R", "A", "dE_a", "R"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive, got {getattr(self, name)}")
        if not self.T_act > self.T_base:
            raise ValueError(
                f"activation temperature {self.T_act} must exceed baseline {self.T_base}"
            )

    def with_updates(self, **changes) -> "SkinExposureParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class NormalizationScales:
    """Derived scale factors; ``r_s`` stays symbolic (see module docstring)."""

    z_s: float
    t_s: float
    P_s: float
    t_Rn: float
    coeffs: DamageCoefficients
    r_s: str = "unknown"


def default_params() -> SkinExposureParams:
    """Reference parameter set (pooled-population reaction time)."""
    return SkinExposureParams()


def female_srt_params() -> SkinExposureParams:
    """Reference set with the female-population simple reaction time."""
    return SkinExposureParams(t_R=0.281)


def male_srt_params() -> SkinExposureParams:
    """Reference set with the male-population simple reaction time."""
    return SkinExposureParams(t_R=0.268)


def normalize(params: SkinExposureParams) -> NormalizationScales:
    """Compute the normalization scales and damage coefficients."""
    mu = 1.0 / params.mu_inv
    t_s = params.rho_m * params.C_p / (params.k * mu * mu)
    return NormalizationScales(
        z_s=params.mu_inv,
        t_s=t_s,
        P_s=params.k * mu * (params.T_act - params.T_base),
        t_Rn=params.t_R / t_s,
        coeffs=damage_coefficients(params),
    )
