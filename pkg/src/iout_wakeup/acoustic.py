"""Acoustic wake-up link: received sound power density vs distance and frequency.

Loss model: spreading ``k*log10(d)`` plus Thorp frequency-dependent
absorption.  The received level (dB re 1 uPa) is converted to an
intensity through the plane-wave relation I = p^2 / (rho*c), reported in
dBm re 1 mW/m^2.  With the default 190 dB source level this model puts
the -10 dBm sensitivity crossing near 250 m at 8 kHz and near 180 m at
48 kHz.
"""

import math
from dataclasses import dataclass, field

from . import kernels
from .core import Medium, solve_max_range
from .errors import DomainError

# Source level is referenced to 1 m from the projector; closer inputs are
# rejected rather than extrapolated.
REFERENCE_DISTANCE_M = 1.0

SPREADING_CYLINDRICAL = 10.0
SPREADING_PRACTICAL = 15.0
SPREADING_SPHERICAL = 20.0
_SPREADING_EXPONENTS = (SPREADING_CYLINDRICAL, SPREADING_PRACTICAL, SPREADING_SPHERICAL)

MAX_RANGE_BRACKET_M = (REFERENCE_DISTANCE_M, 10_000.0)


@dataclass(frozen=True)
class AcousticLinkParams:
    source_level_db: float = 190.0      # dB re 1 uPa at 1 m
    frequency_khz: float = 8.0
    medium: Medium = field(default_factory=Medium)
    spreading_exponent: float = SPREADING_SPHERICAL

    def __post_init__(self):
        if self.frequency_khz <= 0.0:
            raise DomainError(f"frequency must be positive: {self.frequency_khz} kHz")
        if self.spreading_exponent not in _SPREADING_EXPONENTS:
            raise DomainError(
                f"spreading exponent must be one of {_SPREADING_EXPONENTS}: "
                f"{self.spreading_exponent}"
            )


def thorp_absorption(frequency_khz):
    """Thorp seawater absorption coefficient, dB/km."""
    if frequency_khz <= 0.0:
        raise DomainError(f"frequency must be positive: {frequency_khz} kHz")
    return kernels.thorp_absorption_db_per_km(frequency_khz)


def _check_distance(distance_m):
    if distance_m < REFERENCE_DISTANCE_M:
        raise DomainError(
            f"distance {distance_m} m below reference distance {REFERENCE_DISTANCE_M} m"
        )


def transmission_loss(params: AcousticLinkParams, distance_m):
    """Spreading + absorption path loss in dB, defined for d >= 1 m."""
    _check_distance(distance_m)
    alpha = thorp_absorption(params.frequency_khz)
    return kernels.acoustic_tl_db(params.spreading_exponent, alpha, distance_m)


def intensity_offset_db(medium: Medium):
    """dB offset converting a level re 1 uPa into dBm re 1 mW/m^2.

    p = 10^(RL/20) uPa, I = p^2/(rho*c) W/m^2; in dB the conversion
    collapses to RL - 90 - 10*log10(rho*c).
    """
    return -90.0 - 10.0 * math.log10(medium.density_kg_m3 * medium.sound_speed_m_s)


def received_power_density_dbm(params: AcousticLinkParams, distance_m):
    """Received sound power density in dBm re 1 mW/m^2 at a slant range."""
    _check_distance(distance_m)
    alpha = thorp_absorption(params.frequency_khz)
    return kernels.acoustic_rx_dbm(
        params.source_level_db,
        params.spreading_exponent,
        alpha,
        intensity_offset_db(params.medium),
        distance_m,
    )


def sweep_received_power(params: AcousticLinkParams, d0, step, n):
    """Received power density at d0, d0+step, ... (n points)."""
    _check_distance(d0)
    alpha = thorp_absorption(params.frequency_khz)
    return kernels.acoustic_sweep(
        params.source_level_db,
        params.spreading_exponent,
        alpha,
        intensity_offset_db(params.medium),
        d0,
        step,
        n,
    )


def acoustic_max_range(params: AcousticLinkParams, sensitivity_dbm, tol_m=0.01):
    """Largest range (m) still meeting the receiver sensitivity."""
    d_min, d_max = MAX_RANGE_BRACKET_M
    return solve_max_range(
        lambda d: received_power_density_dbm(params, d),
        sensitivity_dbm,
        d_min,
        d_max,
        tol_m,
    )
