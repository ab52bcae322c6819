"""Shared units, geometry, technology reference data, and the range solver.

Conventions used throughout the package:

* Powers are handled in dBm.  For acoustic links the value is a power
  *density* in dBm re 1 mW/m^2 (hydrophone-side intensity); for optical
  and MI links it is plain dBm re 1 mW.  Zero linear power is the
  ``-inf`` sentinel.
* Coordinates are metres with z positive *down*: the water surface is
  z = 0, buoys float at z = 0, submerged nodes have z > 0 and airborne
  vehicles z < 0.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NoSolution

# dBm value meaning "no received power at all" (linear power 0).
NEG_INF_DBM = float("-inf")

SOUND_SPEED_M_S = 1500.0
LIGHT_SPEED_M_S = 3.0e8

ACOUSTIC = "acoustic"
OPTICAL = "optical"
MI = "mi"
TECHNOLOGIES = (ACOUSTIC, OPTICAL, MI)


def dbm_to_linear(p_dbm):
    """dBm -> linear power (mW, or mW/m^2 for acoustic density values)."""
    if p_dbm == NEG_INF_DBM:
        return 0.0
    return 10.0 ** (p_dbm / 10.0)


def linear_to_dbm(p_linear):
    """Linear power (mW or mW/m^2) -> dBm; 0 maps to the -inf sentinel."""
    if p_linear < 0.0:
        raise DomainError(f"negative linear power: {p_linear}")
    if p_linear == 0.0:
        return NEG_INF_DBM
    return 10.0 * math.log10(p_linear)


@dataclass(frozen=True)
class Position3D:
    """Point in metres; z positive down, water surface at z = 0."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"non-finite coordinate {name}={getattr(self, name)}")

    def distance_to(self, other):
        return math.dist((self.x, self.y, self.z), (other.x, other.y, other.z))


@dataclass(frozen=True)
class Medium:
    """Bulk water properties entering the acoustic intensity conversion."""

    density_kg_m3: float = 1000.0
    sound_speed_m_s: float = SOUND_SPEED_M_S

    def __post_init__(self):
        if self.density_kg_m3 <= 0.0 or self.sound_speed_m_s <= 0.0:
            raise DomainError("medium density and sound speed must be positive")


@dataclass(frozen=True)
class TechnologyProfile:
    """Reference data per wake-up technology (speed, sensitivity, range class)."""

    kind: str
    propagation_speed_m_s: float
    default_sensitivity_dbm: float
    range_class: str


PROFILES = {
    ACOUSTIC: TechnologyProfile(ACOUSTIC, SOUND_SPEED_M_S, -10.0, "long range (~km)"),
    OPTICAL: TechnologyProfile(OPTICAL, LIGHT_SPEED_M_S, -53.0, "medium range (~10-100 m)"),
    MI: TechnologyProfile(MI, LIGHT_SPEED_M_S, -69.0, "medium range (~10-100 m)"),
}


def propagation_delay(profile: TechnologyProfile, distance_m):
    """One-way signal travel time in seconds."""
    if distance_m < 0.0:
        raise DomainError(f"negative distance: {distance_m}")
    return distance_m / profile.propagation_speed_m_s


def solve_max_range(rx_power_dbm, sensitivity_dbm, d_min, d_max, tol_m=0.01):
    """Largest distance at which a monotone link still meets the sensitivity.

    ``rx_power_dbm`` is any non-increasing function of distance on
    [d_min, d_max].  Bisects the sensitivity crossing down to ``tol_m``
    metres and returns the bracket midpoint.

    Raises NoSolution when the crossing is not inside the bracket:
    either the link is still above the sensitivity at d_max (range
    exceeds the bracket) or already below it at d_min (unreachable).
    """
    if not d_min < d_max:
        raise DomainError(f"invalid bracket [{d_min}, {d_max}]")
    if tol_m <= 0.0:
        raise DomainError(f"invalid tolerance {tol_m}")
    if rx_power_dbm(d_min) < sensitivity_dbm:
        raise NoSolution(
            f"received power at d_min={d_min} m is below sensitivity {sensitivity_dbm} dBm"
        )
    if rx_power_dbm(d_max) >= sensitivity_dbm:
        raise NoSolution(
            f"received power at d_max={d_max} m still meets sensitivity {sensitivity_dbm} dBm"
        )
    lo, hi = d_min, d_max
    while hi - lo > tol_m:
        mid = 0.5 * (lo + hi)
        if rx_power_dbm(mid) >= sensitivity_dbm:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
