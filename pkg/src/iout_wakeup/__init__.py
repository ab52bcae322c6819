"""Underwater IoT wake-up toolkit.

Link budgets for the three underwater wake-up technologies (acoustic,
optical, magnetic induction), closed-form node lifetime under no-wake-up
/ duty-cycling / on-demand policies, and a deterministic discrete-event
simulator of the two-stage UAV -> buoy -> node wake-up protocol.

The distance-power kernels run on a compiled extension when built
(``iout_wakeup.kernels.BACKEND == "compiled"``) and on a bit-identical
pure-Python fallback otherwise.
"""

from .acoustic import (
    AcousticLinkParams,
    acoustic_max_range,
    received_power_density_dbm,
    thorp_absorption,
    transmission_loss,
)
from .core import (
    ACOUSTIC,
    MI,
    NEG_INF_DBM,
    OPTICAL,
    PROFILES,
    TECHNOLOGIES,
    Medium,
    Position3D,
    TechnologyProfile,
    dbm_to_linear,
    linear_to_dbm,
    propagation_delay,
    solve_max_range,
)
from .energy import (
    ACOUSTIC_ENERGY,
    DEFAULT_ENERGY,
    MI_ENERGY,
    OPTICAL_ENERGY,
    EnergyProfile,
    WakePolicy,
    active_charge_ratio,
    average_current,
    lifetime_hours,
)
from .errors import (
    ConfigError,
    DomainError,
    NoSolution,
    ParseError,
    PolicyError,
    ValidationError,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .mi import MiLinkParams, mi_max_range, mi_path_gain_db
from .optical import OpticalLinkParams, WaterType, extinction_coefficient, optical_max_range
from .scenario import (
    load_preset,
    parse_scenario,
    parse_scenario_text,
    scenario_to_json,
    serialize_scenario,
)
from .sim import (
    Buoy,
    Node,
    SimConfig,
    SimReport,
    Uav,
    WakeRequest,
    WakeUpSignal,
    make_node,
    run,
    simulate_lifetime,
)

__version__ = "0.1.0"
