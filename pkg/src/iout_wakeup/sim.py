"""Deterministic discrete-event simulation of the two-stage wake-up protocol.

Stage one: the UAV sends an RF request toward the buoys; the air hop is a
success disk (inside ``rf_range`` the request arrives after distance/c,
outside it is dropped with a failure record).  Stage two: an in-range
buoy emits an addressed wake-up signal using the target node's
technology; every sleeping node of that technology receives it after the
propagation delay, compares the received power against its sensitivity
and the address against its own, and only a matched, in-range node turns
ACTIVE for its burst duration before falling back to SLEEP.

Determinism: event times are integer nanoseconds and the queue is totally
ordered by (time, event-kind priority, actor id, insertion sequence).
State transitions at a timestamp are processed before signal arrivals at
the same timestamp, so back-to-back wake schedules keep a node
continuously active; arrivals precede fresh emissions.  The engine is
seedless; identical configs produce identical reports.

Buoy energy is not metered (surface nodes harvest); only node-side charge
is accounted, exactly: consumed = I_active*t_active/3600 + I_sleep*t_sleep/3600.
"""

import heapq
import itertools
import math
from dataclasses import dataclass

from . import acoustic, mi, optical
from .core import (
    ACOUSTIC,
    LIGHT_SPEED_M_S,
    MI,
    OPTICAL,
    PROFILES,
    TECHNOLOGIES,
    Position3D,
    propagation_delay,
)
from .energy import EnergyProfile, DEFAULT_ENERGY, WakePolicy
from .errors import ConfigError, PolicyError

SLEEP = "sleep"
ACTIVE = "active"

OUT_OF_RANGE = "out_of_range"
ADDRESS_MISMATCH = "address_mismatch"
DEPLETED = "depleted"

MAX_ADDRESS = 0xFFFF

_NS = 1_000_000_000
# Queue priorities: sleep transitions, then arrivals (buoy RF, node WuS),
# then fresh UAV emissions.
_PRIO_SLEEP, _PRIO_RF, _PRIO_WUS, _PRIO_REQUEST = 0, 1, 2, 3

_LINK_TYPES = {
    ACOUSTIC: acoustic.AcousticLinkParams,
    OPTICAL: optical.OpticalLinkParams,
    MI: mi.MiLinkParams,
}


def _to_ns(seconds):
    return int(round(seconds * _NS))


@dataclass
class Node:
    """Submerged sensor node; ``state`` is the initial state at t = 0."""

    address: int
    position: Position3D
    technology: str
    link_params: object = None
    sensitivity_dbm: float = None
    energy: EnergyProfile = None
    state: str = SLEEP
    remaining_charge_mah: float = None  # None = full battery

    def __post_init__(self):
        if self.technology not in TECHNOLOGIES:
            raise ConfigError(f"unknown technology: {self.technology}")
        if self.link_params is None:
            self.link_params = _LINK_TYPES[self.technology]()
        if self.sensitivity_dbm is None:
            self.sensitivity_dbm = PROFILES[self.technology].default_sensitivity_dbm
        if self.energy is None:
            self.energy = DEFAULT_ENERGY[self.technology]
        if self.remaining_charge_mah is None:
            self.remaining_charge_mah = self.energy.battery_capacity_mah


@dataclass
class Buoy:
    """Surface relay at z = 0; ``transmitters`` lists the equipped
    wake-up technologies."""

    position: Position3D
    transmitters: tuple = TECHNOLOGIES
    rf_wakeup_enabled: bool = True
    rf_sensitivity_dbm: float = -100.0


@dataclass
class Uav:
    position: Position3D
    rf_range_m: float = 1000.0


@dataclass(frozen=True)
class WakeRequest:
    time_s: float
    target_address: int


@dataclass(frozen=True)
class WakeUpSignal:
    target_address: int
    technology: str
    emit_time_s: float
    origin: int  # buoy index


@dataclass
class SimConfig:
    uav: Uav
    buoys: list
    nodes: list
    wake_requests: list
    horizon_s: float = 3600.0
    policy: WakePolicy = None  # metadata; request generation is the caller's job


@dataclass(frozen=True)
class SimEvent:
    time_ns: int
    actor: str
    kind: str
    detail: str

    @property
    def time_s(self):
        return self.time_ns / _NS


@dataclass(frozen=True)
class FailureRecord:
    time_ns: int
    reason: str
    actor: str
    detail: str


@dataclass
class NodeReport:
    address: int
    wakes: int
    wake_latencies_s: list
    charge_consumed_mah: float
    remaining_charge_mah: float
    failures: int
    depleted: bool
    depleted_at_s: float = None
    final_state: str = SLEEP

    @property
    def mean_latency_s(self):
        if not self.wake_latencies_s:
            return 0.0
        return sum(self.wake_latencies_s) / len(self.wake_latencies_s)


@dataclass
class SimReport:
    horizon_s: float
    events: list
    failures: list
    nodes: dict  # address -> NodeReport


def _consumed_mah(profile: EnergyProfile, active_ns, sleep_ns):
    return (
        profile.active_current_ma * (active_ns / _NS) / 3600.0
        + profile.sleep_current_ma * (sleep_ns / _NS) / 3600.0
    )


class _NodeRuntime:
    """Mutable per-node bookkeeping while the event loop runs."""

    def __init__(self, node: Node):
        self.node = node
        self.state = node.state
        self.initial_mah = node.remaining_charge_mah
        self.last_ns = 0
        self.active_ns = 0
        self.sleep_ns = 0
        self.depleted = False
        self.depleted_ns = None
        self.wakes = 0
        self.latencies_s = []
        self.failures = 0

    def settle(self, now_ns, events):
        """Charge the interval since the last settlement; split it at the
        depletion instant if the battery runs out inside it."""
        delta = now_ns - self.last_ns
        if delta <= 0 or self.depleted:
            self.last_ns = max(self.last_ns, now_ns)
            return
        profile = self.node.energy
        current = profile.active_current_ma if self.state == ACTIVE else profile.sleep_current_ma
        consumed = _consumed_mah(profile, self.active_ns, self.sleep_ns)
        budget_mah = self.initial_mah - consumed
        interval_mah = current * (delta / _NS) / 3600.0
        if interval_mah >= budget_mah:
            lived = min(delta, int(budget_mah * 3600.0 * _NS / current))
            self._credit(lived)
            self.depleted = True
            self.depleted_ns = self.last_ns + lived
            events.append(
                SimEvent(self.depleted_ns, f"node{self.node.address}", "node_depleted", "")
            )
            self.last_ns = now_ns
        else:
            self._credit(delta)
            self.last_ns = now_ns

    def _credit(self, duration_ns):
        if self.state == ACTIVE:
            self.active_ns += duration_ns
        else:
            self.sleep_ns += duration_ns


def _received_power_dbm(node: Node, distance_m):
    if node.technology == ACOUSTIC:
        return acoustic.received_power_density_dbm(node.link_params, distance_m)
    if node.technology == OPTICAL:
        return optical.received_power_dbm(node.link_params, distance_m)
    return mi.received_power_dbm(node.link_params, distance_m)


def _min_link_distance(node: Node):
    if node.technology == ACOUSTIC:
        return acoustic.REFERENCE_DISTANCE_M
    if node.technology == MI:
        return node.link_params.reference_distance_m
    return 0.0


def _validate(config: SimConfig):
    if config.horizon_s <= 0.0:
        raise ConfigError(f"horizon must be positive: {config.horizon_s}")
    if config.uav is None:
        raise ConfigError("config needs a uav")
    if config.uav.position.z >= 0.0:
        raise ConfigError("uav below surface: z must be negative")
    if config.uav.rf_range_m <= 0.0:
        raise ConfigError(f"rf range must be positive: {config.uav.rf_range_m}")
    if not config.buoys:
        raise ConfigError("config needs at least one buoy")
    for i, buoy in enumerate(config.buoys):
        if buoy.position.z != 0.0:
            raise ConfigError(f"buoy {i} not at surface: z={buoy.position.z}")
        for tech in buoy.transmitters:
            if tech not in TECHNOLOGIES:
                raise ConfigError(f"buoy {i}: unknown transmitter technology {tech}")
    seen = set()
    for node in config.nodes:
        if not 0 <= node.address <= MAX_ADDRESS:
            raise ConfigError(f"address out of 16-bit range: {node.address}")
        if node.address in seen:
            raise ConfigError(f"duplicate address: {node.address}")
        seen.add(node.address)
        if node.position.z <= 0.0:
            raise ConfigError(f"node above surface: address={node.address} z={node.position.z}")
        if not isinstance(node.link_params, _LINK_TYPES[node.technology]):
            raise ConfigError(
                f"node {node.address}: link params do not match technology {node.technology}"
            )
        if not 0.0 <= node.remaining_charge_mah <= node.energy.battery_capacity_mah:
            raise ConfigError(
                f"node {node.address}: initial charge {node.remaining_charge_mah} outside "
                f"[0, {node.energy.battery_capacity_mah}]"
            )
        d_min = _min_link_distance(node)
        for i, buoy in enumerate(config.buoys):
            if buoy.position.distance_to(node.position) < max(d_min, 1e-9):
                raise ConfigError(
                    f"node {node.address} closer than the link model's reference "
                    f"distance to buoy {i}"
                )
    for req in config.wake_requests:
        if req.time_s < 0.0:
            raise ConfigError(f"wake request before t=0: {req.time_s}")
        if not 0 <= req.target_address <= MAX_ADDRESS:
            raise ConfigError(f"request address out of 16-bit range: {req.target_address}")


def run(config: SimConfig) -> SimReport:
    """Run the event loop to the horizon and assemble the report.

    Protocol outcomes (missed wake-ups, mismatches, depleted targets) are
    report records, never exceptions; only an invalid config raises.
    """
    _validate(config)
    horizon_ns = _to_ns(config.horizon_s)
    runtimes = {node.address: _NodeRuntime(node) for node in config.nodes}
    events = []
    failures = []
    heap = []
    seq = itertools.count()

    def push(time_ns, prio, actor_key, payload):
        heapq.heappush(heap, (time_ns, prio, actor_key, next(seq), payload))

    for req in config.wake_requests:
        push(_to_ns(req.time_s), _PRIO_REQUEST, 0, ("request", req))

    def fail(time_ns, reason, actor, detail):
        failures.append(FailureRecord(time_ns, reason, actor, detail))
        if actor.startswith("node"):
            runtimes[int(actor[4:])].failures += 1

    while heap:
        t, _prio, _key, _seq, payload = heapq.heappop(heap)
        if t > horizon_ns:
            break
        kind = payload[0]

        if kind == "request":
            req = payload[1]
            events.append(SimEvent(t, "uav", "wake_request", f"target={req.target_address}"))
            delivered = False
            for bidx, buoy in enumerate(config.buoys):
                dist = config.uav.position.distance_to(buoy.position)
                if dist <= config.uav.rf_range_m:
                    delivered = True
                    push(
                        t + _to_ns(dist / LIGHT_SPEED_M_S),
                        _PRIO_RF,
                        bidx,
                        ("rf", bidx, req, t),
                    )
            if not delivered:
                fail(t, OUT_OF_RANGE, "uav", "no buoy within rf range")

        elif kind == "rf":
            bidx, req, req_ns = payload[1], payload[2], payload[3]
            buoy = config.buoys[bidx]
            actor = f"buoy{bidx}"
            events.append(SimEvent(t, actor, "rf_arrival", f"target={req.target_address}"))
            target = runtimes.get(req.target_address)
            if target is not None:
                tech = target.node.technology
                if tech in buoy.transmitters:
                    techs = (tech,)
                else:
                    techs = ()
                    fail(
                        t,
                        OUT_OF_RANGE,
                        actor,
                        f"no {tech} transmitter for target {req.target_address}",
                    )
            else:
                # Unknown address: broadcast on everything equipped and let
                # the per-node address filters sort it out.
                techs = tuple(buoy.transmitters)
            for tech in techs:
                events.append(
                    SimEvent(t, actor, "wus_emit", f"tech={tech} target={req.target_address}")
                )
                signal = WakeUpSignal(req.target_address, tech, t / _NS, bidx)
                for node in config.nodes:
                    if node.technology != tech:
                        continue
                    dist = buoy.position.distance_to(node.position)
                    delay_ns = _to_ns(propagation_delay(PROFILES[tech], dist))
                    push(
                        t + delay_ns,
                        _PRIO_WUS,
                        node.address,
                        ("wus", node.address, signal, req_ns),
                    )

        elif kind == "wus":
            addr, signal, req_ns = payload[1], payload[2], payload[3]
            nrt = runtimes[addr]
            actor = f"node{addr}"
            nrt.settle(t, events)
            buoy = config.buoys[signal.origin]
            dist = buoy.position.distance_to(nrt.node.position)
            rx_dbm = _received_power_dbm(nrt.node, dist)
            if nrt.depleted:
                events.append(SimEvent(t, actor, "wus_arrival", "depleted"))
                fail(t, DEPLETED, actor, f"target={signal.target_address}")
            elif rx_dbm < nrt.node.sensitivity_dbm:
                events.append(
                    SimEvent(t, actor, "wus_arrival", f"below_sensitivity rx_dbm={rx_dbm:.3f}")
                )
                fail(
                    t,
                    OUT_OF_RANGE,
                    actor,
                    f"rx {rx_dbm:.3f} dBm below sensitivity {nrt.node.sensitivity_dbm:.3f} dBm",
                )
            elif signal.target_address != addr:
                events.append(
                    SimEvent(t, actor, "wus_arrival", f"address_mismatch target={signal.target_address}")
                )
                fail(t, ADDRESS_MISMATCH, actor, f"target={signal.target_address} local={addr}")
            elif nrt.state == ACTIVE:
                # Fig-2-style interrupt targets a sleeping controller; an
                # already-active node ignores further signals.
                events.append(SimEvent(t, actor, "wus_arrival", "ignored_active"))
            else:
                latency_s = (t - req_ns) / _NS
                nrt.state = ACTIVE
                nrt.wakes += 1
                nrt.latencies_s.append(latency_s)
                events.append(SimEvent(t, actor, "node_wake", f"latency_s={latency_s:.9f}"))
                push(
                    t + _to_ns(nrt.node.energy.active_duration_s),
                    _PRIO_SLEEP,
                    addr,
                    ("sleep", addr),
                )

        else:  # "sleep"
            addr = payload[1]
            nrt = runtimes[addr]
            nrt.settle(t, events)
            if not nrt.depleted and nrt.state == ACTIVE:
                nrt.state = SLEEP
                events.append(SimEvent(t, f"node{addr}", "node_sleep", ""))

    for nrt in runtimes.values():
        nrt.settle(horizon_ns, events)

    # Depletions are discovered while settling, possibly after later-timed
    # entries were already logged; a stable sort restores chronology.
    events.sort(key=lambda e: e.time_ns)

    node_reports = {}
    for addr in sorted(runtimes):
        nrt = runtimes[addr]
        consumed = _consumed_mah(nrt.node.energy, nrt.active_ns, nrt.sleep_ns)
        remaining = nrt.initial_mah - consumed
        if remaining < 0.0:  # sub-ulp overshoot from the depletion split
            remaining = 0.0
        node_reports[addr] = NodeReport(
            address=addr,
            wakes=nrt.wakes,
            wake_latencies_s=list(nrt.latencies_s),
            charge_consumed_mah=consumed,
            remaining_charge_mah=remaining,
            failures=nrt.failures,
            depleted=nrt.depleted,
            depleted_at_s=None if nrt.depleted_ns is None else nrt.depleted_ns / _NS,
            final_state=nrt.state,
        )
    return SimReport(
        horizon_s=config.horizon_s,
        events=events,
        failures=failures,
        nodes=node_reports,
    )


def make_node(technology, address=1, depth_m=10.0, **kwargs):
    """Node at (0, 0, depth) with the reference defaults of a technology."""
    return Node(
        address=address,
        position=Position3D(0.0, 0.0, depth_m),
        technology=technology,
        **kwargs,
    )


def simulate_lifetime(node: Node, wake_rate_per_hour, horizon_hours):
    """Event-driven lifetime in hours for a node woken at a constant rate.

    Places a buoy straight above the node and a UAV 10 m over the buoy,
    schedules one matched request per 3600/rate seconds, and runs to the
    horizon.  Returns the depletion time if the battery dies inside the
    horizon, otherwise extrapolates linearly from the consumed charge.
    """
    if wake_rate_per_hour < 0.0:
        raise PolicyError(f"rate must be non-negative: {wake_rate_per_hour}")
    if wake_rate_per_hour * node.energy.active_duration_s > 3600.0:
        raise PolicyError(
            f"{wake_rate_per_hour} wakes/h of {node.energy.active_duration_s} s "
            f"exceed one hour"
        )
    if horizon_hours <= 0.0:
        raise ConfigError(f"horizon must be positive: {horizon_hours}")
    horizon_s = horizon_hours * 3600.0
    requests = []
    if wake_rate_per_hour > 0.0:
        interval_s = 3600.0 / wake_rate_per_hour
        count = int(math.floor((horizon_s - 1e-6) / interval_s)) + 1
        requests = [WakeRequest(k * interval_s, node.address) for k in range(count)]
    config = SimConfig(
        uav=Uav(Position3D(node.position.x, node.position.y, -10.0), rf_range_m=100.0),
        buoys=[Buoy(Position3D(node.position.x, node.position.y, 0.0))],
        nodes=[node],
        wake_requests=requests,
        horizon_s=horizon_s,
    )
    report = run(config)
    nrep = report.nodes[node.address]
    if nrep.depleted:
        return nrep.depleted_at_s / 3600.0
    initial = node.remaining_charge_mah
    return horizon_hours * initial / nrep.charge_consumed_mah
