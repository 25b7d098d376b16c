"""Deterministic round engine.

Each round runs three phases in fixed id order: members transmit to their
cluster heads, heads aggregate and forward along their routes (paying
relay receive costs on the way), then direct senders transmit to the base
station. Every energy charge is attempted against the node's remaining
budget: a node that cannot cover a cost spends what it has, dies, and the
packet involved is lost; a node left at exactly zero completes the action
first and then dies. All randomness comes from the single ``Random``
instance owned by the run, and it is consulted only when a lossy link is
configured, so equal seeds give byte-identical histories.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .deployment import deploy
from .energy import aggregation_cost, rx_cost, tx_cost
from .model import ConfigurationError, NetworkConfig, Node, validate_config
from .protocols import (
    BS_ID,
    DistanceCache,
    ProtocolKind,
    Role,
    TransmissionPlan,
    build_plan,
    elect_chs_amdiscnt,
    elect_chs_deec,
    elect_chs_leach,
)


@dataclass(frozen=True)
class RoundMetrics:
    round_index: int
    alive: int
    dead: int
    packets_sent_to_bs: int
    packets_received_by_bs: int
    ch_count: int
    mean_delay: float
    total_residual_energy: float
    energy_spent: float


@dataclass(frozen=True)
class SimulationResult:
    """Full per-round history of one seeded run.

    Milestones are counted in completed rounds (first round is 1) and are
    ``None`` when the event never happened within the horizon.
    """

    config: NetworkConfig
    protocol: str
    per_round: tuple[RoundMetrics, ...]
    first_node_death: int | None
    half_nodes_death: int | None
    last_node_death: int | None

    @property
    def rounds(self) -> int:
        return len(self.per_round)

    @property
    def cumulative_sent(self) -> int:
        return sum(m.packets_sent_to_bs for m in self.per_round)

    @property
    def cumulative_received(self) -> int:
        return sum(m.packets_received_by_bs for m in self.per_round)


def _charge(node: Node, amount: float, ledger: list[float]) -> bool:
    """Debit ``amount`` if the node can cover it.

    Covering the cost exactly still completes the action; the node dies
    afterwards. An uncoverable cost drains the node, kills it, and fails.
    """
    if amount <= node.residual_energy:
        node.residual_energy -= amount
        ledger.append(amount)
        if node.residual_energy == 0.0:
            node.alive = False
        return True
    ledger.append(node.residual_energy)
    node.residual_energy = 0.0
    node.alive = False
    return False


def run_round(nodes: list[Node], plan: TransmissionPlan, config: NetworkConfig,
              rng: Random, distances: DistanceCache | None = None) -> RoundMetrics:
    """Execute one transmission round, mutating node energies in place."""
    radio = config.radio
    bits = radio.packet_bits
    drop_p = config.link_drop_probability
    delay = config.delay
    by_id = {node.id: node for node in nodes}

    def dist(a: int, b: int) -> float:
        if distances is not None:
            return distances.link(a, b)
        if b == BS_ID:
            return by_id[a].position.radius()
        return by_id[a].position.distance_to(by_id[b].position)

    def link_up() -> bool:
        return drop_p <= 0.0 or rng.random() >= drop_p

    ledger: list[float] = []
    delivered_delays: list[float] = []
    sent = 0
    received = 0
    arrivals: dict[int, int] = {}
    member_delay: dict[int, float] = {}

    # phase 1: members transmit to their cluster heads
    for member_id in sorted(plan.member_ch):
        member = by_id[member_id]
        if not member.alive:
            continue
        ch_id = plan.member_ch[member_id]
        d = dist(member_id, ch_id)
        if not _charge(member, tx_cost(bits, d, radio), ledger):
            continue
        if not link_up():
            continue
        ch = by_id[ch_id]
        if not ch.alive:
            continue
        if not _charge(ch, rx_cost(bits, radio), ledger):
            continue
        arrivals[ch_id] = arrivals.get(ch_id, 0) + 1
        member_delay[ch_id] = max(member_delay.get(ch_id, 0.0), delay.link_delay(d))

    # phase 2: cluster heads aggregate and forward along their routes
    for ch_id in sorted(plan.routes):
        ch = by_id[ch_id]
        if not ch.alive:
            continue
        signals = arrivals.get(ch_id, 0) + 1  # members plus the head's own reading
        if not _charge(ch, aggregation_cost(bits, signals, radio), ledger):
            continue
        packet_delay = member_delay.get(ch_id, 0.0)
        sender = ch
        for hop in plan.routes[ch_id]:
            if not sender.alive:
                break
            d = dist(sender.id, hop)
            if not _charge(sender, tx_cost(bits, d, radio), ledger):
                break
            if hop == BS_ID:
                sent += 1
                if link_up():
                    received += 1
                    delivered_delays.append(packet_delay + delay.link_delay(d))
                break
            if not link_up():
                break
            relay = by_id[hop]
            if not relay.alive:
                break
            if not _charge(relay, rx_cost(bits, radio), ledger):
                break
            packet_delay += delay.link_delay(d)
            sender = relay

    # phase 3: direct senders transmit their own readings
    for node_id in sorted(plan.roles):
        if plan.roles[node_id] is not Role.DIRECT_TO_BS:
            continue
        node = by_id[node_id]
        if not node.alive:
            continue
        d = dist(node_id, BS_ID)
        if not _charge(node, tx_cost(bits, d, radio), ledger):
            continue
        sent += 1
        if link_up():
            received += 1
            delivered_delays.append(delay.link_delay(d))

    alive = sum(1 for node in nodes if node.alive)
    mean_delay = math.fsum(delivered_delays) / len(delivered_delays) if delivered_delays else 0.0
    return RoundMetrics(
        round_index=plan.round_index,
        alive=alive,
        dead=len(nodes) - alive,
        packets_sent_to_bs=sent,
        packets_received_by_bs=received,
        ch_count=plan.ch_count,
        mean_delay=mean_delay,
        total_residual_energy=math.fsum(node.residual_energy for node in nodes),
        energy_spent=math.fsum(ledger),
    )


def _elect(nodes: list[Node], kind: ProtocolKind, round_index: int, rng: Random,
           history: dict[int, int]) -> set[int]:
    if kind.name == "amdiscnt":
        return elect_chs_amdiscnt(nodes)
    if kind.name == "leach":
        return elect_chs_leach(nodes, round_index, kind.p_opt, rng, history)
    return elect_chs_deec(nodes, round_index, kind.p_opt, rng, history)


def run_simulation(config: NetworkConfig, kind: ProtocolKind) -> SimulationResult:
    """Deploy the network and run rounds until the horizon or total death."""
    problems = validate_config(config)
    if problems:
        raise ConfigurationError("; ".join(problems))
    rng = Random(config.seed)
    placement = deploy(config, rng)
    nodes = list(placement.nodes)
    distances = DistanceCache(nodes)
    history: dict[int, int] = {}
    n = len(nodes)

    per_round: list[RoundMetrics] = []
    fnd = hnd = lnd = None
    for round_index in range(config.max_rounds):
        if not any(node.alive for node in nodes):
            break
        ch_set = _elect(nodes, kind, round_index, rng, history)
        plan = build_plan(nodes, ch_set, kind, config.radio, round_index, distances)
        metrics = run_round(nodes, plan, config, rng, distances)
        per_round.append(metrics)
        completed = round_index + 1
        if fnd is None and metrics.dead >= 1:
            fnd = completed
        if hnd is None and 2 * metrics.dead >= n:
            hnd = completed
        if lnd is None and metrics.dead == n:
            lnd = completed
    return SimulationResult(
        config=config,
        protocol=kind.name,
        per_round=tuple(per_round),
        first_node_death=fnd,
        half_nodes_death=hnd,
        last_node_death=lnd,
    )
