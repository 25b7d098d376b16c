"""Per-round role assignment and routing for the three protocols.

``amdiscnt`` elects the highest-energy alive node of each outer wedge as
that wedge's cluster head; inner nodes talk straight to the base station
and may relay cluster aggregates. ``leach`` rotates cluster headship with
the classic random threshold; ``deec`` weights that threshold by each
node's residual energy relative to the alive-network average. Members in
the baselines join the nearest head anywhere on the field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from random import Random

from .energy import tx_cost
from .model import Node, RadioParams

BS_ID = -1  # sentinel terminating every route

PROTOCOL_NAMES = ("amdiscnt", "leach", "deec")


class Role(Enum):
    CLUSTER_HEAD = "cluster_head"
    MEMBER = "member"
    DIRECT_TO_BS = "direct_to_bs"
    IDLE = "idle"


@dataclass(frozen=True)
class ProtocolKind:
    name: str
    p_opt: float = 0.1

    def __post_init__(self):
        if self.name not in PROTOCOL_NAMES:
            raise ValueError(f"unknown protocol {self.name!r}; expected one of {PROTOCOL_NAMES}")
        if not 0.0 < self.p_opt < 1.0:
            raise ValueError(f"p_opt must lie in (0, 1), got {self.p_opt}")


@dataclass(frozen=True)
class TransmissionPlan:
    """One round's roles and routes.

    ``routes`` maps each cluster head to the hops its aggregate takes
    after leaving it, always ending with :data:`BS_ID`. Inner nodes that
    appear as intermediate hops keep their DIRECT_TO_BS role for their own
    packet and additionally act as relays.
    """

    roles: dict[int, Role]
    member_ch: dict[int, int]
    routes: dict[int, tuple[int, ...]]
    round_index: int = 0

    @property
    def ch_count(self) -> int:
        return len(self.routes)

    @property
    def relay_ids(self) -> frozenset[int]:
        return frozenset(hop for route in self.routes.values() for hop in route if hop != BS_ID)


class DistanceCache:
    """Pairwise and to-base-station distances for a fixed placement.

    Node ids must be 0..n-1 (deployment order). ``link(a, b)`` accepts
    :data:`BS_ID` as the target.
    """

    def __init__(self, nodes: list[Node]):
        positions = sorted((n.id, n.position) for n in nodes)
        if [i for i, _ in positions] != list(range(len(nodes))):
            raise ValueError("node ids must be contiguous from 0")
        pts = [p for _, p in positions]
        self.to_bs = [p.radius() for p in pts]
        self._matrix = [[math.hypot(a.x - b.x, a.y - b.y) for b in pts] for a in pts]

    def between(self, a: int, b: int) -> float:
        return self._matrix[a][b]

    def link(self, a: int, b: int) -> float:
        if b == BS_ID:
            return self.to_bs[a]
        return self._matrix[a][b]


def elect_chs_amdiscnt(nodes: list[Node]) -> set[int]:
    """Pick the alive node with the most residual energy in each outer
    wedge; ties go to the lower id. Needs no randomness."""
    best: dict[int, Node] = {}
    for node in nodes:
        if not node.alive or node.region.is_inner:
            continue
        sector = node.region.sector
        current = best.get(sector)
        if (current is None
                or node.residual_energy > current.residual_energy
                or (node.residual_energy == current.residual_energy and node.id < current.id)):
            best[sector] = node
    return {node.id for node in best.values()}


def leach_threshold(round_index: int, p_opt: float) -> float:
    """Election threshold at a given position inside the rotation epoch."""
    epoch = int(1.0 / p_opt)
    return p_opt / (1.0 - p_opt * (round_index % epoch))


def elect_chs_leach(nodes: list[Node], round_index: int, p_opt: float, rng: Random,
                    history: dict[int, int] | None = None) -> set[int]:
    """Classic rotating election.

    Each alive node that has not served during the current epoch draws a
    uniform number and elects itself when the draw falls under the epoch
    threshold. ``history`` (node id -> last election round) carries the
    rotation state between rounds and is updated in place.
    """
    if history is None:
        history = {}
    epoch = int(1.0 / p_opt)
    epoch_start = round_index - (round_index % epoch)
    threshold = leach_threshold(round_index, p_opt)
    elected = set()
    for node in nodes:
        if not node.alive:
            continue
        last = history.get(node.id)
        if last is not None and last >= epoch_start:
            continue
        if rng.random() < threshold:
            elected.add(node.id)
            history[node.id] = round_index
    return elected


def deec_probability(residual: float, average: float, p_opt: float) -> float:
    """Election probability scaled by the node's share of the average
    residual energy, capped at 1."""
    return min(1.0, p_opt * residual / average)


def elect_chs_deec(nodes: list[Node], round_index: int, p_opt: float, rng: Random,
                   history: dict[int, int] | None = None) -> set[int]:
    """Energy-weighted rotating election.

    Like the classic rotation, but each node's probability (and therefore
    its personal epoch length) scales with residual energy over the exact
    mean residual energy of the alive nodes this round.
    """
    if history is None:
        history = {}
    alive = [node for node in nodes if node.alive]
    if not alive:
        return set()
    average = math.fsum(node.residual_energy for node in alive) / len(alive)
    elected = set()
    for node in alive:
        p_i = deec_probability(node.residual_energy, average, p_opt)
        if p_i <= 0.0:
            continue
        epoch = max(1, int(1.0 / p_i))
        epoch_start = round_index - (round_index % epoch)
        last = history.get(node.id)
        if last is not None and last >= epoch_start:
            continue
        threshold = p_i / (1.0 - p_i * (round_index % epoch))
        if rng.random() < threshold:
            elected.add(node.id)
            history[node.id] = round_index
    return elected


def select_relay(ch: Node, nodes: list[Node], radio: RadioParams,
                 distances: DistanceCache | None = None) -> tuple[int, ...]:
    """Route a cluster head's aggregate toward the base station.

    Candidate relays are the alive inner nodes; the one minimising the
    two-leg radio cost wins (lowest id on a cost tie). Direct transmission
    is kept whenever it costs no more than the best relayed path, and when
    no inner node is alive.
    """
    bits = radio.packet_bits
    if distances is None:
        direct = tx_cost(bits, ch.position.radius(), radio)
    else:
        direct = tx_cost(bits, distances.to_bs[ch.id], radio)
    best_id = None
    best_cost = math.inf
    for node in nodes:
        if not node.alive or not node.region.is_inner or node.id == ch.id:
            continue
        if distances is None:
            d_ch = ch.position.distance_to(node.position)
            d_bs = node.position.radius()
        else:
            d_ch = distances.between(ch.id, node.id)
            d_bs = distances.to_bs[node.id]
        cost = tx_cost(bits, d_ch, radio) + tx_cost(bits, d_bs, radio)
        if cost < best_cost:
            best_cost = cost
            best_id = node.id
    if best_id is None or direct <= best_cost:
        return (BS_ID,)
    return (best_id, BS_ID)


def build_plan(nodes: list[Node], ch_set: set[int], kind: ProtocolKind,
               radio: RadioParams, round_index: int = 0,
               distances: DistanceCache | None = None) -> TransmissionPlan:
    """Assign every node a role for the round and route the cluster heads.

    ``amdiscnt``: inner alive nodes send directly; outer alive non-heads
    join their own wedge's head and idle when the wedge has none this
    round; heads route via :func:`select_relay`. Baselines: every alive
    non-head joins the nearest head (lower id on a distance tie) and heads
    go single-hop to the base station; with no heads at all, everyone
    falls back to direct transmission.
    """
    roles: dict[int, Role] = {}
    member_ch: dict[int, int] = {}
    routes: dict[int, tuple[int, ...]] = {}
    by_id = {node.id: node for node in nodes}

    if kind.name == "amdiscnt":
        sector_ch = {by_id[ch_id].region.sector: ch_id for ch_id in ch_set}
        for node in nodes:
            if not node.alive:
                roles[node.id] = Role.IDLE
            elif node.id in ch_set:
                roles[node.id] = Role.CLUSTER_HEAD
            elif node.region.is_inner:
                roles[node.id] = Role.DIRECT_TO_BS
            else:
                ch_id = sector_ch.get(node.region.sector)
                if ch_id is None:
                    roles[node.id] = Role.IDLE
                else:
                    roles[node.id] = Role.MEMBER
                    member_ch[node.id] = ch_id
        for ch_id in sorted(ch_set):
            routes[ch_id] = select_relay(by_id[ch_id], nodes, radio, distances)
        return TransmissionPlan(roles, member_ch, routes, round_index)

    heads = sorted(ch_set)
    for node in nodes:
        if not node.alive:
            roles[node.id] = Role.IDLE
        elif node.id in ch_set:
            roles[node.id] = Role.CLUSTER_HEAD
        elif not heads:
            roles[node.id] = Role.DIRECT_TO_BS
        else:
            if distances is None:
                nearest = min(heads,
                              key=lambda h: (node.position.distance_to(by_id[h].position), h))
            else:
                nearest = min(heads, key=lambda h: (distances.between(node.id, h), h))
            roles[node.id] = Role.MEMBER
            member_ch[node.id] = nearest
    for ch_id in heads:
        routes[ch_id] = (BS_ID,)
    return TransmissionPlan(roles, member_ch, routes, round_index)
