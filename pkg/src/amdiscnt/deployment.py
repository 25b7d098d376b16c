"""Field construction: region lookup, node placement, and initial energies.

The field is a disk of radius ``r_outer`` around the base station. Nodes
inside ``r_inner`` form the inner region; the annulus between the radii is
cut into eight 45-degree wedges. Placement draws the angle first and the
radial variate second, so a fixed seed reproduces positions bit-exactly.

Two radial laws are supported: ``uniform_area`` spreads nodes with uniform
density over their region, ``uniform_radius`` draws the radius itself
uniformly (which concentrates nodes toward the centre of the region).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from random import Random

from .model import (
    INNER,
    N_SECTORS,
    SECTOR_ANGLE,
    Geometry,
    HeterogeneitySpec,
    NetworkConfig,
    Node,
    Position,
    RegionId,
)

TWO_PI = 2.0 * math.pi


class OutOfFieldError(ValueError):
    """A position outside the outer circle has no region."""


class DegenerateDeploymentError(ValueError):
    """The node budget leaves at least one region empty."""


@dataclass(frozen=True)
class DeploymentResult:
    nodes: list[Node]
    total_initial_energy: float
    per_region_counts: dict[RegionId, int]


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def region_of(position: Position, geometry: Geometry) -> RegionId:
    """Map a position to its region.

    Raises :class:`OutOfFieldError` beyond ``r_outer``. An angle that lands
    exactly on the full-circle boundary wraps to sector 0.
    """
    r = position.radius()
    if r > geometry.r_outer:
        raise OutOfFieldError(
            f"position at radius {r:.6g} lies outside the field radius {geometry.r_outer:.6g}")
    if r <= geometry.r_inner:
        return INNER
    theta = math.atan2(position.y, position.x) % TWO_PI
    sector = int(theta // SECTOR_ANGLE) % N_SECTORS
    return RegionId(sector)


def sample_inner_position(rng: Random, geometry: Geometry,
                          mode: str = "uniform_area") -> Position:
    """Draw a position in the inner disk; the radius is never exactly 0."""
    theta = rng.random() * TWO_PI
    u = 1.0 - rng.random()  # (0, 1]
    if mode == "uniform_radius":
        r = u * geometry.r_inner
    else:
        r = geometry.r_inner * math.sqrt(u)
    return Position(r * math.cos(theta), r * math.sin(theta))


def sample_outer_position(rng: Random, geometry: Geometry, sector: int,
                          mode: str = "uniform_area") -> Position:
    """Draw a position in one outer wedge, strictly outside the inner disk."""
    if not 0 <= sector < N_SECTORS:
        raise ValueError(f"sector must be in [0, {N_SECTORS - 1}], got {sector}")
    theta = (sector + rng.random()) * SECTOR_ANGLE
    u = 1.0 - rng.random()  # (0, 1]
    if mode == "uniform_radius":
        r = geometry.r_inner + u * geometry.annulus_width
    else:
        r = math.sqrt(geometry.r_inner ** 2 + u * (geometry.r_outer ** 2 - geometry.r_inner ** 2))
    return Position(r * math.cos(theta), r * math.sin(theta))


def region_node_counts(n_nodes: int, inner_fraction: float) -> tuple[int, list[int]]:
    """Split the node budget: the inner region takes its rounded share and
    the rest spreads as evenly as possible over the sectors, any leftover
    going one per sector starting at sector 0."""
    inner = _round_half_up(inner_fraction * n_nodes)
    base, leftover = divmod(n_nodes - inner, N_SECTORS)
    sectors = [base + 1 if s < leftover else base for s in range(N_SECTORS)]
    return inner, sectors


def assign_initial_energy(count: int, spec: HeterogeneitySpec,
                          rng: Random) -> list[tuple[float, float]]:
    """Return ``(initial_energy, tier_scale)`` per node index.

    ``tier_scale`` is the extra-energy ratio: a node's battery is
    ``e0 * (1 + tier_scale)``. Tiered modes pick their subsets as a uniform
    random sample of node indices; super nodes stack ``beta`` on top of the
    advanced ``alpha`` so the realised total matches the closed form.
    """
    e0 = spec.e0
    if spec.mode == "homogeneous":
        return [(e0, 0.0) for _ in range(count)]
    if spec.mode == "two_level":
        n_advanced = _round_half_up(spec.m * count)
        advanced = set(rng.sample(range(count), n_advanced))
        return [(e0 * (1.0 + spec.alpha), spec.alpha) if i in advanced else (e0, 0.0)
                for i in range(count)]
    if spec.mode == "three_level":
        n_upper = _round_half_up(spec.m * count)
        n_super = _round_half_up(spec.m * spec.m0 * count)
        chosen = rng.sample(range(count), n_upper)
        super_ids = set(chosen[:n_super])
        advanced_ids = set(chosen[n_super:])
        out = []
        for i in range(count):
            if i in super_ids:
                scale = spec.alpha + spec.beta
            elif i in advanced_ids:
                scale = spec.alpha
            else:
                scale = 0.0
            out.append((e0 * (1.0 + scale), scale))
        return out
    if spec.mode == "multi_level":
        out = []
        for _ in range(count):
            t = 1.0 - rng.random()  # (0, 1]
            scale = t * spec.alpha_max
            out.append((e0 * (1.0 + scale), scale))
        return out
    raise ValueError(f"unknown heterogeneity mode {spec.mode!r}")


def theoretical_total_energy(count: int, spec: HeterogeneitySpec) -> float:
    """Closed-form network energy (the expectation, for ``multi_level``)."""
    e0 = spec.e0
    if spec.mode == "homogeneous":
        return count * e0
    if spec.mode == "two_level":
        return count * e0 * (1.0 + spec.m * spec.alpha)
    if spec.mode == "three_level":
        return count * e0 * (1.0 + spec.m * (spec.alpha + spec.m0 * spec.beta))
    if spec.mode == "multi_level":
        return count * e0 * (1.0 + spec.alpha_max / 2.0)
    raise ValueError(f"unknown heterogeneity mode {spec.mode!r}")


def deploy(config: NetworkConfig, rng: Random) -> DeploymentResult:
    """Build the initial network.

    Nodes are placed inner region first, then sectors 0..7, with ids
    assigned sequentially from 0; energies are drawn afterwards in one
    block. Raises :class:`DegenerateDeploymentError` when any region would
    receive no node.
    """
    inner_count, sector_counts = region_node_counts(config.n_nodes, config.inner_fraction)
    if inner_count <= 0 or any(c <= 0 for c in sector_counts):
        raise DegenerateDeploymentError(
            f"{config.n_nodes} nodes with inner fraction {config.inner_fraction:.4g} "
            f"leave at least one region empty (inner={inner_count}, sectors={sector_counts})")

    geometry = config.geometry
    positions = [sample_inner_position(rng, geometry, config.deployment_mode)
                 for _ in range(inner_count)]
    for sector in range(N_SECTORS):
        positions.extend(
            sample_outer_position(rng, geometry, sector, config.deployment_mode)
            for _ in range(sector_counts[sector]))

    energies = assign_initial_energy(config.n_nodes, config.heterogeneity, rng)
    nodes = [
        Node(id=i, position=pos, region=region_of(pos, geometry),
             initial_energy=e, residual_energy=e, alive=True, tier_scale=scale)
        for i, (pos, (e, scale)) in enumerate(zip(positions, energies))
    ]
    counts = dict(Counter(node.region for node in nodes))
    total = math.fsum(e for e, _ in energies)
    return DeploymentResult(nodes=nodes, total_initial_energy=total, per_region_counts=counts)
