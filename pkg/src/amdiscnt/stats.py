"""Multi-run aggregation: per-round means with normal confidence bands.

Spread is the population standard deviation (divide by N, not N-1), and
the band is ``mean +/- z * sigma / sqrt(n)`` with the two-sided normal
quantile for the requested confidence. Runs of different lengths are
aligned by padding the shorter histories with their terminal state: the
alive/dead census and residual energy freeze at their final values while
per-round traffic, head counts and delay pad as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist

from .engine import RoundMetrics, SimulationResult

METRIC_NAMES = ("alive", "dead", "sent", "received", "ch", "delay", "energy")


def _metric_value(m: RoundMetrics, name: str) -> float:
    if name == "alive":
        return float(m.alive)
    if name == "dead":
        return float(m.dead)
    if name == "sent":
        return float(m.packets_sent_to_bs)
    if name == "received":
        return float(m.packets_received_by_bs)
    if name == "ch":
        return float(m.ch_count)
    if name == "delay":
        return m.mean_delay
    if name == "energy":
        return m.total_residual_energy
    raise ValueError(f"unknown metric {name!r}")


def population_stddev(values: list[float]) -> float:
    """Standard deviation with the full-population normaliser."""
    if not values:
        raise ValueError("population_stddev needs at least one value")
    n = len(values)
    mean = math.fsum(values) / n
    variance = math.fsum((v - mean) ** 2 for v in values) / n
    return math.sqrt(variance)


def confidence_interval(values: list[float], confidence: float = 0.95) -> tuple[float, float]:
    """Two-sided normal interval around the sample mean."""
    if not 0.0 < confidence < 1.0:
        raise ValueError(f"confidence must lie in (0, 1), got {confidence}")
    if not values:
        raise ValueError("confidence_interval needs at least one value")
    n = len(values)
    mean = math.fsum(values) / n
    z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
    half = z * population_stddev(values) / math.sqrt(n)
    return (mean - half, mean + half)


@dataclass(frozen=True)
class MilestoneSummary:
    """Mean milestones and totals across the aggregated runs.

    Milestones a run never reached enter the mean at the aggregation
    horizon, so these are lower bounds when any run outlived the horizon.
    """

    fnd_mean: float
    hnd_mean: float
    lnd_mean: float
    sent_total_mean: float
    received_total_mean: float


@dataclass(frozen=True)
class MultiRunStats:
    runs: int
    rounds: int
    confidence: float
    per_round_mean: dict[str, tuple[float, ...]]
    per_round_ci: dict[str, tuple[tuple[float, float], ...]]
    milestones: MilestoneSummary


def _padded_value(run: SimulationResult, round_index: int, name: str) -> float:
    if round_index < run.rounds:
        return _metric_value(run.per_round[round_index], name)
    last = run.per_round[-1]
    if name in ("alive", "dead", "energy"):
        return _metric_value(last, name)
    return 0.0


def aggregate_runs(results: list[SimulationResult], confidence: float = 0.95,
                   rounds: int | None = None) -> MultiRunStats:
    """Combine same-experiment runs into per-round means and bands."""
    if not results:
        raise ValueError("aggregate_runs needs at least one run")
    if len({r.config.max_rounds for r in results}) > 1:
        raise ValueError("runs were made with different horizons; they cannot be aggregated")
    if len({r.protocol for r in results}) > 1:
        raise ValueError("runs were made with different protocols; they cannot be aggregated")
    longest = max(r.rounds for r in results)
    if rounds is None:
        rounds = longest
    elif rounds < longest:
        raise ValueError(f"horizon {rounds} is shorter than the longest run ({longest})")
    if rounds > 0 and any(r.rounds == 0 for r in results):
        raise ValueError("cannot pad a zero-round run to a longer horizon")

    per_round_mean: dict[str, tuple[float, ...]] = {}
    per_round_ci: dict[str, tuple[tuple[float, float], ...]] = {}
    for name in METRIC_NAMES:
        means = []
        cis = []
        for round_index in range(rounds):
            values = [_padded_value(run, round_index, name) for run in results]
            means.append(math.fsum(values) / len(values))
            cis.append(confidence_interval(values, confidence))
        per_round_mean[name] = tuple(means)
        per_round_ci[name] = tuple(cis)

    n = len(results)

    def milestone_mean(pick) -> float:
        return math.fsum(float(pick(r) if pick(r) is not None else rounds) for r in results) / n

    milestones = MilestoneSummary(
        fnd_mean=milestone_mean(lambda r: r.first_node_death),
        hnd_mean=milestone_mean(lambda r: r.half_nodes_death),
        lnd_mean=milestone_mean(lambda r: r.last_node_death),
        sent_total_mean=math.fsum(float(r.cumulative_sent) for r in results) / n,
        received_total_mean=math.fsum(float(r.cumulative_received) for r in results) / n,
    )
    return MultiRunStats(
        runs=n,
        rounds=rounds,
        confidence=confidence,
        per_round_mean=per_round_mean,
        per_round_ci=per_round_ci,
        milestones=milestones,
    )
