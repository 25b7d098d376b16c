"""First-order radio dissipation model.

Transmitting ``k`` bits over distance ``d`` costs the electronics energy
plus an amplifier term that switches from ``d^2`` (free space) to ``d^4``
(multipath) at the crossover distance where both terms are equal.
"""

from __future__ import annotations

import math

from .model import RadioParams


def crossover_distance(radio: RadioParams) -> float:
    """Distance at which the free-space and multipath amplifier terms meet."""
    return math.sqrt(radio.e_fs / radio.e_mp)


def tx_cost(bits: int, distance: float, radio: RadioParams) -> float:
    """Energy to transmit ``bits`` over ``distance`` metres."""
    if distance < crossover_distance(radio):
        return bits * (radio.e_elec + radio.e_fs * distance * distance)
    return bits * (radio.e_elec + radio.e_mp * distance ** 4)


def rx_cost(bits: int, radio: RadioParams) -> float:
    """Energy to receive ``bits``."""
    return bits * radio.e_elec


def aggregation_cost(bits: int, signal_count: int, radio: RadioParams) -> float:
    """Energy for a cluster head to fuse ``signal_count`` incoming signals
    (its own packet included) of ``bits`` each."""
    return bits * radio.e_da * signal_count
