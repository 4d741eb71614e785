"""Secrecy outage probability and its bridge to the leakage closed form.

In the infinite-blocklength regime a secrecy outage occurs when the
eavesdropper capacity exceeds the redundancy rate.  Under Rayleigh
fading the outage probability has a one-line closed form, and for one
particular redundancy rate it coincides exactly with the saddle-point
average-leakage approximation; ``bridging_redundancy_rate`` computes
that rate.  Rayleigh only; other fading families are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fbl import FblParams, rate_offset

__all__ = ["SopParams", "sop", "bridging_redundancy_rate"]


@dataclass(frozen=True)
class SopParams:
    """Redundancy rate and mean eavesdropper SNR.

    A negative redundancy rate is permitted: it maps to the regime
    where the outage probability clamps to 1, mirroring the
    negative-saddle clamp of the leakage closed form.
    """

    redundancy_rate: float
    gbar_e: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.redundancy_rate):
            raise ValueError(f"redundancy_rate must be finite, got {self.redundancy_rate!r}")
        if not (math.isfinite(self.gbar_e) and self.gbar_e > 0.0):
            raise ValueError(f"gbar_e must be positive and finite, got {self.gbar_e!r}")


def sop(p: SopParams) -> float:
    """Secrecy outage probability, clamped to 1 for negative rates."""
    return min(1.0, math.exp((1.0 - 2.0 ** p.redundancy_rate) / p.gbar_e))


def bridging_redundancy_rate(params: FblParams, gamma_b: float) -> float:
    """Redundancy rate at which the outage probability equals the
    saddle-point average leakage.

    May be negative; that corresponds to the clamped regime on both
    sides of the identity.
    """
    if gamma_b < 0.0:
        raise ValueError("gamma_b must be non-negative")
    return math.log2(1.0 + gamma_b) - rate_offset(params, gamma_b)
