"""Per-realization finite-blocklength secrecy quantities.

Everything here is conditional on one instantaneous SNR pair: channel
dispersion, secrecy capacity, the rate offset that reliability and the
secrecy rate jointly impose, and the information leakage of a single
packet under the best coding strategy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import Realization
from .qfunc import q_func, q_inv

__all__ = [
    "LOG2E",
    "FblParams",
    "SingularInputError",
    "dispersion",
    "secrecy_capacity",
    "rate_offset",
    "instantaneous_leakage",
]

LOG2E = math.log2(math.e)


class SingularInputError(ValueError):
    """An input sits on a singular point of the formula being evaluated."""


@dataclass(frozen=True)
class FblParams:
    """Packet parameters: payload bits, blocklength, target error rate.

    ``n_max`` is the largest blocklength the deployment tolerates
    (a latency budget); design routines never search beyond it.
    """

    m: int
    n: int
    eps: float
    n_max: int = 1000

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if not isinstance(self.n, int) or not isinstance(self.n_max, int):
            raise ValueError("n and n_max must be integers")
        if not 1 <= self.n <= self.n_max:
            raise ValueError(f"blocklength must satisfy 1 <= n <= n_max, got n={self.n}, n_max={self.n_max}")
        if not (math.isfinite(self.eps) and 0.0 < self.eps < 1.0):
            raise ValueError(f"eps must lie in (0, 1), got {self.eps!r}")

    @property
    def secrecy_rate(self) -> float:
        """Payload bits per channel use."""
        return self.m / self.n


def dispersion(gamma: float) -> float:
    """Channel dispersion at SNR ``gamma`` in squared bits per channel use.

    Zero at zero SNR, strictly increasing, and bounded above by
    ``LOG2E ** 2`` in the high-SNR limit.
    """
    if gamma < 0.0:
        raise ValueError(f"dispersion requires gamma >= 0, got {gamma!r}")
    return (LOG2E * LOG2E) * gamma * (gamma + 2.0) / ((gamma + 1.0) * (gamma + 1.0))


def secrecy_capacity(gamma_b: float, gamma_e: float) -> float:
    """Infinite-blocklength secrecy capacity of the SNR pair.

    May be negative when the eavesdropper sees the better channel;
    no clipping is applied here.
    """
    if gamma_b < 0.0 or gamma_e < 0.0:
        raise ValueError("SNRs must be non-negative")
    return math.log2(1.0 + gamma_b) - math.log2(1.0 + gamma_e)


def rate_offset_values(n_values, m: float, eps: float, gamma_b: float):
    """Rate offset over one or many blocklengths (vectorized core).

    The offset is the reliability back-off plus the secrecy rate:
    sqrt(V_b / n) * Q^{-1}(eps) + m / n.  Scalar wrappers and the
    blocklength-design scans share this single code path so their
    results agree bit for bit.
    """
    n_values = np.asarray(n_values, dtype=float)
    return np.sqrt(dispersion(gamma_b) / n_values) * q_inv(eps) + m / n_values


def rate_offset(params: FblParams, gamma_b: float) -> float:
    """Rate offset for one parameter set and legitimate SNR."""
    return float(rate_offset_values(float(params.n), params.m, params.eps, gamma_b))


def instantaneous_leakage(params: FblParams, real: Realization) -> float:
    """Information leakage of a single packet at a fixed SNR pair.

    Raises
    ------
    SingularInputError
        If ``gamma_e`` is exactly zero: the eavesdropper dispersion
        vanishes there and the leakage limit depends on the approach
        direction, so the point is rejected rather than patched.
    """
    if real.gamma_e == 0.0:
        raise SingularInputError("gamma_e = 0 is a singular point of the leakage formula")
    v_e = dispersion(real.gamma_e)
    gap = secrecy_capacity(real.gamma_b, real.gamma_e) - rate_offset(params, real.gamma_b)
    return q_func(math.sqrt(params.n / v_e) * gap)
