"""Seeded Monte Carlo estimation of the average information leakage.

Determinism contract: the estimate is a pure function of (seed,
samples, mode, parameters).  Samples are organized in fixed-size blocks
and each block draws from its own counter-based Philox stream keyed by
(seed, block index), so the draw at a given sample index never depends
on thread scheduling.  Block partial sums are combined in block order,
which makes the floating-point result bit-identical for any worker
count.

Sampling is inverse-CDF (-gbar * ln(u)): exact for the exponential law
and branch-free.  The uniform draw is shifted half an ulp into the open
interval so no sample is ever 0 or infinite.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .channel import ChannelStats
from .fbl import FblParams, rate_offset
from .leakage import METHOD_MC, LeakageEstimate
from .qfunc import q_inv

__all__ = ["MODE_CONDITIONAL", "MODE_ERGODIC", "McConfig", "sample_snr", "ail_mc"]

MODE_CONDITIONAL = "conditional"
MODE_ERGODIC = "ergodic"

_BLOCK = 1 << 16
# random() yields multiples of 2^-53 in [0, 1); the half-step shift
# moves the lattice strictly inside (0, 1).
_OPEN_SHIFT = 2.0 ** -54


@dataclass(frozen=True)
class McConfig:
    """Sample budget, seed, averaging mode and thread count.

    ``conditional`` averages over the eavesdropper channel only, with
    the legitimate SNR held at its known realization; this is the
    quantity the quadrature and closed-form routes compute.  ``ergodic``
    additionally draws the legitimate SNR from its own exponential law;
    it is a sweep sanity check, not a drop-in replacement.
    """

    samples: int
    seed: int
    mode: str = MODE_CONDITIONAL
    workers: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, got {self.samples!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.mode not in (MODE_CONDITIONAL, MODE_ERGODIC):
            raise ValueError(f"mode must be {MODE_CONDITIONAL!r} or {MODE_ERGODIC!r}, got {self.mode!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ValueError(f"workers must be a positive integer, got {self.workers!r}")


def block_stream(seed: int, index: int) -> np.random.Generator:
    """Counter-based stream for one sample block."""
    return np.random.Generator(np.random.Philox(key=np.array([seed, index], dtype=np.uint64)))


def sample_snr(gbar: float, stream: np.random.Generator, size: int | None = None):
    """Exponential SNR draw(s) with mean ``gbar`` via inverse CDF.

    Draws are always finite and strictly positive.
    """
    if not gbar > 0.0:
        raise ValueError(f"gbar must be positive, got {gbar!r}")
    u = stream.random(size) + _OPEN_SHIFT
    out = -gbar * np.log(u)
    return float(out) if size is None else out


def _block_sums(
    index: int,
    count: int,
    params: FblParams,
    gamma_b: float,
    stats: ChannelStats,
    mc: McConfig,
    offset: float,
    eps_quantile: float,
) -> tuple[float, float]:
    stream = block_stream(mc.seed, index)
    if mc.mode == MODE_ERGODIC:
        gb = sample_snr(stats.gbar_b, stream, count)
        ge = sample_snr(stats.gbar_e, stream, count)
        delta = kernels.delta_given_snr_pairs(ge, gb, float(params.n), float(params.m), eps_quantile)
    else:
        ge = sample_snr(stats.gbar_e, stream, count)
        delta = kernels.delta_given_eve_snr(ge, gamma_b, float(params.n), offset)
    return float(np.sum(delta)), float(np.dot(delta, delta))


def ail_mc(
    params: FblParams,
    gamma_b: float | None,
    stats: ChannelStats,
    mc: McConfig,
) -> LeakageEstimate:
    """Sample-mean estimate of the average leakage with its standard error.

    ``gamma_b`` is required in conditional mode and ignored in ergodic
    mode.  For a single sample the standard error is reported as NaN.
    """
    if mc.mode == MODE_CONDITIONAL:
        if gamma_b is None:
            raise ValueError("conditional mode requires gamma_b")
        if gamma_b < 0.0:
            raise ValueError("gamma_b must be non-negative")
        offset = rate_offset(params, gamma_b)
        gamma_b_value = gamma_b
    else:
        offset = 0.0
        gamma_b_value = 0.0
    eps_quantile = q_inv(params.eps)

    blocks = [
        (index, min(_BLOCK, mc.samples - start))
        for index, start in enumerate(range(0, mc.samples, _BLOCK))
    ]

    def work(block: tuple[int, int]) -> tuple[float, float]:
        index, count = block
        return _block_sums(index, count, params, gamma_b_value, stats, mc, offset, eps_quantile)

    if mc.workers == 1 or len(blocks) == 1:
        partials = [work(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=mc.workers) as pool:
            partials = list(pool.map(work, blocks))

    total = 0.0
    total_sq = 0.0
    for part, part_sq in partials:  # fixed block order: schedule independent
        total += part
        total_sq += part_sq

    mean = total / mc.samples
    if mc.samples > 1:
        variance = max(0.0, (total_sq - mc.samples * mean * mean) / (mc.samples - 1))
        std_error = math.sqrt(variance / mc.samples)
    else:
        std_error = math.nan
    return LeakageEstimate(value=mean, method=METHOD_MC, std_error=std_error)
