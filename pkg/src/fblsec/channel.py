"""Channel statistics for the Rayleigh-faded wiretap link.

Instantaneous SNRs are exponentially distributed; the mean SNR of each
link is the transmit SNR times the mean channel gain.  The library works
in the linear SNR domain throughout; dB conversion happens only at the
CLI boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["ChannelStats", "Realization", "snr_pdf", "snr_cdf", "snr_survival"]


def _require_positive_finite(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class ChannelStats:
    """Transmit SNR and mean channel gains of both links.

    The mean SNRs are exposed as properties so they are always
    recomputed from ``rho`` and the gains, never stored inconsistently.
    """

    rho: float
    mu_b: float
    mu_e: float

    def __post_init__(self) -> None:
        _require_positive_finite("rho", self.rho)
        _require_positive_finite("mu_b", self.mu_b)
        _require_positive_finite("mu_e", self.mu_e)

    @property
    def gbar_b(self) -> float:
        """Mean SNR of the legitimate link."""
        return self.rho * self.mu_b

    @property
    def gbar_e(self) -> float:
        """Mean SNR of the eavesdropper link."""
        return self.rho * self.mu_e


@dataclass(frozen=True)
class Realization:
    """One draw of the instantaneous SNR pair."""

    gamma_b: float
    gamma_e: float

    def __post_init__(self) -> None:
        for name, value in (("gamma_b", self.gamma_b), ("gamma_e", self.gamma_e)):
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{name} must be finite and non-negative, got {value!r}")


def snr_pdf(x, gbar: float):
    """Density of the exponential SNR law with mean ``gbar``."""
    return np.exp(-np.asarray(x, dtype=float) / gbar) / gbar


def snr_cdf(x, gbar: float):
    """CDF of the exponential SNR law with mean ``gbar``."""
    return -np.expm1(-np.asarray(x, dtype=float) / gbar)


def snr_survival(x, gbar: float):
    """Survival function (1 - CDF) of the exponential SNR law."""
    return np.exp(-np.asarray(x, dtype=float) / gbar)
