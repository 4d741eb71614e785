"""Average information leakage over the eavesdropper's fading.

Three routes to the same quantity:

* ``ail_exact`` integrates the per-packet leakage against the
  exponential SNR density with adaptive quadrature.
* ``ail_approx`` is the closed-form saddle-point value
  exp(-x0 / gbar_e), where x0 is the eavesdropper SNR at which the
  leakage integrand's Gaussian argument vanishes.
* ``fblsec.mc.ail_mc`` estimates it empirically (separate module).

The saddle-point machinery (``leakage_exponent``, ``leakage_prefactor``,
``saddle_point``) is exposed because it is independently testable: the
assembled approximation exp(-n * exponent(x0)) * prefactor(x0) *
sqrt(2 pi / (n * curvature)) must collapse algebraically to
exp(-x0 / gbar_e).

Convention note: the curvature constant stored on ``SaddlePoint`` is
2 / (x0 (x0 + 2)), which is twice the literal second derivative of
``leakage_exponent`` at its minimum.  It pairs with the sqrt(2) that
``leakage_prefactor`` carries relative to the bare integration-by-parts
derivative, so the assembled product above is exact.  Neither function
is used by ``ail_exact``, which integrates the direct form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .channel import ChannelStats, snr_pdf, snr_survival
from .fbl import LOG2E, FblParams, SingularInputError, dispersion, rate_offset, rate_offset_values
from .qfunc import q_inv
from .quadrature import QuadratureConvergenceError, integrate_adaptive

__all__ = [
    "METHOD_EXACT",
    "METHOD_APPROX",
    "METHOD_MC",
    "LeakageEstimate",
    "SaddlePoint",
    "leakage_exponent",
    "leakage_prefactor",
    "saddle_point",
    "saddle_snr_values",
    "ail_approx_values",
    "ail_approx",
    "ail_exact",
    "ail_floor",
]

METHOD_EXACT = "exact-quadrature"
METHOD_APPROX = "laplace-approx"
METHOD_MC = "monte-carlo"
_METHODS = (METHOD_EXACT, METHOD_APPROX, METHOD_MC)

# Survival mass discarded by truncating the semi-infinite integral.
_TAIL_MASS = 1e-14
# Lower edge of the adaptive region; the integrand limit covers [0, edge].
_LOWER_EDGE = 1e-12


@dataclass(frozen=True)
class LeakageEstimate:
    """An average-leakage value tagged with how it was obtained.

    The mathematical value lives in (0, 1]; an exact 0.0 is accepted
    only as the double-precision underflow of a positive quantity
    (strong main channel, vanishing eavesdropper), mirroring how the
    tail probability itself underflows.
    """

    value: float
    method: str
    std_error: float | None = None
    quadrature_abs_err: float | None = None

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}, expected one of {_METHODS}")
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"leakage value must lie in [0, 1], got {self.value!r}")
        if (self.std_error is not None) != (self.method == METHOD_MC):
            raise ValueError("std_error is present exactly for monte-carlo estimates")
        if (self.quadrature_abs_err is not None) != (self.method == METHOD_EXACT):
            raise ValueError("quadrature_abs_err is present exactly for exact-quadrature estimates")


@dataclass(frozen=True)
class SaddlePoint:
    """Saddle of the leakage integrand's exponent.

    ``gamma_e`` keeps the raw value even when negative; ``negative``
    flags that regime (the closed-form approximation clamps to 1
    there).  Curvature and prefactor are only defined for a
    non-negative saddle.
    """

    gamma_e: float
    negative: bool
    exponent_curvature: float | None
    prefactor: float | None


def leakage_exponent(x: float, params: FblParams, gamma_b: float) -> float:
    """Exponent rate function of the integrand in by-parts form.

    Non-negative, zero exactly at the saddle; singular at x = 0.
    """
    if x <= 0.0:
        raise SingularInputError("leakage_exponent requires x > 0")
    gap = math.log2((1.0 + gamma_b) / (1.0 + x)) - rate_offset(params, gamma_b)
    return gap * gap / (2.0 * dispersion(x))


def leakage_prefactor(x: float, params: FblParams, gamma_b: float, stats: ChannelStats) -> float:
    """Smooth prefactor multiplying exp(-n * exponent) in by-parts form."""
    if x <= 0.0:
        raise SingularInputError("leakage_prefactor requires x > 0")
    gap = math.log2((1.0 + gamma_b) / (1.0 + x)) - rate_offset(params, gamma_b)
    lead = math.sqrt(params.n / (math.pi * x * (x + 2.0)))
    shape = 1.0 + gap / (x * (x + 2.0) * LOG2E)
    return lead * shape * float(snr_survival(x, stats.gbar_e))


def saddle_snr_values(n_values, m: float, eps: float, gamma_b: float):
    """Saddle SNR over one or many blocklengths (vectorized core)."""
    return (1.0 + gamma_b) * np.exp2(-rate_offset_values(n_values, m, eps, gamma_b)) - 1.0


def saddle_point(params: FblParams, gamma_b: float, stats: ChannelStats) -> SaddlePoint:
    """Locate the exponent's minimum and evaluate the machinery there."""
    if gamma_b < 0.0:
        raise ValueError("gamma_b must be non-negative")
    x0 = float(saddle_snr_values(float(params.n), params.m, params.eps, gamma_b))
    if x0 < 0.0:
        return SaddlePoint(gamma_e=x0, negative=True, exponent_curvature=None, prefactor=None)
    if x0 == 0.0:
        return SaddlePoint(gamma_e=0.0, negative=False, exponent_curvature=math.inf, prefactor=math.inf)
    return SaddlePoint(
        gamma_e=x0,
        negative=False,
        exponent_curvature=2.0 / (x0 * (x0 + 2.0)),
        prefactor=leakage_prefactor(x0, params, gamma_b, stats),
    )


def ail_approx_values(n_values, m: float, eps: float, gamma_b: float, gbar_e: float):
    """Closed-form average leakage over a blocklength grid.

    Negative saddles clamp to 1: the requested secrecy rate then
    exceeds what even a silent eavesdropper would allow.
    """
    x0 = saddle_snr_values(n_values, m, eps, gamma_b)
    return np.exp(-np.maximum(x0, 0.0) / gbar_e)


def ail_approx(params: FblParams, gamma_b: float, stats: ChannelStats) -> LeakageEstimate:
    """Closed-form (saddle-point) average information leakage."""
    if gamma_b < 0.0:
        raise ValueError("gamma_b must be non-negative")
    value = float(ail_approx_values(float(params.n), params.m, params.eps, gamma_b, stats.gbar_e))
    return LeakageEstimate(value=value, method=METHOD_APPROX)


def _integrand_limit_at_zero(gamma_b: float, offset: float, gbar_e: float) -> float:
    """Limit of delta(x) * pdf(x) as x -> 0+.

    The dispersion vanishes at zero, so the Gaussian argument diverges;
    its sign is the sign of log2(1 + gamma_b) - offset.
    """
    gap0 = math.log2(1.0 + gamma_b) - offset
    if gap0 > 0.0:
        return 0.0
    density0 = float(snr_pdf(0.0, gbar_e))
    return density0 if gap0 < 0.0 else 0.5 * density0


def ail_exact(
    params: FblParams,
    gamma_b: float,
    stats: ChannelStats,
    abs_tol: float = 1e-10,
) -> LeakageEstimate:
    """Average information leakage by adaptive quadrature.

    Integrates the per-packet leakage against the eavesdropper SNR
    density on (0, x_max], where x_max discards survival mass 1e-14
    (the integrand is bounded by the density, so the truncation
    contributes at most that much).  The region [0, 1e-12] enters
    through the analytic limit of the integrand, keeping the
    dispersion singularity at zero out of the evaluation set.

    Raises
    ------
    QuadratureConvergenceError
        If the requested bound cannot be met; the exception carries the
        best value and the bound actually achieved.
    """
    if gamma_b < 0.0:
        raise ValueError("gamma_b must be non-negative")
    if not abs_tol > 0.0:
        raise ValueError(f"abs_tol must be positive, got {abs_tol!r}")

    gbar_e = stats.gbar_e
    n = float(params.n)
    offset = rate_offset(params, gamma_b)
    x_max = gbar_e * math.log(1.0 / _TAIL_MASS)
    head = _integrand_limit_at_zero(gamma_b, offset, gbar_e) * _LOWER_EDGE

    def integrand(x: np.ndarray) -> np.ndarray:
        return kernels.delta_given_eve_snr(x, gamma_b, n, offset) * snr_pdf(x, gbar_e)

    # Seed panel edges at the known features: the sigmoid transition
    # around the saddle and the density's own scale.
    x0 = float(saddle_snr_values(n, params.m, params.eps, gamma_b))
    points = [gbar_e, 3.0 * gbar_e]
    if x0 > 0.0:
        width = math.sqrt(x0 * (x0 + 2.0) / n)
        points += [x0 - 5.0 * width, x0, x0 + 5.0 * width]

    engine_tol = max(abs_tol - _TAIL_MASS, 0.5 * abs_tol)
    try:
        value, bound = integrate_adaptive(
            integrand, _LOWER_EDGE, x_max, abs_tol=engine_tol, breakpoints=points
        )
    except QuadratureConvergenceError as exc:
        raise QuadratureConvergenceError(
            str(exc), value=exc.value + head, error_bound=exc.error_bound + _TAIL_MASS
        ) from None
    total_bound = bound + _TAIL_MASS
    if total_bound > abs_tol:
        raise QuadratureConvergenceError(
            f"truncation mass pushes the bound {total_bound:.3e} above {abs_tol:.3e}",
            value=value + head,
            error_bound=total_bound,
        )
    return LeakageEstimate(
        value=value + head, method=METHOD_EXACT, quadrature_abs_err=total_bound
    )


def ail_floor(params: FblParams, hb_gain: float, mu_e: float) -> float:
    """High-SNR limit of the closed-form average leakage.

    With the legitimate SNR scaling as rho * hb_gain and the
    eavesdropper mean as rho * mu_e, the transmit SNR drops out in the
    limit and the leakage approaches a strictly positive floor: the
    dispersion saturates, so the limiting rate offset uses its
    asymptote.
    """
    if not hb_gain > 0.0:
        raise ValueError("hb_gain must be positive")
    if not mu_e > 0.0:
        raise ValueError("mu_e must be positive")
    offset_inf = params.m / params.n + math.sqrt(LOG2E * LOG2E / params.n) * q_inv(params.eps)
    return math.exp(-hb_gain / (mu_e * float(np.exp2(offset_inf))))
