"""Blocklength design: throughput, weighted trade-off, constrained
optimum and the Pareto frontier.

The two objectives pull in opposite directions: effective secrecy
throughput (1 - eps) * m / n falls with the blocklength while the
average leakage falls too, so every solver here is a one-dimensional
integer problem.  Enumeration over 1..n_max is exact at the supported
problem sizes and serves as the oracle for the closed form.

All solvers evaluate the leakage through the closed-form route
(``ail_approx_values``); the CLI offers a quadrature-backed oracle scan
for sensitivity checks.  Ties always break toward the smaller
blocklength, which favors throughput and latency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelStats
from .fbl import FblParams, dispersion
from .leakage import ail_approx_values
from .qfunc import q_inv

__all__ = [
    "MAX_ENUMERATION",
    "LAMBDA_GRID",
    "EnumerationBudgetError",
    "DesignOutcome",
    "ParetoPoint",
    "est",
    "weighted_objective",
    "solve_weighted",
    "solve_constrained_closed_form",
    "solve_constrained_oracle",
    "pareto_front",
]

MAX_ENUMERATION = 10_000

# Weight grid used to trace the Pareto boundary: 101 uniform values
# with exact endpoints.
LAMBDA_GRID = tuple(np.linspace(0.0, 1.0, 101).tolist())


class EnumerationBudgetError(ValueError):
    """n_max exceeds the exhaustive-enumeration budget."""


@dataclass(frozen=True)
class DesignOutcome:
    """A designed blocklength with its throughput and achieved leakage."""

    n_star: int
    est: float
    ail: float
    feasible: bool
    method: str


@dataclass(frozen=True)
class ParetoPoint:
    """One enumerated (blocklength, throughput, leakage) point."""

    n: int
    est: float
    ail: float
    dominated: bool


def est(params: FblParams) -> float:
    """Effective secrecy throughput: payload rate discounted by errors."""
    return (1.0 - params.eps) * params.m / params.n


def _check_budget(params: FblParams) -> None:
    if params.n_max > MAX_ENUMERATION:
        raise EnumerationBudgetError(
            f"n_max={params.n_max} exceeds the enumeration budget of {MAX_ENUMERATION}"
        )


def _ail_curve(params: FblParams, gamma_b: float, stats: ChannelStats) -> np.ndarray:
    """Closed-form leakage at every blocklength 1..n_max."""
    n_values = np.arange(1, params.n_max + 1, dtype=float)
    return ail_approx_values(n_values, params.m, params.eps, gamma_b, stats.gbar_e)


def _est_at(params: FblParams, n: int) -> float:
    return (1.0 - params.eps) * params.m / n


def weighted_objective(
    n: int, weight: float, gamma_b: float, stats: ChannelStats, params: FblParams
) -> float:
    """Scalarized trade-off: weight * leakage - (1 - weight) / n.

    The throughput term is scaled by its own maximum so both terms are
    comparable, which reduces it to 1 / n.
    """
    if not 1 <= n <= params.n_max:
        raise ValueError(f"n must lie in [1, n_max], got {n}")
    ail = float(ail_approx_values(float(n), params.m, params.eps, gamma_b, stats.gbar_e))
    return weight * ail - (1.0 - weight) / n


def solve_weighted(
    weight: float, gamma_b: float, stats: ChannelStats, params: FblParams
) -> DesignOutcome:
    """Minimize the scalarized trade-off by exhaustive scan.

    weight = 0 maximizes throughput alone (n* = 1); weight = 1
    minimizes leakage alone (n* = n_max).
    """
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"weight must lie in [0, 1], got {weight!r}")
    _check_budget(params)
    ail = _ail_curve(params, gamma_b, stats)
    n_values = np.arange(1, params.n_max + 1, dtype=float)
    objective = weight * ail - (1.0 - weight) / n_values
    index = int(np.argmin(objective))  # first minimum: smallest n wins ties
    n_star = index + 1
    return DesignOutcome(
        n_star=n_star,
        est=_est_at(params, n_star),
        ail=float(ail[index]),
        feasible=True,
        method="weighted-scan",
    )


def _closed_form_coefficients(
    phi: float, gamma_b: float, stats: ChannelStats, params: FblParams
) -> tuple[float, float, float | None]:
    """Quadratic coefficients (a, b) and the positive root in sqrt(n).

    Setting the closed-form leakage equal to phi and substituting
    eta = sqrt(n) turns the optimality condition into
    a * eta^2 - b * eta - m = 0.  Returns root None when a <= 0
    (infeasible at any blocklength).
    """
    a = math.log2((1.0 + gamma_b) / (1.0 - stats.gbar_e * math.log(phi)))
    b = math.sqrt(dispersion(gamma_b)) * q_inv(params.eps)
    if a <= 0.0:
        return a, b, None
    eta = (b + math.sqrt(b * b + 4.0 * a * params.m)) / (2.0 * a)
    return a, b, eta


def _infeasible(params: FblParams, gamma_b: float, stats: ChannelStats, method: str) -> DesignOutcome:
    ail_cap = float(
        ail_approx_values(float(params.n_max), params.m, params.eps, gamma_b, stats.gbar_e)
    )
    return DesignOutcome(
        n_star=params.n_max,
        est=_est_at(params, params.n_max),
        ail=ail_cap,
        feasible=False,
        method=method,
    )


def solve_constrained_closed_form(
    phi: float, gamma_b: float, stats: ChannelStats, params: FblParams
) -> DesignOutcome:
    """Smallest blocklength keeping the leakage at or below ``phi``,
    from the quadratic root n* = ceil(eta^2), capped at n_max.

    Infeasibility is signaled through the ``feasible`` flag, not an
    exception; the outcome then reports n_max and its leakage.
    """
    if not 0.0 < phi < 1.0:
        raise ValueError(f"phi must lie in (0, 1), got {phi!r}")
    _, _, eta = _closed_form_coefficients(phi, gamma_b, stats, params)
    if eta is None:
        return _infeasible(params, gamma_b, stats, "closed-form")
    n_star = min(max(math.ceil(eta * eta), 1), params.n_max)

    def ail_at(n: int) -> float:
        return float(ail_approx_values(float(n), params.m, params.eps, gamma_b, stats.gbar_e))

    ail = ail_at(n_star)
    if ail > phi and n_star < params.n_max:
        # The real root can land a rounding step below the integer
        # threshold; one bump restores the ceil contract.
        n_star += 1
        ail = ail_at(n_star)
    if ail > phi:
        return _infeasible(params, gamma_b, stats, "closed-form")
    return DesignOutcome(
        n_star=n_star, est=_est_at(params, n_star), ail=ail, feasible=True, method="closed-form"
    )


def solve_constrained_oracle(
    phi: float, gamma_b: float, stats: ChannelStats, params: FblParams
) -> DesignOutcome:
    """Linear-scan oracle: first blocklength whose leakage is <= phi."""
    if not 0.0 < phi < 1.0:
        raise ValueError(f"phi must lie in (0, 1), got {phi!r}")
    _check_budget(params)
    ail = _ail_curve(params, gamma_b, stats)
    feasible_mask = ail <= phi
    if not bool(feasible_mask.any()):
        return _infeasible(params, gamma_b, stats, "exhaustive")
    index = int(np.argmax(feasible_mask))  # first hit of the scan
    n_star = index + 1
    return DesignOutcome(
        n_star=n_star,
        est=_est_at(params, n_star),
        ail=float(ail[index]),
        feasible=True,
        method="exhaustive",
    )


def pareto_front(gamma_b: float, stats: ChannelStats, params: FblParams) -> list[ParetoPoint]:
    """Enumerate every blocklength and mark dominance.

    Throughput is strictly decreasing in n, so a point is dominated
    exactly when some smaller blocklength already achieves leakage at
    least as low.  A prefix minimum computes the flags in one pass; the
    test suite cross-checks with a full pairwise scan.
    """
    _check_budget(params)
    ail = _ail_curve(params, gamma_b, stats)
    n_max = params.n_max
    dominated = np.zeros(n_max, dtype=bool)
    if n_max > 1:
        best_before = np.minimum.accumulate(ail)[:-1]
        dominated[1:] = best_before <= ail[1:]
    return [
        ParetoPoint(
            n=i + 1,
            est=_est_at(params, i + 1),
            ail=float(ail[i]),
            dominated=bool(dominated[i]),
        )
        for i in range(n_max)
    ]
