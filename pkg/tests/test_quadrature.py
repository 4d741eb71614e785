"""Adaptive panel integrator against known integrals and scipy."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import erfc

from fblsec import QuadratureConvergenceError, integrate_adaptive


def test_polynomial_is_exact_per_panel():
    value, bound = integrate_adaptive(lambda x: x ** 4, 0.0, 1.0, abs_tol=1e-12)
    assert value == pytest.approx(0.2, rel=1e-14)
    assert bound <= 1e-12


def test_decaying_exponential():
    value, bound = integrate_adaptive(np.exp, -30.0, 0.0, abs_tol=1e-12)
    truth = 1.0 - math.exp(-30.0)
    assert value == pytest.approx(truth, rel=1e-12)


def test_sharp_sigmoid_times_exponential():
    def f(x):
        return 0.5 * erfc(50.0 * (x - 2.0)) * np.exp(-x)

    value, bound = integrate_adaptive(f, 0.0, 30.0, abs_tol=1e-11)
    truth, _ = quad(lambda x: float(f(np.asarray([x]))[0]), 0.0, 30.0,
                    points=[2.0], limit=200, epsabs=1e-14)
    assert abs(value - truth) <= bound + 1e-13
    assert value == pytest.approx(truth, rel=1e-10)


def test_narrow_bump_with_breakpoint_hint():
    # hints must bracket all mass down to the tolerance: +-8 sigma
    # leaves ~1e-15 of the bump outside the marked region
    center, width = 3.0, 1e-3

    def f(x):
        return np.exp(-0.5 * ((x - center) / width) ** 2)

    truth = width * math.sqrt(2.0 * math.pi)  # all mass inside [0, 10]
    value, bound = integrate_adaptive(
        f, 0.0, 10.0, abs_tol=1e-12, breakpoints=(center - 8 * width, center, center + 8 * width)
    )
    assert value == pytest.approx(truth, rel=1e-9)


def test_reported_bound_is_honest():
    def f(x):
        return np.sin(7.0 * x) ** 2 * np.exp(-x)

    value, bound = integrate_adaptive(f, 0.0, 20.0, abs_tol=1e-10)
    truth, _ = quad(lambda x: math.sin(7.0 * x) ** 2 * math.exp(-x), 0.0, 20.0,
                    limit=300, epsabs=1e-14)
    assert abs(value - truth) <= bound + 1e-13


def test_budget_exhaustion_reports_best_value():
    def f(x):
        return np.sin(40.0 * x) ** 2

    with pytest.raises(QuadratureConvergenceError) as excinfo:
        integrate_adaptive(f, 0.0, 50.0, abs_tol=1e-14, max_panels=4)
    err = excinfo.value
    assert math.isfinite(err.value)
    assert err.error_bound > 1e-14


@pytest.mark.parametrize("a,b,tol", [(1.0, 1.0, 1e-10), (2.0, 1.0, 1e-10), (0.0, 1.0, 0.0)])
def test_rejects_bad_arguments(a, b, tol):
    with pytest.raises(ValueError):
        integrate_adaptive(np.exp, a, b, abs_tol=tol)
