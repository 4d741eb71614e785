"""Per-realization finite-blocklength quantities."""

import math

import numpy as np
import pytest

from fblsec import (
    FblParams,
    Realization,
    SingularInputError,
    dispersion,
    instantaneous_leakage,
    rate_offset,
    secrecy_capacity,
)
from fblsec.fbl import LOG2E
from fblsec.leakage import saddle_snr_values

LOG2E2 = LOG2E * LOG2E


class TestParams:
    def test_valid(self):
        p = FblParams(m=200, n=400, eps=1e-3, n_max=1000)
        assert p.secrecy_rate == 0.5

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"m": 0, "n": 400, "eps": 1e-3},
            {"m": 200, "n": 0, "eps": 1e-3},
            {"m": 200, "n": 1001, "eps": 1e-3, "n_max": 1000},
            {"m": 200, "n": 400, "eps": 0.0},
            {"m": 200, "n": 400, "eps": 1.0},
            {"m": 200.0, "n": 400, "eps": 1e-3},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            FblParams(**kwargs)


class TestDispersion:
    def test_zero_snr(self):
        assert dispersion(0.0) == 0.0

    def test_high_snr_asymptote(self):
        assert abs(dispersion(1e12) - LOG2E2) <= 1e-9

    def test_unit_snr(self):
        # (log2 e)^2 * 3/4
        assert dispersion(1.0) == pytest.approx(1.5610267357542058, rel=1e-14)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            dispersion(-0.1)

    def test_strictly_increasing_and_bounded(self):
        grid = np.logspace(-4, 4, 300)
        values = [dispersion(float(g)) for g in grid]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(v < LOG2E2 for v in values)


class TestSecrecyCapacity:
    def test_identical_channels(self):
        assert secrecy_capacity(0.7, 0.7) == 0.0

    def test_one_bit_gap(self):
        assert secrecy_capacity(3.0, 1.0) == 1.0

    def test_weak_eavesdropper(self):
        assert secrecy_capacity(1.0, 0.1) == pytest.approx(0.862496476250065, rel=1e-14)

    def test_negative_when_eve_is_stronger(self):
        assert secrecy_capacity(0.1, 1.0) < 0.0

    def test_rejects_negative_snr(self):
        with pytest.raises(ValueError):
            secrecy_capacity(-1.0, 0.1)


class TestRateOffset:
    def test_median_error_target_leaves_only_rate(self, default_params):
        p = FblParams(m=200, n=400, eps=0.5)
        assert rate_offset(p, 2.0) == 0.5

    def test_zero_snr_has_zero_dispersion_term(self, default_params):
        assert rate_offset(default_params, 0.0) == 0.5

    def test_defaults(self, default_params):
        assert rate_offset(default_params, 1.0) == pytest.approx(0.6930484430864139, rel=1e-13)


class TestInstantaneousLeakage:
    def test_vanishing_argument_gives_half(self, default_params):
        # an eavesdropper SNR chosen to zero the capacity-offset gap
        ge = float(saddle_snr_values(400.0, 200, 1e-3, 1.0))
        delta = instantaneous_leakage(default_params, Realization(1.0, ge))
        assert abs(delta - 0.5) <= 1e-12

    def test_weak_eavesdropper_value(self, default_params):
        # frozen from a 50-digit evaluation (mpmath) of the same chain
        delta = instantaneous_leakage(default_params, Realization(1.0, 0.05))
        assert 0.0 < delta < 0.5
        assert delta == pytest.approx(2.7933041502454814e-27, rel=1e-10)

    def test_dominant_eavesdropper_leaks_everything(self, default_params):
        delta = instantaneous_leakage(default_params, Realization(1.0, 100.0))
        assert delta > 0.999

    def test_zero_eve_snr_is_singular(self, default_params):
        with pytest.raises(SingularInputError):
            instantaneous_leakage(default_params, Realization(1.0, 0.0))

    def test_nondecreasing_in_eve_snr(self, default_params):
        grid = np.logspace(-4, 4, 160)
        values = [
            instantaneous_leakage(default_params, Realization(1.0, float(g))) for g in grid
        ]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_nonincreasing_in_blocklength_while_gap_positive(self):
        real = Realization(1.0, 0.05)
        kept = []
        for n in range(50, 1001):
            p = FblParams(m=200, n=n, eps=1e-3)
            gap = secrecy_capacity(real.gamma_b, real.gamma_e) - rate_offset(p, real.gamma_b)
            if gap > 0.0:
                kept.append(instantaneous_leakage(p, real))
        assert len(kept) > 500
        assert all(b <= a for a, b in zip(kept, kept[1:]))
