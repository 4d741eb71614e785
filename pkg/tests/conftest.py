import pytest
from hypothesis import HealthCheck, settings

from fblsec import ChannelStats, FblParams

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def default_params() -> FblParams:
    """Baseline packet parameters used across the suite."""
    return FblParams(m=200, n=400, eps=1e-3, n_max=1000)


@pytest.fixture
def default_stats() -> ChannelStats:
    """Baseline channel statistics: 0 dB transmit SNR, weak eavesdropper."""
    return ChannelStats(rho=1.0, mu_b=1.0, mu_e=0.1)
