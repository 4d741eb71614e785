"""Average information leakage of finite-blocklength wiretap links over
Rayleigh fading: exact quadrature, saddle-point closed form, seeded
Monte Carlo, and blocklength design on top of them.
"""

from .channel import ChannelStats, Realization, snr_cdf, snr_pdf, snr_survival
from .design import (
    LAMBDA_GRID,
    DesignOutcome,
    EnumerationBudgetError,
    ParetoPoint,
    est,
    pareto_front,
    solve_constrained_closed_form,
    solve_constrained_oracle,
    solve_weighted,
    weighted_objective,
)
from .fbl import (
    FblParams,
    SingularInputError,
    dispersion,
    instantaneous_leakage,
    rate_offset,
    secrecy_capacity,
)
from .kernels import BACKEND
from .leakage import (
    METHOD_APPROX,
    METHOD_EXACT,
    METHOD_MC,
    LeakageEstimate,
    SaddlePoint,
    ail_approx,
    ail_exact,
    ail_floor,
    leakage_exponent,
    leakage_prefactor,
    saddle_point,
)
from .mc import MODE_CONDITIONAL, MODE_ERGODIC, McConfig, ail_mc, sample_snr
from .qfunc import q_func, q_inv
from .quadrature import QuadratureConvergenceError, integrate_adaptive
from .sop import SopParams, bridging_redundancy_rate, sop

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LAMBDA_GRID",
    "METHOD_APPROX",
    "METHOD_EXACT",
    "METHOD_MC",
    "MODE_CONDITIONAL",
    "MODE_ERGODIC",
    "ChannelStats",
    "DesignOutcome",
    "EnumerationBudgetError",
    "FblParams",
    "LeakageEstimate",
    "McConfig",
    "ParetoPoint",
    "QuadratureConvergenceError",
    "Realization",
    "SaddlePoint",
    "SingularInputError",
    "SopParams",
    "__version__",
    "ail_approx",
    "ail_exact",
    "ail_floor",
    "ail_mc",
    "bridging_redundancy_rate",
    "dispersion",
    "est",
    "instantaneous_leakage",
    "integrate_adaptive",
    "leakage_exponent",
    "leakage_prefactor",
    "pareto_front",
    "q_func",
    "q_inv",
    "rate_offset",
    "sample_snr",
    "saddle_point",
    "secrecy_capacity",
    "snr_cdf",
    "snr_pdf",
    "snr_survival",
    "solve_constrained_closed_form",
    "solve_constrained_oracle",
    "solve_weighted",
    "sop",
    "weighted_objective",
]
