"""Numba-compiled batch kernels: the default backend.

Scalar loops fused per element avoid the temporaries the vectorized
numpy fallback allocates; ``nogil`` lets the Monte Carlo driver run
blocks on a thread pool.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

_LOG2E = math.log2(math.e)
_SQRT1_2 = math.sqrt(0.5)


@njit(cache=True, nogil=True)
def delta_given_eve_snr(gamma_e, gamma_b, n, offset):
    """Per-packet leakage for an array of eavesdropper SNRs, fixed gamma_b."""
    out = np.empty(gamma_e.shape[0])
    cap_b = math.log2(1.0 + gamma_b)
    for i in range(gamma_e.shape[0]):
        ge = gamma_e[i]
        v_e = (_LOG2E * _LOG2E) * ge * (ge + 2.0) / ((ge + 1.0) * (ge + 1.0))
        arg = math.sqrt(n / v_e) * (cap_b - math.log2(1.0 + ge) - offset)
        out[i] = 0.5 * math.erfc(arg * _SQRT1_2)
    return out


@njit(cache=True, nogil=True)
def delta_given_snr_pairs(gamma_e, gamma_b, n, m, eps_quantile):
    """Per-packet leakage for paired SNR draws (ergodic averaging)."""
    out = np.empty(gamma_e.shape[0])
    for i in range(gamma_e.shape[0]):
        gb = gamma_b[i]
        ge = gamma_e[i]
        v_b = (_LOG2E * _LOG2E) * gb * (gb + 2.0) / ((gb + 1.0) * (gb + 1.0))
        offset = math.sqrt(v_b / n) * eps_quantile + m / n
        v_e = (_LOG2E * _LOG2E) * ge * (ge + 2.0) / ((ge + 1.0) * (ge + 1.0))
        arg = math.sqrt(n / v_e) * (math.log2(1.0 + gb) - math.log2(1.0 + ge) - offset)
        out[i] = 0.5 * math.erfc(arg * _SQRT1_2)
    return out
