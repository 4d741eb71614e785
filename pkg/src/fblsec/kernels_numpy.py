"""Pure-numpy batch kernels: the fallback backend.

Same contracts as ``kernels_numba``; selected via the FBLSEC_BACKEND
environment variable (see ``kernels``).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import erfc

_LOG2E = math.log2(math.e)
_SQRT1_2 = math.sqrt(0.5)


def delta_given_eve_snr(gamma_e: np.ndarray, gamma_b: float, n: float, offset: float) -> np.ndarray:
    """Per-packet leakage for an array of eavesdropper SNRs, fixed gamma_b.

    ``offset`` is the precomputed rate offset for (params, gamma_b).
    All entries of ``gamma_e`` must be strictly positive.
    """
    ge = np.asarray(gamma_e, dtype=float)
    v_e = (_LOG2E * _LOG2E) * ge * (ge + 2.0) / np.square(ge + 1.0)
    arg = np.sqrt(n / v_e) * (math.log2(1.0 + gamma_b) - np.log2(1.0 + ge) - offset)
    return 0.5 * erfc(arg * _SQRT1_2)


def delta_given_snr_pairs(gamma_e: np.ndarray, gamma_b: np.ndarray, n: float,
                          m: float, eps_quantile: float) -> np.ndarray:
    """Per-packet leakage for paired SNR draws (ergodic averaging).

    The rate offset is recomputed per sample from each gamma_b draw;
    ``eps_quantile`` is the precomputed Q^{-1} of the error target.
    """
    ge = np.asarray(gamma_e, dtype=float)
    gb = np.asarray(gamma_b, dtype=float)
    v_b = (_LOG2E * _LOG2E) * gb * (gb + 2.0) / np.square(gb + 1.0)
    offset = np.sqrt(v_b / n) * eps_quantile + m / n
    v_e = (_LOG2E * _LOG2E) * ge * (ge + 2.0) / np.square(ge + 1.0)
    arg = np.sqrt(n / v_e) * (np.log2(1.0 + gb) - np.log2(1.0 + ge) - offset)
    return 0.5 * erfc(arg * _SQRT1_2)
