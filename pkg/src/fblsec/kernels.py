"""Backend selection for the hot batch kernels.

Set FBLSEC_BACKEND=numpy to force the pure-numpy fallback, or
FBLSEC_BACKEND=numba to require the compiled kernels (import error if
numba is unavailable).  Unset or "auto" prefers numba and falls back
silently.  ``bench/benchmark_backends.py`` compares the two.
"""

from __future__ import annotations

import os

__all__ = ["BACKEND", "delta_given_eve_snr", "delta_given_snr_pairs"]

_choice = os.environ.get("FBLSEC_BACKEND", "auto").strip().lower() or "auto"

if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"FBLSEC_BACKEND must be 'numba', 'numpy' or unset, got {_choice!r}"
    )

if _choice == "numpy":
    from .kernels_numpy import delta_given_eve_snr, delta_given_snr_pairs

    BACKEND = "numpy"
else:
    try:
        from .kernels_numba import delta_given_eve_snr, delta_given_snr_pairs

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from .kernels_numpy import delta_given_eve_snr, delta_given_snr_pairs

        BACKEND = "numpy"
