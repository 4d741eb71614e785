#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallback.

Times the batch leakage kernel at a few array sizes plus the two
consumers that dominate real runs (Monte Carlo blocks and adaptive
quadrature).  The numba numbers include a discarded warmup call so JIT
compilation is not measured.

Run from the repository root:

    python bench/benchmark_backends.py

The library itself picks its backend at import time from the
FBLSEC_BACKEND environment variable; this script imports both kernel
modules directly so a single process can time them side by side.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fblsec import kernels_numpy  # noqa: E402

try:
    from fblsec import kernels_numba
except ImportError:
    kernels_numba = None


def _time(fn, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    rng = np.random.Generator(np.random.Philox(key=np.array([7, 0], dtype=np.uint64)))
    gamma_b, n, offset = 1.0, 400.0, 0.6930484430864139
    rows = []

    for size in (10_000, 100_000, 1_000_000, 10_000_000):
        gamma_e = -0.1 * np.log(rng.random(size) + 2.0 ** -54)
        t_numpy = _time(lambda: kernels_numpy.delta_given_eve_snr(gamma_e, gamma_b, n, offset))
        if kernels_numba is not None:
            kernels_numba.delta_given_eve_snr(gamma_e[:16], gamma_b, n, offset)  # warmup/JIT
            t_numba = _time(lambda: kernels_numba.delta_given_eve_snr(gamma_e, gamma_b, n, offset))
        else:
            t_numba = float("nan")
        rows.append((f"delta batch {size:>10,}", t_numpy, t_numba))

    gb = -1.0 * np.log(rng.random(1_000_000) + 2.0 ** -54)
    ge = -0.1 * np.log(rng.random(1_000_000) + 2.0 ** -54)
    t_numpy = _time(lambda: kernels_numpy.delta_given_snr_pairs(ge, gb, n, 200.0, 3.0902323061678135))
    if kernels_numba is not None:
        kernels_numba.delta_given_snr_pairs(ge[:16], gb[:16], n, 200.0, 3.0902323061678135)
        t_numba = _time(lambda: kernels_numba.delta_given_snr_pairs(ge, gb, n, 200.0, 3.0902323061678135))
    else:
        t_numba = float("nan")
    rows.append(("pairs batch  1,000,000", t_numpy, t_numba))

    print(f"{'kernel':<28} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for label, t_np, t_nb in rows:
        speedup = t_np / t_nb if t_nb == t_nb and t_nb > 0 else float("nan")
        print(f"{label:<28} {1e3 * t_np:>12.2f} {1e3 * t_nb:>12.2f} {speedup:>8.1f}x")

    if kernels_numba is None:
        print("\nnumba unavailable: only the numpy fallback was timed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
