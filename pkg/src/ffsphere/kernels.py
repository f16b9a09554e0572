"""Backend selection and deterministic parallel driver for pairwise sweeps.

The compiled Cython kernel is preferred; if the extension is missing (no C
toolchain at install time, or FFSPHERE_PURE_PYTHON=1) the numpy fallback is
used.  Either way the driver is the same: the row range is cut into blocks
whose boundaries depend only on N, blocks may run on any number of threads,
and the per-block compensated sums are merged in block order.  Identical
input therefore produces bit-identical output at every thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels_py

try:  # pragma: no cover - exercised indirectly via backend tests
    from . import _kernels  # type: ignore[attr-defined]
    _DEFAULT = _kernels
except ImportError:  # pragma: no cover
    _kernels = None
    _DEFAULT = _kernels_py

BLOCK_PAIR_TARGET = 1 << 21


def backend_name() -> str:
    """Name of the kernel active by default: 'compiled' or 'python'."""
    return _DEFAULT.NAME


def available_backends() -> dict[str, object]:
    out = {"python": _kernels_py}
    if _kernels is not None:
        out["compiled"] = _kernels
    return out


def resolve_threads(threads: int | None) -> int:
    if threads is None or threads <= 0:
        return min(8, os.cpu_count() or 1)
    return threads


def block_ranges(n: int, target_pairs: int = BLOCK_PAIR_TARGET) -> list[tuple[int, int]]:
    """Fixed partition of rows 0..n-2 into blocks of roughly equal pair counts.

    Depends only on (n, target_pairs), never on the thread count.
    """
    blocks = []
    lo = 0
    acc = 0
    for i in range(n - 1):
        acc += n - 1 - i
        if acc >= target_pairs:
            blocks.append((lo, i + 1))
            lo, acc = i + 1, 0
    if lo < n - 1:
        blocks.append((lo, n - 1))
    return blocks


def pair_stats(coords: np.ndarray, s_values, threads: int | None = None,
               backend: str | None = None,
               target_pairs: int = BLOCK_PAIR_TARGET) -> tuple[np.ndarray, float]:
    """Riesz sums (one per s) and minimum squared pair distance over all pairs.

    ``s_values`` may be empty to compute the distance minimum alone.
    """
    coords = np.ascontiguousarray(coords, dtype=np.float64)
    n = coords.shape[0]
    if n < 2:
        raise ValueError("need at least two points")
    impl = _DEFAULT if backend is None else available_backends()[backend]
    exponents = np.array([-0.5 * float(s) for s in s_values], dtype=np.float64)
    ns = exponents.shape[0]
    blocks = block_ranges(n, target_pairs)
    nthreads = resolve_threads(threads)

    def run_block(rng):
        lo, hi = rng
        sums = np.zeros(ns)
        comps = np.zeros(ns)
        m = impl.block_pair_stats(coords, lo, hi, exponents, sums, comps)
        return sums, comps, m

    if nthreads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(run_block, blocks))
    else:
        results = [run_block(b) for b in blocks]

    totals = np.zeros(ns)
    carry = np.zeros(ns)
    min_d2 = 4.5
    for sums, comps, m in results:  # fixed merge order = block order
        if m < min_d2:
            min_d2 = m
        for k in range(ns):
            for term in (sums[k], comps[k]):
                snew = totals[k] + term
                if abs(totals[k]) >= abs(term):
                    carry[k] += (totals[k] - snew) + term
                else:
                    carry[k] += (term - snew) + totals[k]
                totals[k] = snew
    return totals + carry, float(min_d2)
