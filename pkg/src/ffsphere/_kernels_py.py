"""Pure-Python (numpy) twin of the compiled pairwise kernel.

Same block contract as ``_kernels``: given row range [lo, hi) it accumulates
sum(||x_i - x_j||^(2 * exponent)) over pairs j > i, plus the block's minimum
squared distance.  Distances are built coordinate-by-coordinate from explicit
differences (no norm-expansion cancellation), and each block reduces with
numpy's pairwise summation, so results are reproducible for a fixed block
partition regardless of how many threads drive the blocks.
"""

import numpy as np

NAME = "python"


def block_pair_stats(coords: np.ndarray, lo: int, hi: int,
                     exponents: np.ndarray,
                     out_sums: np.ndarray, out_comps: np.ndarray) -> float:
    """Accumulate one block; returns the block's minimum squared distance."""
    n = coords.shape[0]
    hi = min(hi, n)
    rows = coords[lo:hi]
    cols = coords[lo + 1:]
    if rows.shape[0] == 0 or cols.shape[0] == 0:
        return 4.5
    d2 = np.zeros((rows.shape[0], cols.shape[0]))
    for c in range(coords.shape[1]):
        diff = rows[:, c][:, None] - cols[:, c][None, :]
        d2 += diff * diff
    # pair (i, j) with i = lo + r, j = lo + 1 + c is valid iff c >= r
    valid = np.arange(cols.shape[0])[None, :] >= np.arange(rows.shape[0])[:, None]
    if not valid.any():
        return 4.5
    min_d2 = float(d2[valid].min())
    if exponents.shape[0]:
        safe = np.where(valid, d2, 1.0)
        for k, expo in enumerate(exponents):
            out_sums[k] += float(np.sum(np.where(valid, safe ** expo, 0.0)))
    return min_d2
