# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled pairwise kernel: per-block Riesz sums with Neumaier compensation.

One block covers a contiguous range of row indices i and all partners j > i.
Each (i, j) pair contributes ||x_i - x_j||^(2 * exponent) per requested
exponent (callers pass -s/2), accumulated left to right into a compensated
sum, so a block's result is a pure function of (coords, lo, hi, exponents).
The GIL is released for the whole sweep, which lets a thread pool run blocks
in parallel.
"""

from libc.math cimport fabs, pow

NAME = "compiled"


def block_pair_stats(const double[:, ::1] coords, Py_ssize_t lo, Py_ssize_t hi,
                     const double[::1] exponents,
                     double[::1] out_sums, double[::1] out_comps):
    """Accumulate one block; returns the block's minimum squared distance."""
    cdef Py_ssize_t n = coords.shape[0]
    cdef Py_ssize_t dim = coords.shape[1]
    cdef Py_ssize_t ns = exponents.shape[0]
    cdef Py_ssize_t i, j, c, k
    cdef double d2, diff, term, snew
    cdef double min_d2 = 4.5  # squared diameter of the unit sphere is 4

    if hi > n:
        hi = n
    with nogil:
        for i in range(lo, hi):
            for j in range(i + 1, n):
                d2 = 0.0
                for c in range(dim):
                    diff = coords[i, c] - coords[j, c]
                    d2 += diff * diff
                if d2 < min_d2:
                    min_d2 = d2
                for k in range(ns):
                    term = pow(d2, exponents[k])
                    snew = out_sums[k] + term
                    if fabs(out_sums[k]) >= fabs(term):
                        out_comps[k] += (out_sums[k] - snew) + term
                    else:
                        out_comps[k] += (term - snew) + out_sums[k]
                    out_sums[k] = snew
    return min_d2
