"""Count and enumerate solutions of x_1^2 + ... + x_{d+1}^2 = 1 over F_q.

The closed-form count is exact integer arithmetic for prime fields; the
enumerator works for prime and prime-power fields alike by sweeping the first
d coordinates and reading the admissible last coordinates off the field's
square-root table, so the sweep costs O(q^d) instead of O(q^{d+1}).

Output vectors are centered integers (the M_i map for extension fields) in a
canonical order: lexicographically ascending, which makes every downstream
artifact byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .errors import BudgetError
from .fields import ExtensionField, PrimeField, quadratic_character

DEFAULT_ENUM_BUDGET = 5_000_000
_CHUNK = 1 << 18


def center_coordinate(x: int, p: int) -> int:
    """Centered representative of the residue x: the value in [-(p-1)/2, (p-1)/2]."""
    if not 0 <= x <= p - 1:
        raise ValueError(f"residue {x} out of range for modulus {p}")
    return x if x <= (p - 1) // 2 else x - p


def count_solutions_formula(d: int, p: int) -> int:
    """Closed-form N(d, p) for the unit quadratic form in d+1 variables over F_p."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if d % 2 == 1:
        sign_arg = (d + 1) // 2  # eta((-1)^((d+1)/2))
        eta = 1 if sign_arg % 2 == 0 else quadratic_character(p - 1, p)
        return p ** d - p ** ((d - 1) // 2) * eta
    sign_arg = d // 2
    eta = 1 if sign_arg % 2 == 0 else quadratic_character(p - 1, p)
    return p ** d + p ** (d // 2) * eta


@dataclass(frozen=True)
class SolutionSet:
    """All centered integer solution vectors for one (d, field) pair.

    ``coords`` has one row per solution, lexicographically ascending; every
    entry lies in [-(q-1)/2, (q-1)/2] and no row is the zero vector.
    """

    d: int
    q: int
    p: int
    e: int
    coords: np.ndarray = dataclass_field(repr=False)

    def __len__(self) -> int:
        return self.coords.shape[0]


def enumerate_solutions(d: int, fld: PrimeField | ExtensionField,
                        budget: int | None = None) -> SolutionSet:
    """Enumerate every solution of the unit form over the given field.

    Sweeps all q^d assignments of the leading coordinates in fixed chunks; the
    residual 1 - sum of squares picks the last coordinate out of the square
    root table (0, 1, or 2 completions).  For prime fields the total is
    cross-checked against the closed-form count.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if budget is None:
        budget = DEFAULT_ENUM_BUDGET
    q = fld.q
    total = q ** d
    if total > budget:
        raise BudgetError(required=total, budget=budget)

    sq = fld.square_table
    one_minus = fld.one_minus_table
    counts = fld.sqrt_count
    roots = fld.sqrt_roots
    centered = fld.centered_table

    pieces = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = []
        rem = idx
        for _ in range(d):
            digits.append(rem % q)
            rem = rem // q
        acc = sq[digits[0]]
        for k in range(1, d):
            acc = fld.vadd(acc, sq[digits[k]])
        residual = one_minus[acc]
        ncomp = counts[residual]
        for which in (0, 1):
            sel = np.nonzero(ncomp > which)[0]
            if sel.size == 0:
                continue
            block = np.empty((sel.size, d + 1), dtype=np.int64)
            for k in range(d):
                block[:, k] = centered[digits[k][sel]]
            block[:, d] = centered[roots[residual[sel], which]]
            pieces.append(block)

    if pieces:
        coords = np.vstack(pieces)
    else:
        coords = np.empty((0, d + 1), dtype=np.int64)
    order = np.lexsort(tuple(coords[:, k] for k in range(d, -1, -1)))
    coords = np.ascontiguousarray(coords[order])
    coords.setflags(write=False)

    if fld.e == 1:
        expected = count_solutions_formula(d, fld.p)
        if coords.shape[0] != expected:
            raise AssertionError(
                f"enumerated {coords.shape[0]} solutions but the closed form "
                f"gives {expected} for d={d}, p={fld.p}"
            )
    return SolutionSet(d=d, q=q, p=fld.p, e=fld.e, coords=coords)
