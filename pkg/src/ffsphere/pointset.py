"""Exact points on S^d built from centered solution vectors.

A point is stored as its integer vector W plus ||W||^2; the float coordinates
W/||W|| are a derived view.  All set semantics (distinctness, orbit grouping,
symmetry checks) run on the primitive integer direction W / gcd(W), which is
the exact test for two vectors normalizing to the same sphere point.
"""

from __future__ import annotations

import csv
import io
import json
import math
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import PointCollisionError, ZeroVectorError
from .fields import ExtensionField, PrimeField
from .quadform import SolutionSet, enumerate_solutions

SCHEMA_VERSION = 1


class SpherePoint:
    """One exact sphere point: integer vector, squared norm, float projection."""

    __slots__ = ("numerators", "norm_sq")

    def __init__(self, numerators: Iterable[int], norm_sq: int | None = None):
        self.numerators = tuple(int(w) for w in numerators)
        expect = sum(w * w for w in self.numerators)
        if expect == 0:
            raise ZeroVectorError(f"cannot normalize the zero vector {self.numerators}")
        if norm_sq is None:
            norm_sq = expect
        elif norm_sq != expect:
            raise ValueError(f"norm_sq {norm_sq} != sum of squares {expect}")
        self.norm_sq = int(norm_sq)

    @property
    def float_coords(self) -> tuple[float, ...]:
        scale = math.sqrt(self.norm_sq)
        return tuple(w / scale for w in self.numerators)

    def primitive_direction(self) -> tuple[int, ...]:
        """W divided by the (positive) gcd of its entries; the exact identity key."""
        g = math.gcd(*[abs(w) for w in self.numerators])
        return tuple(w // g for w in self.numerators)

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        return self.primitive_direction() == other.primitive_direction()

    def __hash__(self):
        return hash(self.primitive_direction())

    def __repr__(self):
        return f"SpherePoint({self.numerators}, norm_sq={self.norm_sq})"


class PointSet:
    """The full set X(d, q): immutable, distinct, canonically ordered."""

    def __init__(self, d: int, q: int, p: int, e: int, numerators: np.ndarray):
        numerators = np.asarray(numerators, dtype=np.int64)
        if numerators.ndim != 2 or numerators.shape[1] != d + 1:
            raise ValueError(f"expected shape (N, {d + 1})")
        self.d = d
        self.q = q
        self.p = p
        self.e = e
        self.numerators = numerators
        norm_sq = np.einsum("ij,ij->i", numerators, numerators)
        if np.any(norm_sq == 0):
            bad = int(np.nonzero(norm_sq == 0)[0][0])
            raise ZeroVectorError(f"solution row {bad} is the zero vector")
        self.norm_sq = norm_sq
        self.coords = numerators / np.sqrt(norm_sq)[:, None]
        self._check_distinct()
        for arr in (self.numerators, self.norm_sq, self.coords):
            arr.setflags(write=False)

    # --- construction -------------------------------------------------------

    def _check_distinct(self):
        prim = self.primitive
        order = np.lexsort(tuple(prim[:, k] for k in range(prim.shape[1] - 1, -1, -1)))
        srt = prim[order]
        dup = np.nonzero(np.all(srt[1:] == srt[:-1], axis=1))[0]
        if dup.size:
            pairs = [
                (tuple(self.numerators[order[i]]), tuple(self.numerators[order[i + 1]]))
                for i in dup[:10]
            ]
            raise PointCollisionError(pairs)

    @cached_property
    def primitive(self) -> np.ndarray:
        """Primitive integer directions, one row per point."""
        g = np.gcd.reduce(np.abs(self.numerators), axis=1)
        return self.numerators // g[:, None]

    def __len__(self) -> int:
        return self.numerators.shape[0]

    def __getitem__(self, i: int) -> SpherePoint:
        return SpherePoint(self.numerators[i], int(self.norm_sq[i]))

    def __iter__(self) -> Iterator[SpherePoint]:
        return (self[i] for i in range(len(self)))

    @property
    def points(self) -> list[SpherePoint]:
        return list(self)

    def __repr__(self):
        return f"PointSet(d={self.d}, q={self.q}, N={len(self)})"

    # --- symmetry -------------------------------------------------------------

    def _canonical_rows(self, arr: np.ndarray) -> np.ndarray:
        order = np.lexsort(tuple(arr[:, k] for k in range(arr.shape[1] - 1, -1, -1)))
        return arr[order]

    @cached_property
    def _sorted_numerators(self) -> np.ndarray:
        return self._canonical_rows(self.numerators)

    @cached_property
    def sign_symmetric(self) -> bool:
        """True iff flipping the sign of any single coordinate maps X onto itself."""
        base = self._sorted_numerators
        for c in range(self.d + 1):
            flipped = self.numerators.copy()
            flipped[:, c] *= -1
            if not np.array_equal(self._canonical_rows(flipped), base):
                return False
        return True

    @cached_property
    def permutation_symmetric(self) -> bool:
        """True iff swapping any two coordinates maps X onto itself."""
        base = self._sorted_numerators
        for c in range(self.d):
            swapped = self.numerators.copy()
            swapped[:, [c, c + 1]] = swapped[:, [c + 1, c]]
            if not np.array_equal(self._canonical_rows(swapped), base):
                return False
        return True

    # --- derived quantities ----------------------------------------------------

    @cached_property
    def orbit_representatives(self) -> list[tuple[int, ...]]:
        return orbit_decompose(self)

    def orbit_sizes(self) -> dict[tuple[int, ...], int]:
        keys = -np.sort(-np.abs(self.primitive), axis=1)
        uniq, counts = np.unique(keys, axis=0, return_counts=True)
        return {tuple(int(v) for v in row): int(c) for row, c in zip(uniq, counts)}


def build_pointset(d: int, fld: PrimeField | ExtensionField,
                   budget: int | None = None) -> PointSet:
    """Enumerate solutions over the field and normalize them onto S^d."""
    sols = enumerate_solutions(d, fld, budget=budget)
    return pointset_from_solutions(sols)


def pointset_from_solutions(sols: SolutionSet) -> PointSet:
    return PointSet(d=sols.d, q=sols.q, p=sols.p, e=sols.e, numerators=sols.coords)


def min_separation(X: PointSet, threads: int | None = None) -> float:
    """Minimum pairwise Euclidean distance delta(X)."""
    if len(X) < 2:
        raise ValueError("need at least two points")
    _, min_d2 = kernels.pair_stats(X.coords, (), threads=threads)
    return math.sqrt(min_d2)


def orbit_decompose(X: PointSet) -> list[tuple[int, ...]]:
    """Representatives of the signed-permutation orbits, as primitive integer
    vectors with entries sorted descending; the list is sorted ascending."""
    keys = -np.sort(-np.abs(X.primitive), axis=1)
    uniq = np.unique(keys, axis=0)
    return [tuple(int(v) for v in row) for row in uniq]


def expand_orbit(rep: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All signed permutations of a representative (used to rebuild X in tests)."""
    import itertools

    out: set[tuple[int, ...]] = set()
    for perm in itertools.permutations(rep):
        nz = [i for i, v in enumerate(perm) if v != 0]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            vec = list(perm)
            for i, s in zip(nz, signs):
                vec[i] *= s
            out.add(tuple(vec))
    return out


# --- serialization -------------------------------------------------------------


def _float_repr(x: float) -> str:
    return repr(float(x))


def default_filename(X: PointSet, fmt: str = "csv") -> str:
    return f"X_d{X.d}_q{X.q}.{fmt}"


def write_csv(X: PointSet, fileobj: io.TextIOBase) -> None:
    """One row per point: d+1 integer numerators, norm_sq, d+1 float coords."""
    writer = csv.writer(fileobj, lineterminator="\n")
    header = [f"w{i}" for i in range(X.d + 1)] + ["norm_sq"] + [f"x{i}" for i in range(X.d + 1)]
    writer.writerow(header)
    for i in range(len(X)):
        row = [int(v) for v in X.numerators[i]]
        row.append(int(X.norm_sq[i]))
        row.extend(_float_repr(v) for v in X.coords[i])
        writer.writerow(row)


def csv_row_for_point(pt: SpherePoint) -> str:
    """The CSV row for a single point, e.g. '1,0,0,1,1.0,0.0,0.0'."""
    cells = [str(w) for w in pt.numerators]
    cells.append(str(pt.norm_sq))
    cells.extend(_float_repr(v) for v in pt.float_coords)
    return ",".join(cells)


def write_json(X: PointSet, fileobj: io.TextIOBase) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "pointset",
        "d": X.d,
        "p": X.p,
        "e": X.e,
        "q": X.q,
        "N": len(X),
        "orbit_representatives": [list(r) for r in X.orbit_representatives],
        "points": [
            {
                "w": [int(v) for v in X.numerators[i]],
                "norm_sq": int(X.norm_sq[i]),
                "x": [float(v) for v in X.coords[i]],
            }
            for i in range(len(X))
        ],
    }
    json.dump(doc, fileobj, indent=None, separators=(",", ":"))
    fileobj.write("\n")


def read_csv(fileobj: io.TextIOBase, d: int, q: int, p: int, e: int = 1) -> PointSet:
    """Rebuild a PointSet from its CSV serialization (integers are authoritative)."""
    reader = csv.reader(fileobj)
    header = next(reader)
    ncols = len(header)
    width = (ncols - 1) // 2
    if width != d + 1:
        raise ValueError(f"CSV has {width} numerator columns, expected {d + 1}")
    rows = [[int(c) for c in row[: d + 1]] for row in reader if row]
    return PointSet(d=d, q=q, p=p, e=e, numerators=np.array(rows, dtype=np.int64))


def read_json(fileobj: io.TextIOBase) -> PointSet:
    doc = json.load(fileobj)
    if doc.get("kind") != "pointset":
        raise ValueError("not a pointset document")
    rows = np.array([pt["w"] for pt in doc["points"]], dtype=np.int64)
    return PointSet(d=doc["d"], q=doc["q"], p=doc["p"], e=doc.get("e", 1), numerators=rows)
