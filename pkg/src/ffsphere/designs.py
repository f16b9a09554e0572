"""Exact spherical-design verification.

Everything here is rational arithmetic: a monomial of even total degree 2m
evaluated over X is an integer combination divided by norm_sq^m, so sums over
the point set are exact Fractions and design checks carry zero tolerance.
Odd-degree sums vanish by the sign symmetry of the construction, which is
verified on the point set itself before the shortcut is taken.

The quadrature ground truth is the closed-form average of a monomial over the
sphere: zero if any exponent is odd, otherwise
prod (k_i - 1)!!  /  prod_{j=0}^{m-1} (d + 1 + 2j).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .pointset import PointSet

Exponents = tuple[int, ...]


def monomials_of_degree(nvars: int, t: int) -> Iterator[Exponents]:
    """All exponent vectors of total degree t, x0-heavy first.

    The order is the one induced by combinations_with_replacement on variable
    indices, so the first monomial is always x0^t; witnesses are reported
    against this fixed order.
    """
    for combo in itertools.combinations_with_replacement(range(nvars), t):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield tuple(exps)


def monomial_str(exps: Exponents) -> str:
    parts = []
    for i, k in enumerate(exps):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts) if parts else "1"


def _double_factorial_odd(k: int) -> int:
    """(k-1)!! for even k >= 0; the empty product is 1."""
    return math.prod(range(1, k, 2))


def monomial_sphere_average(exps: Exponents) -> Fraction:
    """Average of prod x_i^{k_i} over S^d with d + 1 = len(exps), exact."""
    if any(k < 0 for k in exps):
        raise ValueError("exponents must be nonnegative")
    if any(k % 2 for k in exps):
        return Fraction(0)
    m = sum(exps) // 2
    d = len(exps) - 1
    num = math.prod(_double_factorial_odd(k) for k in exps)
    den = math.prod(d + 1 + 2 * j for j in range(m))
    return Fraction(num, den)


# --- exact sums over a point set -----------------------------------------------


def monomial_sum(X: PointSet, exps: Exponents) -> Fraction:
    """Exact sum of the monomial over the points of X."""
    if len(exps) != X.d + 1:
        raise ValueError(f"monomial has {len(exps)} variables, X lives on S^{X.d}")
    t = sum(exps)
    if t % 2:
        if not X.sign_symmetric:
            raise ValueError("odd-degree sums are only exact for sign-symmetric sets")
        return Fraction(0)
    if X.sign_symmetric and any(k % 2 for k in exps):
        return Fraction(0)
    m = t // 2
    values = _integer_monomial_values(X, exps)
    total = Fraction(0)
    for Q in np.unique(X.norm_sq):
        mask = X.norm_sq == Q
        if isinstance(values, np.ndarray):
            class_sum = int(values[mask].sum())
        else:
            class_sum = sum(v for v, keep in zip(values, mask) if keep)
        total += Fraction(class_sum, int(Q) ** m)
    return total


def _integer_monomial_values(X: PointSet, exps: Exponents):
    """prod w_i^{k_i} per point, as int64 when provably safe, else Python ints."""
    t = sum(exps)
    max_abs = int(np.abs(X.numerators).max(initial=1))
    if max_abs ** t * len(X) < 2 ** 62:
        vals = np.ones(len(X), dtype=np.int64)
        for c, k in enumerate(exps):
            if k:
                vals *= X.numerators[:, c].astype(np.int64) ** k
        return vals
    rows = X.numerators.tolist()
    return [math.prod(int(w) ** k for w, k in zip(row, exps) if k) for row in rows]


def monomial_point_average(X: PointSet, exps: Exponents) -> Fraction:
    return monomial_sum(X, exps) / len(X)


# --- harmonic polynomials --------------------------------------------------------


class HarmonicPolynomial:
    """A homogeneous polynomial with rational coefficients, checked harmonic."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict[Exponents, Fraction] | Iterable[tuple[Exponents, int]]):
        collected: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                collected[tuple(exps)] = collected.get(tuple(exps), Fraction(0)) + coeff
        self.terms = {e: c for e, c in collected.items() if c}
        degrees = {sum(e) for e in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degrees)}")
        self.degree = degrees.pop() if degrees else 0

    def laplacian(self) -> dict[Exponents, Fraction]:
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            for i, k in enumerate(exps):
                if k >= 2:
                    key = tuple(v - 2 if j == i else v for j, v in enumerate(exps))
                    out[key] = out.get(key, Fraction(0)) + coeff * k * (k - 1)
        return {e: c for e, c in out.items() if c}

    def is_harmonic(self) -> bool:
        return not self.laplacian()

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = monomial_str(exps)
            if c == 1:
                bits.append(f"+ {mono}")
            elif c == -1:
                bits.append(f"- {mono}")
            elif c > 0:
                bits.append(f"+ {c}*{mono}")
            else:
                bits.append(f"- {-c}*{mono}")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"HarmonicPolynomial({self})"


def harmonic_dim(k: int, d: int) -> int:
    """dim of the homogeneous harmonic polynomials of degree k on S^d."""
    return math.comb(d + k, k) - (math.comb(d + k - 2, k - 2) if k >= 2 else 0)


def _unit(exps: Exponents) -> dict[Exponents, int]:
    return {exps: 1}


def harmonic_basis(k: int, d: int) -> list[HarmonicPolynomial]:
    """The explicit degree-k harmonic families for k in 1..4 on S^d.

    Every candidate is verified against the formal Laplacian; anything failing
    that check would be dropped (none of the generated families do).
    """
    if not 1 <= k <= 4:
        raise ValueError("explicit bases are provided for degrees 1..4 only")
    if d < 1:
        raise ValueError("d must be >= 1")
    n = d + 1
    polys: list[HarmonicPolynomial] = []

    def ev(i: int, power: int) -> Exponents:
        out = [0] * n
        out[i] = power
        return tuple(out)

    def add(terms):
        poly = HarmonicPolynomial(terms)
        if poly.is_harmonic():
            polys.append(poly)

    if k == 1:
        for i in range(n):
            add(_unit(ev(i, 1)))
    elif k == 2:
        for i, j in itertools.combinations(range(n), 2):
            add(_unit(_pair(n, i, 1, j, 1)))
        for i in range(n - 1):
            add({ev(i, 2): 1, ev(i + 1, 2): -1})
    elif k == 3:
        for i, j, l in itertools.combinations(range(n), 3):
            add(_unit(_triple(n, i, 1, j, 1, l, 1)))
        for i, j in itertools.permutations(range(n), 2):
            add({ev(i, 3): 1, _pair(n, i, 1, j, 2): -3})
    else:
        for i, j in itertools.combinations(range(n), 2):
            add({_pair(n, i, 3, j, 1): 1, _pair(n, i, 1, j, 3): -1})
        for i, j in itertools.combinations(range(n), 2):
            add({ev(i, 4): 1, _pair(n, i, 2, j, 2): -6, ev(j, 4): 1})
        for i, j in itertools.combinations(range(n), 2):
            for l in range(n):
                if l != i and l != j:
                    add({_pair(n, i, 3, j, 1): 1, _triple(n, i, 1, j, 1, l, 2): -3})
        for combo in itertools.combinations(range(n), 4):
            exps = [0] * n
            for v in combo:
                exps[v] = 1
            add(_unit(tuple(exps)))
    return polys


def _pair(n: int, i: int, ki: int, j: int, kj: int) -> Exponents:
    out = [0] * n
    out[i] += ki
    out[j] += kj
    return tuple(out)


def _triple(n: int, i: int, ki: int, j: int, kj: int, l: int, kl: int) -> Exponents:
    out = [0] * n
    out[i] += ki
    out[j] += kj
    out[l] += kl
    return tuple(out)


def harmonic_sum(X: PointSet, f: HarmonicPolynomial) -> Fraction:
    """Exact sum of f over the points of X; zero for odd degrees by symmetry."""
    if f.degree % 2:
        if not X.sign_symmetric:
            raise ValueError("odd-degree sums are only exact for sign-symmetric sets")
        return Fraction(0)
    total = Fraction(0)
    for exps, coeff in f.terms.items():
        total += coeff * monomial_sum(X, exps)
    return total


# --- index and strength checks ------------------------------------------------


@dataclass(frozen=True)
class IndexCheck:
    t: int
    passed: bool
    witness: Exponents | None = None
    point_average: Fraction | None = None
    sphere_average: Fraction | None = None

    @property
    def witness_str(self) -> str | None:
        return monomial_str(self.witness) if self.witness is not None else None


def index_check(X: PointSet, t: int) -> IndexCheck:
    """Is X a spherical design of index t?  Exact monomial-by-monomial test.

    Odd t passes outright once the sign symmetry of X is verified; even-t
    monomials containing an odd exponent vanish on both sides for the same
    reason and are skipped.
    """
    if t < 1:
        raise ValueError("index must be >= 1")
    symmetric = X.sign_symmetric
    if t % 2 and symmetric:
        return IndexCheck(t=t, passed=True)
    n = len(X)
    for exps in monomials_of_degree(X.d + 1, t):
        if symmetric and any(k % 2 for k in exps):
            continue
        avg = monomial_sum(X, exps) / n
        sphere = monomial_sphere_average(exps)
        if avg != sphere:
            return IndexCheck(t=t, passed=False, witness=exps,
                              point_average=avg, sphere_average=sphere)
    return IndexCheck(t=t, passed=True)


@dataclass(frozen=True)
class DesignReport:
    d: int
    q: int
    n_points: int
    t_max: int
    strength: int
    checks: tuple[IndexCheck, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "design_report",
            "d": self.d,
            "q": self.q,
            "N": self.n_points,
            "t_max": self.t_max,
            "strength": self.strength,
            "checks": [
                {
                    "t": c.t,
                    "pass": c.passed,
                    "witness": c.witness_str,
                    "point_average": str(c.point_average) if c.point_average is not None else None,
                    "sphere_average": str(c.sphere_average) if c.sphere_average is not None else None,
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def design_strength(X: PointSet, t_max: int = 10) -> DesignReport:
    """Largest t <= t_max with all indices 1..t passing, plus the failing witness."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    checks: list[IndexCheck] = []
    strength = t_max
    for t in range(1, t_max + 1):
        res = index_check(X, t)
        checks.append(res)
        if not res.passed:
            strength = t - 1
            break
    return DesignReport(d=X.d, q=X.q, n_points=len(X), t_max=t_max,
                        strength=strength, checks=tuple(checks))
