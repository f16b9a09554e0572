"""Arithmetic in F_p and F_{p^e} for odd primes p.

Elements are handled through two views that always agree:

* a canonical index in ``range(q)``: for prime fields the residue itself, for
  extension fields the base-p integer whose digits (low power first) are the
  coefficients on the polynomial basis 1, x, ..., x^{e-1};
* a :class:`FieldElement` wrapper exposing operator arithmetic.

Both field classes expose the small lookup tables (squares, square roots,
centered integers) that the solution enumerator consumes, plus the quadratic
character and the centered-integer map used to place points on the sphere.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

DEFAULT_FIELD_CAP = 2500


def is_odd_prime(n: int) -> bool:
    """Deterministic trial-division primality test, adequate at table scale."""
    if n < 3 or n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldElement:
    """An element of a prime or extension field, in canonical reduced form."""

    __slots__ = ("field", "index")

    def __init__(self, field, index: int):
        self.field = field
        self.index = int(index)

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients (a_1, ..., a_e) on the polynomial basis, each in 0..p-1."""
        return self.field.index_to_coeffs(self.index)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.index
        if isinstance(other, int):
            return self.field.element(other).index
        return NotImplemented

    def __add__(self, other):
        idx = self._coerce(other)
        if idx is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add_index(self.index, idx))

    __radd__ = __add__

    def __sub__(self, other):
        idx = self._coerce(other)
        if idx is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_index(self.index, idx))

    def __mul__(self, other):
        idx = self._coerce(other)
        if idx is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_index(self.index, idx))

    __rmul__ = __mul__

    def __truediv__(self, other):
        idx = self._coerce(other)
        if idx is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_index(self.index, self.field.inv_index(idx)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_index(self.index))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow_index(self.index, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_index(self.index))

    def centered_int(self) -> int:
        """The centered integer M associated with this element."""
        return self.field.centered_int(self.index)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        if self.field.e == 1:
            return f"FieldElement({self.index} mod {self.field.p})"
        return f"FieldElement({self.coeffs} in GF({self.field.p}^{self.field.e}))"


class PrimeField:
    """The field of integers modulo an odd prime p."""

    e = 1

    def __init__(self, p: int, cap: int = DEFAULT_FIELD_CAP):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if p > cap:
            raise ValueError(f"field order {p} exceeds cap {cap}")
        self.p = int(p)
        self.q = self.p
        self._build_tables()

    # --- canonical-index arithmetic ---------------------------------------

    def add_index(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub_index(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul_index(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg_index(self, a: int) -> int:
        return (-a) % self.p

    def inv_index(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow_index(self, a: int, n: int) -> int:
        if n < 0:
            return pow(self.inv_index(a), -n, self.p)
        return pow(a, n, self.p)

    def index_to_coeffs(self, idx: int) -> tuple[int, ...]:
        return (idx,)

    def coeffs_to_index(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != 1:
            raise ValueError("prime field elements have one coefficient")
        return coeffs[0] % self.p

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.coeffs_to_index(value))
        return FieldElement(self, int(value) % self.p)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, i) for i in range(self.q))

    def centered_int(self, idx: int) -> int:
        return idx if idx <= (self.p - 1) // 2 else idx - self.p

    def quadratic_character(self, a) -> int:
        """η(a): 0 at zero, +1 on nonzero squares, -1 on non-squares (Euler's criterion)."""
        idx = a.index if isinstance(a, FieldElement) else int(a) % self.p
        if idx == 0:
            return 0
        r = pow(idx, (self.p - 1) // 2, self.p)
        return 1 if r == 1 else -1

    def sqrt_set(self, c) -> tuple[FieldElement, ...]:
        """All y with y*y == c, from the precomputed table (0, 1, or 2 roots)."""
        idx = c.index if isinstance(c, FieldElement) else int(c) % self.p
        return tuple(FieldElement(self, int(r)) for r in self._sqrt_lists[idx])

    # --- enumeration tables -------------------------------------------------

    def _build_tables(self):
        q = self.q
        idx = np.arange(q, dtype=np.int64)
        self.square_table = (idx * idx) % self.p
        self.one_minus_table = (1 - idx) % self.p
        self.centered_table = np.where(idx <= (self.p - 1) // 2, idx, idx - self.p)
        lists: list[list[int]] = [[] for _ in range(q)]
        for y in range(q):
            lists[int(self.square_table[y])].append(y)
        self._sqrt_lists = [tuple(v) for v in lists]
        self.sqrt_count = np.array([len(v) for v in lists], dtype=np.int8)
        roots = np.full((q, 2), -1, dtype=np.int64)
        for c, v in enumerate(lists):
            for j, y in enumerate(v):
                roots[c, j] = y
        self.sqrt_roots = roots

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtensionField:
    """F_{p^e} as F_p[x] modulo a monic irreducible polynomial of degree e.

    ``modulus`` holds the non-leading coefficients (c_0, ..., c_{e-1}) of
    x^e + c_{e-1} x^{e-1} + ... + c_0.  With e = 1 the whole construction
    degenerates to F_p (modulus x), which is exercised in tests against
    :class:`PrimeField` directly.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None,
                 cap: int = DEFAULT_FIELD_CAP):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p ** e
        if q > cap:
            raise ValueError(f"field order {q} exceeds cap {cap}")
        self.p = int(p)
        self.e = int(e)
        self.q = q
        if modulus is None:
            modulus = _smallest_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e:
                raise ValueError(f"modulus needs {e} non-leading coefficients")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"x^{e} + {list(modulus)} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._build_tables()

    # --- coefficient/index codecs -------------------------------------------

    def index_to_coeffs(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return tuple(out)

    def coeffs_to_index(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise ValueError(f"at most {self.e} coefficients expected")
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (int(c) % self.p)
        return idx

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.coeffs_to_index(value))
        return FieldElement(self, int(value) % self.p)  # integers embed via constants

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, i) for i in range(self.q))

    # --- canonical-index arithmetic ---------------------------------------

    def add_index(self, a: int, b: int) -> int:
        p, out, mult = self.p, 0, 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub_index(self, a: int, b: int) -> int:
        return self.add_index(a, self.neg_index(b))

    def neg_index(self, a: int) -> int:
        p, out, mult = self.p, 0, 1
        for _ in range(self.e):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def mul_index(self, a: int, b: int) -> int:
        ca, cb = self.index_to_coeffs(a), self.index_to_coeffs(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.coeffs_to_index(self._reduce(prod))

    def _reduce(self, poly: list[int]) -> list[int]:
        # x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1})
        p, e, mod = self.p, self.e, self.modulus
        for k in range(len(poly) - 1, e - 1, -1):
            top = poly[k]
            if top:
                poly[k] = 0
                for j in range(e):
                    poly[k - e + j] = (poly[k - e + j] - top * mod[j]) % p
        return poly[:e]

    def inv_index(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow_index(a, self.q - 2)

    def pow_index(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv_index(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul_index(result, base)
            base = self.mul_index(base, base)
            n >>= 1
        return result

    def centered_int(self, idx: int) -> int:
        """M = sum_i c_i p^{i-1} over the centered digits c_i in [-(p-1)/2, (p-1)/2]."""
        half, out, mult = (self.p - 1) // 2, 0, 1
        for a in self.index_to_coeffs(idx):
            out += (a if a <= half else a - self.p) * mult
            mult *= self.p
        return out

    def sqrt_set(self, c) -> tuple[FieldElement, ...]:
        idx = c.index if isinstance(c, FieldElement) else self.element(c).index
        return tuple(FieldElement(self, int(r)) for r in self._sqrt_lists[idx])

    # --- enumeration tables -------------------------------------------------

    def _build_tables(self):
        q = self.q
        self.square_table = np.array([self.mul_index(i, i) for i in range(q)],
                                     dtype=np.int64)
        self.one_minus_table = np.array([self.sub_index(1, i) for i in range(q)],
                                        dtype=np.int64)
        self.centered_table = np.array([self.centered_int(i) for i in range(q)],
                                       dtype=np.int64)
        lists: list[list[int]] = [[] for _ in range(q)]
        for y in range(q):
            lists[int(self.square_table[y])].append(y)
        self._sqrt_lists = [tuple(v) for v in lists]
        self.sqrt_count = np.array([len(v) for v in lists], dtype=np.int8)
        roots = np.full((q, 2), -1, dtype=np.int64)
        for c, v in enumerate(lists):
            for j, y in enumerate(v):
                roots[c, j] = y
        self.sqrt_roots = roots

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, out, mult = self.p, 0, 1
        for _ in range(self.e):
            out = out + ((a + b) % p) * mult
            a = a // p
            b = b // p
            mult *= p
        return out

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.e == self.e and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.e, self.modulus))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, e={self.e}, modulus={self.modulus})"


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num / den over F_p; both low-degree-first, den monic."""
    num = [c % p for c in num]
    dn = len(den) - 1
    while len(num) > dn:
        top = num[-1]
        if top:
            for j in range(dn + 1):
                num[len(num) - 1 - dn + j] = (num[len(num) - 1 - dn + j] - top * den[j]) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= e // 2."""
    e = len(modulus)
    if e == 1:
        return True
    full = list(modulus) + [1]
    if full[0] == 0:
        return False  # divisible by x
    for deg in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            den = list(tail) + [1]
            if not _poly_mod(full, den, p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """First irreducible x^e + c_{e-1}x^{e-1} + ... + c_0, scanning the
    coefficient vector as a base-p counter with the constant term fastest
    (so the search visits x^e, x^e + 1, x^e + 2, ...)."""
    if e == 1:
        return (0,)  # modulus x: plain F_p
    for m in range(p ** e):
        coeffs = []
        v = m
        for _ in range(e):
            v, r = divmod(v, p)
            coeffs.append(r)
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")  # unreachable


def build_extension(p: int, e: int, cap: int = DEFAULT_FIELD_CAP) -> ExtensionField:
    """F_{p^e} with the deterministic (smallest) irreducible modulus."""
    return ExtensionField(p, e, cap=cap)


def quadratic_character(a: int, p: int) -> int:
    """η on F_p without building a field object (Euler's criterion)."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
