"""Riesz s-energy of point configurations and the associated constants.

The pairwise sum E(s) = sum_{i<j} ||x_i - x_j||^{-s} runs on the blocked
compensated kernel (see :mod:`ffsphere.kernels`), so results are deterministic
for any thread count.  Reports carry every normalization of interest --
E/N^2, E/(N^2 ln N) with the natural logarithm, and E/N^{1+s/d} -- plus the
continuous-energy residuals for 0 < s < d.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import kernels
from .errors import DegeneratePairError
from .pointset import PointSet

COINCIDENCE_THRESHOLD = 1e-14

# zeta(1/2); validated in tests against an accelerated Dirichlet-eta series.
ZETA_HALF = -1.4603545088095868


def _format_s(s) -> str:
    if isinstance(s, str):
        return s
    if isinstance(s, int):
        return str(s)
    text = repr(float(s))
    return text[:-2] if text.endswith(".0") else text


def pair_energy(X: PointSet, s, threads: int | None = None) -> float:
    """E(s, X) = sum over pairs of inverse distances to the power s."""
    return pair_energy_many(X, [s], threads=threads)[0][0]


def pair_energy_many(X: PointSet, s_values, threads: int | None = None,
                     ) -> tuple[list[float], float]:
    """Energies for several s in one sweep, plus the minimum pair distance."""
    svals = [float(s) for s in s_values]
    if any(s <= 0 for s in svals):
        raise ValueError("all s must be positive")
    if len(X) < 2:
        raise ValueError("need at least two points")
    sums, min_d2 = kernels.pair_stats(X.coords, svals, threads=threads)
    delta = math.sqrt(min_d2)
    if delta < COINCIDENCE_THRESHOLD:
        raise DegeneratePairError(
            f"minimum pair distance {delta:.3e} is below {COINCIDENCE_THRESHOLD}")
    return [float(v) for v in sums], delta


def energy_integral_constant(s: float, d: int) -> float:
    """The double energy integral over S^d x S^d for 0 < s < d (gamma closed form)."""
    s = float(s)
    if not 0 < s < d:
        raise ValueError(f"the energy integral diverges unless 0 < s < d, got s={s}, d={d}")
    log_value = (math.lgamma((d + 1) / 2) + math.lgamma(d - s)
                 - math.lgamma((d - s + 1) / 2) - math.lgamma(d - s / 2))
    return math.exp(log_value)


def limit_constant_s_eq_d(d: int) -> float:
    """Limit of E(d)/(N^2 ln N) for minimal configurations: the s = d constant."""
    if d < 1:
        raise ValueError("d must be >= 1")
    log_value = (math.lgamma((d + 1) / 2) - math.log(2 * d)
                 - math.lgamma(d / 2) - math.lgamma(0.5))
    return math.exp(log_value)


def _threes_series(cut: int = 1000) -> float:
    """sum_{n>=0} (3n+1)^{-1/2} - (3n+2)^{-1/2}, Euler-Maclaurin tail from ``cut``."""
    head = math.fsum(
        (3 * n + 1) ** -0.5 - (3 * n + 2) ** -0.5 for n in range(cut)
    )
    a1, a2 = 3.0 * cut + 1.0, 3.0 * cut + 2.0
    integral = (2.0 / 3.0) * (math.sqrt(a2) - math.sqrt(a1))
    g0 = a1 ** -0.5 - a2 ** -0.5
    g1 = -1.5 * a1 ** -1.5 + 1.5 * a2 ** -1.5
    g3 = -(405.0 / 8.0) * a1 ** -3.5 + (405.0 / 8.0) * a2 ** -3.5
    return head + integral + 0.5 * g0 - g1 / 12.0 + g3 / 720.0


def conjectured_R_constant() -> float:
    """The conjectured d=2 residual limit, about 0.55305."""
    factor = -3.0 * math.sqrt(math.sqrt(3.0) / (8.0 * math.pi)) * ZETA_HALF
    return factor * _threes_series()


# --- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class EnergyEntry:
    """All normalizations of one raw energy value."""

    s_text: str
    s: float
    energy: float
    over_n2: float            # E / N^2
    over_n2_log: float        # E / (N^2 ln N)
    over_n_pow: float         # E / N^{1+s/d}
    half_integral: float | None = None   # I_{s,d} / 2, when 0 < s < d
    residual_n2: float | None = None     # I/2 - E/N^2
    residual_pow: float | None = None    # (I/2 * N^2 - E) / N^{1+s/d}

    def to_json_dict(self) -> dict:
        return {
            "s": self.s_text,
            "energy": self.energy,
            "E_over_N2": self.over_n2,
            "E_over_N2_logN": self.over_n2_log,
            "E_over_N_pow": self.over_n_pow,
            "half_integral": self.half_integral,
            "residual_over_N2": self.residual_n2,
            "residual_over_N_pow": self.residual_pow,
        }


@dataclass(frozen=True)
class EnergyReport:
    d: int
    q: int
    p: int
    e: int
    n_points: int
    entries: tuple[EnergyEntry, ...]
    delta: float

    def entry(self, s) -> EnergyEntry:
        text = _format_s(s)
        for ent in self.entries:
            if ent.s_text == text or ent.s == float(s):
                return ent
        raise KeyError(f"no entry for s={s}")

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "energy_report",
            "d": self.d,
            "q": self.q,
            "p": self.p,
            "e": self.e,
            "N": self.n_points,
            "min_separation": self.delta,
            "energies": [ent.to_json_dict() for ent in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def normalized_report(X: PointSet, s_values, threads: int | None = None) -> EnergyReport:
    """Energies at each s with every normalization and the observed separation."""
    texts = [_format_s(s) for s in s_values]
    energies, delta = pair_energy_many(X, [float(t) for t in texts], threads=threads)
    n = len(X)
    log_n = math.log(n)
    entries = []
    for text, energy in zip(texts, energies):
        s = float(text)
        over_n2 = energy / n ** 2
        over_n2_log = energy / (n ** 2 * log_n) if n > 1 else math.inf
        over_n_pow = energy / n ** (1.0 + s / X.d)
        half_i = residual_n2 = residual_pow = None
        if 0 < s < X.d:
            half_i = 0.5 * energy_integral_constant(s, X.d)
            residual_n2 = half_i - over_n2
            residual_pow = (half_i * n ** 2 - energy) / n ** (1.0 + s / X.d)
        entries.append(EnergyEntry(
            s_text=text, s=s, energy=energy, over_n2=over_n2,
            over_n2_log=over_n2_log, over_n_pow=over_n_pow,
            half_integral=half_i, residual_n2=residual_n2, residual_pow=residual_pow,
        ))
    return EnergyReport(d=X.d, q=X.q, p=X.p, e=X.e, n_points=n,
                        entries=tuple(entries), delta=delta)


@dataclass(frozen=True)
class SpacingReport:
    """Self-consistent separation bound delta >= C^{-1/s} N^{-(1/d + 1/s)}."""

    d: int
    q: int
    n_points: int
    s: float
    energy: float
    c_value: float       # C = E / N^{1+s/d}
    bound: float
    delta: float
    ratio: float

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "spacing_report",
            "d": self.d,
            "q": self.q,
            "N": self.n_points,
            "s": self.s,
            "energy": self.energy,
            "C": self.c_value,
            "bound": self.bound,
            "delta": self.delta,
            "ratio": self.ratio,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def separation_bound_report(X: PointSet, s, threads: int | None = None) -> SpacingReport:
    """Bound from the set's own energy; the ratio delta/bound is the diagnostic."""
    s = float(s)
    if s <= X.d:
        raise ValueError(f"the separation bound needs s > d, got s={s}, d={X.d}")
    energies, delta = pair_energy_many(X, [s], threads=threads)
    energy = energies[0]
    n = len(X)
    c_value = energy / n ** (1.0 + s / X.d)
    bound = c_value ** (-1.0 / s) * n ** -(1.0 / X.d + 1.0 / s)
    return SpacingReport(d=X.d, q=X.q, n_points=n, s=s, energy=energy,
                         c_value=c_value, bound=bound, delta=delta,
                         ratio=delta / bound)
