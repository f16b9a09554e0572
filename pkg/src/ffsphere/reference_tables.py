"""Published d=2 and d=3 energy tables, embedded verbatim, plus comparison.

The two tables below are transcribed cell-for-cell from the published data
(14 significant digits as printed); a pinned checksum test guards against
accidental edits.  ``compare`` classifies each cell of a computed run against
the reference: MATCH within tolerance, KNOWN_DISCREPANCY when the cell is
pre-annotated or matches one of the alternate normalization candidates, and
MISMATCH otherwise.

Column conventions (canonical interpretation):

* table A (d=2): e1 = E(1)/N^2, e2 = E(2)/(N^2 ln N), e3 = E(3)/N^{5/2}
* table B (d=3): e1 = E(2)/N^2, e2 = E(3)/(N^2 ln N), e3 = E(3.125)/N^{2.04}

The e3 columns (and one A cell) are known not to follow a single convention
in the source; alternate candidates are computed alongside so every cell is
accounted for explicitly.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

__all__ = [
    "ReferenceRow",
    "ComparisonCell",
    "ComparisonReport",
    "load_appendix",
    "tables_checksum",
    "compare",
    "reproduce_appendix",
    "APPENDIX_SPECS",
]

_APPENDIX_A = (
    (3, "0.27736892706218", "0.01046457424783", "0.11980183204618"),
    (5, "0.40195539994316", "0.11628809346709", "0.16900002651468"),
    (7, "0.43294284766539", "0.14155651348989", "0.20783488490901"),
    (11, "0.47263289296172", "0.15758965144183", "0.22872928195394"),
    (13, "0.46734388392531", "0.13930424776208", "0.19737146213200"),
    (17, "0.47831260388752", "0.14292677178733", "0.19559212838090"),
    (19, "0.48862305761514", "0.15647575327531", "0.21230845889239"),
    (23, "0.49680020536376", "0.16083024644030", "0.21114298075140"),
    (29, "0.49963999603979", "0.20411306813044", "0.25438001898121"),
    (31, "0.50558991175900", "0.20872789826935", "0.25835091872858"),
    (37, "0.49679590269129", "0.16908367785692", "0.20014914672875"),
    (41, "0.49967248912416", "0.18213470230307", "0.21067502961875"),
    (43, "0.50082510107625", "0.15645393314738", "0.17997113615146"),
    (47, "0.50395991784508", "0.17448493068513", "0.19648831884456"),
    (53, "0.50302988221990", "0.20628228220202", "0.22447505302842"),
    (59, "0.50770676508130", "0.21250313388376", "0.22610594444172"),
    (61, "0.50495658406683", "0.22070120695148", "0.23184436755631"),
    (67, "0.50654515261995", "0.19456180151876", "0.20028103675876"),
    (71, "0.50799678645242", "0.19531553592815", "0.19798724786361"),
    (73, "0.50138319997937", "0.17763041043367", "0.17807400648780"),
    (79, "0.50667682389347", "0.24131448167150", "0.23767087684753"),
    (83, "0.50632565820368", "0.19072462271388", "0.18532160079489"),
    (89, "0.50420397664596", "0.19014449465661", "0.18065926631423"),
    (97, "0.50484339249495", "0.17456698846262", "0.16193580914486"),
    (101, "0.50561387064791", "0.21342480676679", "0.19574508602563"),
    (103, "0.50800632405351", "0.19108133195127", "0.17476558366460"),
    (107, "0.50744167603236", "0.21193413555663", "0.19173518130406"),
    (109, "0.50530215087720", "0.21451186060578", "0.19252922201869"),
    (113, "0.50508191824201", "0.22699743097426", "0.20164193844709"),
    (127, "0.50685489076967", "0.18562274384222", "0.15976587408138"),
    (131, "0.50784482237133", "0.21884299920671", "0.18664215587238"),
    (137, "0.50588778915797", "0.22528035319823", "0.18918543160007"),
    (139, "0.50868464653880", "0.22665247011204", "0.18992843422136"),
    (149, "0.50654747356646", "0.25299360855091", "0.20721585270831"),
    (151, "0.50839219613404", "0.21335681640995", "0.17440146172139"),
    (157, "0.50550126525598", "0.24862960416529", "0.20046770502092"),
    (163, "0.50708965412530", "0.18736597295888", "0.14964778305454"),
    (167, "0.50726676470783", "0.19666444095315", "0.15591738945230"),
    (173, "0.50594513571582", "0.20098724096747", "0.15735377427577"),
    (179, "0.50824611328744", "0.33454655513670", "0.25964637978174"),
    (181, "0.50687976341157", "0.27359266111448", "0.21125394734360"),
    (191, "0.50841113729910", "0.20611531648543", "0.15679195137179"),
    (193, "0.50641535139461", "0.23733139042064", "0.17966621151199"),
    (197, "0.50665988263156", "0.22671894926843", "0.17054554488575"),
    (199, "0.50721503705415", "0.22942421796768", "0.17230976048709"),
    (211, "0.50723259692356", "0.19527807424465", "0.14400243632793"),
)

_APPENDIX_B = (
    (3, "0.28993055555556", "0.07726112747611", "0.24132173335499"),
    (5, "0.37650018037519", "0.08604648073508", "0.42113832739910"),
    (7, "0.42533543875492", "0.09834709791994", "0.60593660203289"),
    (11, "0.49141162848846", "0.14167115959202", "1.1735995123910"),
    (13, "0.48120035766978", "0.12590020472700", "1.1139764584208"),
    (17, "0.52132037047210", "0.19355085551622", "2.0982770508338"),
    (19, "0.50870874907126", "0.14945260382314", "1.6099778963136"),
    (23, "0.50664591863877", "0.15354023703434", "1.8296037700500"),
    (29, "0.51703948372378", "0.15825300052952", "2.0440071303765"),
    (31, "0.51738403568925", "0.15916399708017", "2.1127707717489"),
    (37, "0.51884012094570", "0.18738716021182", "2.8402487195221"),
    (41, "0.52328941444401", "0.17241718697984", "2.5921542948948"),
    (43, "0.52006281540841", "0.16742067897271", "2.5555792369681"),
    (47, "0.52154686231626", "0.19360006853089", "3.2832846733182"),
    (53, "0.52302701242501", "0.21637834813051", "3.9535044537455"),
    (59, "0.52414896518911", "0.26040121306624", "5.3775580289229"),
    (67, "0.52352555470433", "0.16356808691818", "2.8640336098518"),
    (71, "0.52278118326934", "0.16964255435064", "3.0594908965203"),
    (73, "0.52466921979023", "0.19727729124473", "3.8343687834560"),
    (79, "0.52456644056252", "0.18994184763923", "3.7615796423715"),
    (83, "0.52440012994288", "0.18298261836839", "3.5924738028014"),
)


# Static annotations: cells whose printed value is known not to match the
# canonical column convention.  A p=3 e2 is an exact one-decimal shift of the
# computed value; the e3 cells listed follow an alternate normalization.
ANNOTATIONS: dict[tuple[str, int, str], str] = {
    ("A", 3, "e2"): "decimal-shift-typo",
    ("A", 3, "e3"): "alternate-normalization",
    ("B", 3, "e3"): "alternate-normalization (matches E(3.125)/N^2)",
}


@dataclass(frozen=True)
class ReferenceRow:
    d: int
    p: int
    e1: float
    e2: float
    e3: float
    raw: tuple[str, str, str]
    annotations: dict[str, str] = field(default_factory=dict)

    def cell(self, name: str) -> float:
        return {"e1": self.e1, "e2": self.e2, "e3": self.e3}[name]


def load_appendix(which: str) -> list[ReferenceRow]:
    """The published table rows for 'A' (d=2) or 'B' (d=3)."""
    which = which.upper()
    if which == "A":
        rows, d = _APPENDIX_A, 2
    elif which == "B":
        rows, d = _APPENDIX_B, 3
    else:
        raise ValueError("appendix must be 'A' or 'B'")
    out = []
    for p, e1, e2, e3 in rows:
        notes = {
            col: tag
            for (tbl, pp, col), tag in ANNOTATIONS.items()
            if tbl == which and pp == p
        }
        out.append(ReferenceRow(d=d, p=p, e1=float(e1), e2=float(e2), e3=float(e3),
                                raw=(e1, e2, e3), annotations=notes))
    return out


def tables_checksum() -> str:
    """SHA-256 over the embedded tables; pinned by a transcription-integrity test."""
    blob = json.dumps({"A": _APPENDIX_A, "B": _APPENDIX_B}).encode()
    return hashlib.sha256(blob).hexdigest()


# --- comparison ------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonCell:
    p: int
    column: str
    reference: float
    computed: float
    abs_delta: float
    rel_delta: float
    classification: str          # MATCH | KNOWN_DISCREPANCY | MISMATCH
    note: str | None = None      # annotation tag or matching alternate

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "column": self.column,
            "reference": self.reference,
            "computed": self.computed,
            "abs_delta": self.abs_delta,
            "rel_delta": self.rel_delta,
            "classification": self.classification,
            "note": self.note,
        }


@dataclass(frozen=True)
class ComparisonReport:
    which: str
    tol: float
    cells: tuple[ComparisonCell, ...]
    missing: tuple[int, ...] = ()

    @property
    def counts(self) -> dict[str, int]:
        out = {"MATCH": 0, "KNOWN_DISCREPANCY": 0, "MISMATCH": 0}
        for c in self.cells:
            out[c.classification] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["MISMATCH"] == 0

    def discrepancies(self) -> list[ComparisonCell]:
        return [c for c in self.cells if c.classification != "MATCH"]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "comparison_report",
            "appendix": self.which,
            "tol": self.tol,
            "counts": self.counts,
            "missing_p": list(self.missing),
            "cells": [c.to_json_dict() for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_text(self) -> str:
        lines = [
            f"appendix {self.which} comparison (tol {self.tol:g})",
            f"{'p':>5} {'col':>4} {'reference':>18} {'computed':>18} "
            f"{'abs delta':>12}  classification",
        ]
        for c in self.cells:
            note = f"  [{c.note}]" if c.note else ""
            lines.append(
                f"{c.p:>5} {c.column:>4} {c.reference:>18.14g} {c.computed:>18.14g} "
                f"{c.abs_delta:>12.3e}  {c.classification}{note}"
            )
        counts = self.counts
        lines.append(
            f"summary: {counts['MATCH']} match, "
            f"{counts['KNOWN_DISCREPANCY']} known discrepancies, "
            f"{counts['MISMATCH']} mismatches"
        )
        if self.missing:
            lines.append("missing computed rows for p = "
                         + ", ".join(str(p) for p in self.missing))
        return "\n".join(lines)


def _classify(which: str, p: int, column: str, reference: float, computed: float,
              alternates: dict[str, float], tol: float) -> ComparisonCell:
    abs_delta = abs(computed - reference)
    rel_delta = abs_delta / abs(reference) if reference else math.inf
    note = ANNOTATIONS.get((which, p, column))
    if abs_delta <= tol:
        cls = "MATCH"
    else:
        alt_hit = next(
            (name for name, value in alternates.items()
             if abs(value - reference) <= tol),
            None,
        )
        if alt_hit is not None:
            cls = "KNOWN_DISCREPANCY"
            note = f"matches {alt_hit}" if note is None else f"{note}; matches {alt_hit}"
        elif note is not None:
            cls = "KNOWN_DISCREPANCY"
        else:
            cls = "MISMATCH"
    return ComparisonCell(p=p, column=column, reference=reference, computed=computed,
                          abs_delta=abs_delta, rel_delta=rel_delta,
                          classification=cls, note=note)


def compare(computed: dict[int, dict], reference: list[ReferenceRow],
            tol: float = 1e-6, which: str = "A") -> ComparisonReport:
    """Cell-by-cell comparison of computed rows against a published table.

    ``computed`` maps p to {"e1": v, "e2": v, "e3": v, "alternates": {col: {...}}}.
    Reference rows with no computed counterpart are reported, not fatal.
    """
    cells = []
    missing = []
    for row in reference:
        got = computed.get(row.p)
        if got is None:
            missing.append(row.p)
            continue
        for column in ("e1", "e2", "e3"):
            alternates = got.get("alternates", {}).get(column, {})
            cells.append(_classify(which, row.p, column, row.cell(column),
                                   got[column], alternates, tol))
    return ComparisonReport(which=which, tol=tol, cells=tuple(cells),
                            missing=tuple(missing))


# --- end-to-end reproduction -----------------------------------------------------

# Which energies each appendix needs, and how its columns are normalized.
APPENDIX_SPECS = {
    "A": {
        "d": 2,
        "s_values": ("1", "2", "2.5", "3"),
        "default_max_p": 101,
    },
    "B": {
        "d": 3,
        "s_values": ("2", "3", "3.125", "3.25"),
        "default_max_p": 31,
    },
}


def _appendix_columns(which: str, n: int, energy_by_s: dict[str, float],
                      ) -> tuple[dict[str, float], dict[str, dict[str, float]]]:
    log_n = math.log(n)
    if which == "A":
        cols = {
            "e1": energy_by_s["1"] / n ** 2,
            "e2": energy_by_s["2"] / (n ** 2 * log_n),
            "e3": energy_by_s["3"] / n ** 2.5,
        }
        alternates = {
            "e2": {"E(2)/N^2/10": cols["e2"] / 10.0},
            "e3": {
                "E(2.5)/N^2.25": energy_by_s["2.5"] / n ** 2.25,
                "E(2.5)/N^2.5": energy_by_s["2.5"] / n ** 2.5,
                "E(2)/N^2.25": energy_by_s["2"] / n ** 2.25,
            },
        }
    else:
        cols = {
            "e1": energy_by_s["2"] / n ** 2,
            "e2": energy_by_s["3"] / (n ** 2 * log_n),
            "e3": energy_by_s["3.125"] / n ** 2.04,
        }
        alternates = {
            "e3": {
                "E(3.125)/N^2": energy_by_s["3.125"] / n ** 2,
                "E(3.25)/N^2.04": energy_by_s["3.25"] / n ** 2.04,
                "E(3.25)/N^2": energy_by_s["3.25"] / n ** 2,
            },
        }
    return cols, alternates


def computed_appendix_row(which: str, X, threads: int | None = None) -> dict:
    """Canonical e1/e2/e3 cells plus alternate normalizations for one point set."""
    from .energy import pair_energy_many

    spec = APPENDIX_SPECS[which.upper()]
    svals = spec["s_values"]
    energies, _ = pair_energy_many(X, [float(s) for s in svals], threads=threads)
    energy_by_s = dict(zip(svals, energies))
    cols, alternates = _appendix_columns(which.upper(), len(X), energy_by_s)
    row = dict(cols)
    row["alternates"] = alternates
    row["energies"] = energy_by_s
    return row


def reproduce_appendix(which: str, max_p: int | None = None, tol: float = 1e-6,
                       threads: int | None = None, budget: int | None = None,
                       ) -> ComparisonReport:
    """Rebuild every in-range point set, recompute the table, compare."""
    from .fields import PrimeField
    from .pointset import build_pointset

    which = which.upper()
    spec = APPENDIX_SPECS[which]
    if max_p is None:
        max_p = spec["default_max_p"]
    reference = [row for row in load_appendix(which) if row.p <= max_p]
    computed = {}
    for row in reference:
        X = build_pointset(spec["d"], PrimeField(row.p), budget=budget)
        computed[row.p] = computed_appendix_row(which, X, threads=threads)
    return compare(computed, reference, tol=tol, which=which)
