"""Command-line interface.

Subcommands
-----------
generate      build X(d, q), write it to a file, print N and the orbit table
design-check  exact design-strength report; exit 0 iff strength >= 3
energy        s-energies with all normalizations for one point set
reproduce     recompute a published table (A or B) and compare cell by cell
spacing       separation lower bound from the set's own energy vs observed

Exit codes: 0 success, 2 validation error, 3 enumeration budget exceeded,
4 comparison mismatch (including a design check below strength 3).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .designs import design_strength
from .energy import normalized_report, separation_bound_report
from .errors import BudgetError, FFSphereError
from .fields import ExtensionField, PrimeField
from .kernels import backend_name
from .pointset import build_pointset, default_filename, min_separation, write_csv, write_json
from .reference_tables import APPENDIX_SPECS, reproduce_appendix

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _fmt(value: float) -> str:
    return f"{value:.14g}"


def _field_for(args):
    if args.e > 1:
        return ExtensionField(args.p, args.e)
    return PrimeField(args.p)


def _orbit_text(rep: tuple[int, ...]) -> str:
    norm_sq = sum(v * v for v in rep)
    body = "(" + ",".join(str(v) for v in rep) + ")"
    return body if norm_sq == 1 else f"{body}/sqrt({norm_sq})"


def _parse_s_list(text: str) -> list[str]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        value = float(chunk)  # validates
        if value <= 0:
            raise ValueError(f"s must be positive, got {chunk}")
        out.append(chunk)
    if not out:
        raise ValueError("expected at least one s value")
    return out


def _add_field_args(sub, with_e=True):
    sub.add_argument("-d", type=int, required=True, help="sphere dimension (S^d)")
    sub.add_argument("-p", type=int, required=True, help="odd prime")
    if with_e:
        sub.add_argument("-e", type=int, default=1,
                         help="extension degree: work over F_{p^e} (default 1)")
    sub.add_argument("--budget", type=int, default=None,
                     help="enumeration budget in q^d sweep iterations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffsphere",
        description="Point sets on S^d from quadratic forms over finite fields.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct X(d, q) and write it to a file")
    _add_field_args(gen)
    gen.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    gen.add_argument("--out", default=None, help="output path (default X_d{d}_q{q}.{ext})")

    chk = sub.add_parser("design-check", help="exact spherical-design strength")
    _add_field_args(chk)
    chk.add_argument("--t-max", type=int, default=10, dest="t_max")
    chk.add_argument("--format", choices=("json", "text"), default="text")
    chk.add_argument("--out", default=None)

    eng = sub.add_parser("energy", help="Riesz s-energies with all normalizations")
    _add_field_args(eng)
    eng.add_argument("-s", required=True, help="comma-separated s values, e.g. 1,2,2.5")
    eng.add_argument("--threads", type=int, default=None)
    eng.add_argument("--format", choices=("csv", "json", "text"), default="text")
    eng.add_argument("--out", default=None)

    rep = sub.add_parser("reproduce", help="recompute a published table and compare")
    rep.add_argument("--appendix", choices=("A", "B"), required=True)
    rep.add_argument("--max-p", type=int, default=None, dest="max_p",
                     help="largest prime to recompute (defaults: A 101, B 31)")
    rep.add_argument("--tol", type=float, default=1e-6)
    rep.add_argument("--threads", type=int, default=None)
    rep.add_argument("--budget", type=int, default=None)
    rep.add_argument("--format", choices=("json", "text"), default="text")
    rep.add_argument("--out", default=None)

    spc = sub.add_parser("spacing", help="separation bound vs observed minimum distance")
    _add_field_args(spc)
    spc.add_argument("-s", required=True, type=float, help="exponent, must exceed d")
    spc.add_argument("--threads", type=int, default=None)
    spc.add_argument("--format", choices=("json", "text"), default="text")
    spc.add_argument("--out", default=None)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def cmd_generate(args) -> int:
    X = build_pointset(args.d, _field_for(args), budget=args.budget)
    fmt = args.format
    path = args.out or default_filename(X, "json" if fmt == "json" else "csv")
    with open(path, "w") as fh:
        if fmt == "json":
            write_json(X, fh)
        else:
            write_csv(X, fh)
    reps = X.orbit_representatives
    print(f"N = {len(X)}")
    print(f"V(d={args.d}, q={X.q}) orbit representatives:")
    for rep in reps:
        print(f"  {_orbit_text(rep)}")
    print(f"wrote {path}")
    return EXIT_OK


def cmd_design_check(args) -> int:
    X = build_pointset(args.d, _field_for(args), budget=args.budget)
    report = design_strength(X, t_max=args.t_max)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = [f"X(d={args.d}, q={X.q}): N = {len(X)}, "
                 f"design strength {report.strength} (t_max {args.t_max})"]
        for c in report.checks:
            status = "pass" if c.passed else f"FAIL witness {c.witness_str}"
            if not c.passed:
                status += (f" (point avg {c.point_average}, "
                           f"sphere avg {c.sphere_average})")
            lines.append(f"  index {c.t}: {status}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if report.strength >= 3 else EXIT_MISMATCH


def cmd_energy(args) -> int:
    s_list = _parse_s_list(args.s)
    X = build_pointset(args.d, _field_for(args), budget=args.budget)
    report = normalized_report(X, s_list, threads=args.threads)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "csv":
        lines = ["s,E,E_over_N2,E_over_N2_logN,E_over_N_pow"]
        for ent in report.entries:
            lines.append(",".join([
                ent.s_text, _fmt(ent.energy), _fmt(ent.over_n2),
                _fmt(ent.over_n2_log), _fmt(ent.over_n_pow),
            ]))
        _emit("\n".join(lines), args.out)
    else:
        lines = [f"X(d={args.d}, q={X.q}): N = {len(X)}, "
                 f"min separation {_fmt(report.delta)}"]
        for ent in report.entries:
            lines.append(f"  s = {ent.s_text}")
            lines.append(f"    E           = {_fmt(ent.energy)}")
            lines.append(f"    E/N^2       = {_fmt(ent.over_n2)}")
            lines.append(f"    E/(N^2 lnN) = {_fmt(ent.over_n2_log)}")
            lines.append(f"    E/N^(1+s/d) = {_fmt(ent.over_n_pow)}")
            if ent.half_integral is not None:
                lines.append(f"    I/2         = {_fmt(ent.half_integral)}")
                lines.append(f"    R/N^2       = {_fmt(ent.residual_n2)}")
                lines.append(f"    R/N^(1+s/d) = {_fmt(ent.residual_pow)}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    report = reproduce_appendix(args.appendix, max_p=args.max_p, tol=args.tol,
                                threads=args.threads, budget=args.budget)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_spacing(args) -> int:
    X = build_pointset(args.d, _field_for(args), budget=args.budget)
    report = separation_bound_report(X, args.s, threads=args.threads)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        _emit("\n".join([
            f"X(d={args.d}, q={X.q}): N = {report.n_points}, s = {report.s:g}",
            f"  E            = {_fmt(report.energy)}",
            f"  C = E/N^(1+s/d) = {_fmt(report.c_value)}",
            f"  bound        = {_fmt(report.bound)}",
            f"  delta        = {_fmt(report.delta)}",
            f"  delta/bound  = {_fmt(report.ratio)}",
        ]), args.out)
    return EXIT_OK


_HANDLERS = {
    "generate": cmd_generate,
    "design-check": cmd_design_check,
    "energy": cmd_energy,
    "reproduce": cmd_reproduce,
    "spacing": cmd_spacing,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, FFSphereError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
