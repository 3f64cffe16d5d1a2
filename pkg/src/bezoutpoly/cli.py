"""Command-line front end: tables, single computations and the identity registry.

    bezoutpoly table {1,2,3,4} [--nmax N] [--format text|json|csv]
    bezoutpoly verify ID [ID ...] | all [--nmax N] [--kmax K] [--jobs J]
    bezoutpoly compute WHAT [--n N] [--k K] [--j J] [--family F]

Exit codes: 0 success, 1 a counterexample was found, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import comb

from . import families as fam
from .numthy import classify_disc_square, n_j
from .polycore import Polynomial, discriminant, format_rational, render, sylvester_resultant
from .verify import IDENTITY_IDS, UnknownIdentity, verify_all

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


# ---- tables -------------------------------------------------------------------

def _factored(*factors: Polynomial) -> str:
    parts = []
    for f in factors:
        if f == 1:
            continue
        s = render(f)
        multi = sum(1 for c in f.coeffs if c) > 1
        parts.append(f"({s})" if multi else s)
    return "*".join(parts) or "1"


def _hankel_row(n: int) -> str:
    """c_n * x^n * (1-2x) * cofactor, the cofactor being V_n with its content removed."""
    v = fam.v_poly(n)
    content = v.content()
    cofactor = v.scale(1 / content)
    c = Fraction(comb(2 * n, n)) * content / (2 * (n + 1))
    head = "" if c == 1 else format_rational(c) + "*"
    xpow = "x" if n == 1 else f"x^{n}"
    tail = "" if cofactor == 1 else f"*({render(cofactor)})"
    return f"{head}{xpow}*(1-2*x){tail}"


def table_rows(which: int, nmax: int | None = None) -> tuple[list[str], list[list]]:
    """Header and rows ``[n, cell, ...]`` of one of the four tables."""
    if which == 1:
        nmax = 4 if nmax is None else nmax
        if nmax < 0:
            raise UsageError("table 1 needs nmax >= 0")
        header = ["n", "P_n(x)", "Q_n(x)"]
        rows = [[n, render(fam.p_poly(n)), render(fam.q_poly(n))] for n in range(nmax + 1)]
    elif which == 2:
        nmax = 4 if nmax is None else nmax
        if nmax < 0:
            raise UsageError("table 2 needs nmax >= 0")
        header = ["n", "Y_n(x)", "Z_n(x)"]
        rows = []
        for n in range(nmax + 1):
            if n >= 3 and n % 3 == 0:
                (ya, yb), (za, zb) = fam.yz_factors(n // 3)
                rows.append([n, _factored(ya, yb), _factored(za, zb)])
            else:
                y, z = fam.yz_pair(n)
                rows.append([n, render(y), render(z)])
    elif which == 3:
        nmax = 7 if nmax is None else nmax
        if nmax < 1:
            raise UsageError("table 3 needs nmax >= 1")
        header = ["n", "Q_n(-x)^2-Q_{n-1}(-x)Q_{n+1}(-x)"]
        rows = [[n, _hankel_row(n)] for n in range(1, nmax + 1)]
    elif which == 4:
        nmax = 6 if nmax is None else nmax
        if nmax < 1:
            raise UsageError("table 4 needs nmax >= 1")
        header = ["n", "W_n(x)"]
        rows = [[n, render(fam.w_poly(n), ascending=True)] for n in range(1, nmax + 1)]
    else:
        raise UsageError(f"no table {which}")
    return header, rows


def format_table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(" | ".join(str(c) for c in r) for r in [header] + rows)


def cmd_table(which: int, nmax: int | None = None, fmt: str = "text") -> str:
    header, rows = table_rows(which, nmax)
    return format_table(header, rows, fmt)


# ---- verify -------------------------------------------------------------------

REPORT_FIELDS = ["id", "nmax", "kmax", "passed", "checks", "elapsed_ms", "counterexample"]


def cmd_verify(ids: list[str], nmax=None, kmax=None, fmt="text", jobs=1) -> tuple[str, int]:
    selected = None if ids == ["all"] else ids
    if selected is not None and "all" in selected:
        raise UsageError("'all' cannot be combined with other ids")
    try:
        reports = verify_all(nmax, kmax, jobs=jobs, ids=selected)
    except UnknownIdentity as exc:
        raise UsageError(f"unknown identity {exc.args[0]!r}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = 0 if all(r.passed for r in reports) else 1
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        return json.dumps(dicts, indent=2), code
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_FIELDS)
        for d in dicts:
            ce = json.dumps(d["counterexample"]) if d["counterexample"] else ""
            w.writerow([d["id"], d["range"]["nmax"], d["range"]["kmax"], d["passed"],
                        d["checks"], d["elapsed_ms"], ce])
        return buf.getvalue().rstrip("\n"), code
    lines = []
    for d in dicts:
        k = "" if d["range"]["kmax"] is None else f" kmax={d['range']['kmax']}"
        status = "PASS" if d["passed"] else "FAIL"
        lines.append(f"{status} {d['id']} nmax={d['range']['nmax']}{k} checks={d['checks']}")
        ce = d["counterexample"]
        if ce:
            lines.append(f"  at {json.dumps(ce['params'])}: lhs={ce['lhs']} rhs={ce['rhs']}")
        lines.extend(f"  note: {note}" for note in d["notes"])
    passed = sum(d["passed"] for d in dicts)
    lines.append(f"{passed}/{len(dicts)} passed")
    return "\n".join(lines), code


# ---- compute ------------------------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"compute {args.what} needs --{name}")


def _value(args):
    what = args.what
    if what in ("q", "p", "v", "w", "y", "z"):
        _need(args, "n")
        n = args.n
        if what == "q":
            return fam.q_poly(n)
        if what == "p":
            return fam.p_poly(n)
        if what == "v":
            return fam.v_poly(n)
        if what == "w":
            return fam.w_poly(n)
        return fam.yz_pair(n)[0 if what == "y" else 1]
    if what == "qderiv":
        _need(args, "n", "k")
        return fam.q_deriv_poly(args.n, args.k)
    if what == "disc":
        _need(args, "n")
        k = args.k or 0
        if args.family not in (None, "q", "p"):
            raise UsageError("disc --family must be 'q' or 'p'")
        fam_fn = fam.p_deriv_poly if args.family == "p" else fam.q_deriv_poly
        return discriminant(fam_fn(args.n, k))
    if what == "resultant":
        _need(args, "n")
        n, k, kind = args.n, args.k or 0, args.family or "consecutive"
        if kind == "consecutive":
            return sylvester_resultant(fam.q_deriv_poly(n + k, k), fam.q_deriv_poly(n - 1 + k, k))
        if kind == "pq":
            return sylvester_resultant(fam.p_poly(n), fam.q_poly(n))
        raise UsageError("resultant --family must be 'consecutive' or 'pq'")
    if what == "classify":
        _need(args, "n", "k")
        c = classify_disc_square(args.k, args.n)
        return {
            "verdict": c.verdict.value,
            "reason": c.reason,
            "value_class": c.value_class,
            "witness": None if c.witness is None else str(c.witness),
            "root": None if c.root is None else str(c.root),
        }
    if what == "nj":
        _need(args, "j")
        return n_j(args.j, args.k or 0)
    raise UsageError(f"unknown computation {what!r}")


def cmd_compute(args) -> str:
    try:
        value = _value(args)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(str(exc)) from None
    if isinstance(value, Polynomial):
        plain = value.to_strings()
        if args.format == "text":
            return json.dumps(plain, separators=(",", ":"))
        if args.format == "csv":
            return "i,coefficient\n" + "\n".join(f"{i},{c}" for i, c in enumerate(plain))
        return json.dumps({"what": args.what, "value": plain, "render": render(value)})
    if isinstance(value, dict):
        if args.format == "csv":
            return ",".join(value) + "\n" + ",".join("" if v is None else str(v) for v in value.values())
        return json.dumps(value)
    text = format_rational(Fraction(value))
    if args.format == "json":
        return json.dumps({"what": args.what, "value": text})
    if args.format == "csv":
        return f"value\n{text}"
    return text


# ---- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bezoutpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="reproduce one of the four tables")
    t.add_argument("which", type=int, choices=(1, 2, 3, 4))
    t.add_argument("--nmax", type=int)
    t.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="run registry checkers")
    v.add_argument("ids", nargs="+", metavar="ID", help=f"'all' or any of: {', '.join(IDENTITY_IDS)}")
    v.add_argument("--nmax", type=int)
    v.add_argument("--kmax", type=int)
    v.add_argument("--format", choices=FORMATS, default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed-free", action="store_true",
                   help="accepted for CI scripts; registry checks are never randomized")

    c = sub.add_parser("compute", help="one exact value")
    c.add_argument("what", choices=("q", "p", "qderiv", "v", "w", "y", "z", "disc",
                                    "resultant", "classify", "nj"))
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--j", type=int)
    c.add_argument("--family", help="disc: q|p, resultant: consecutive|pq")
    c.add_argument("--format", choices=FORMATS, default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "table":
            out, code = cmd_table(args.which, args.nmax, args.format), 0
        elif args.command == "verify":
            if args.jobs < 1:
                raise UsageError("--jobs must be positive")
            out, code = cmd_verify(args.ids, args.nmax, args.kmax, args.format, args.jobs)
        else:
            out, code = cmd_compute(args), 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
