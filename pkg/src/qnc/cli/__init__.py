"""Command-line front end: ``reduce``, ``verify``, ``export`` and ``catalog``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence, TextIO

from ..coeff import qpow
from ..ncalg import NCPoly
from ..tensor import Space, Tensor, as_matrix, tensor_parts
from .parser import EvalError, ParseError, evaluate, parse_expr, reduce_text

SUITE_CHOICES_NOTE = "a suite name, 'all' (the six main suites) or 'exploratory'/'controls'"


def poly_to_dict(p: NCPoly) -> dict:
    """JSON form of a normal-form polynomial, with ``l`` on the right as in the text form."""
    alg = p.alg
    labels = alg.basis.labels
    terms = []
    for (k, a, b), c in p.sorted_terms():
        if k:
            c = c * qpow(k * alg.weight((k, a, b)))
        terms.append({"coeff": str(c), "l": k,
                      "x": {labels[i]: e for i, e in enumerate(a) if e},
                      "d": {labels[i]: e for i, e in enumerate(b) if e}})
    return {"space": alg.space.value, "normal_form": str(p), "terms": terms}


def _tensor_csv(t: Tensor, convention: str) -> str:
    if t.rank == 4:
        return as_matrix(t, convention).to_csv()
    if t.rank != 2:
        raise ValueError(f"cannot export a rank-{t.rank} tensor as CSV")
    labels = t.basis.labels
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(labels))
    for a, la in enumerate(labels):
        w.writerow([la] + [str(t[a, b]) for b in range(len(labels))])
    return buf.getvalue()


def exportable_tensors() -> dict[str, Tensor]:
    out: dict[str, Tensor] = {}
    for sp in Space:
        for name, t in tensor_parts(sp).items():
            if t.rank == 2 or t.slots == ("u", "u", "l", "l"):
                out.setdefault(name, t)
    return out


# ---------------------------------------------------------------------------

def _cmd_reduce(args, out: TextIO, err: TextIO) -> int:
    try:
        p = reduce_text(args.expr, args.space)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return 1
    except (EvalError, ArithmeticError) as e:
        err.write(f"error: {e}\n")
        return 1
    if args.format == "json":
        d = poly_to_dict(p)
        d["input"] = args.expr
        out.write(json.dumps(d, indent=2) + "\n")
    else:
        out.write(str(p) + "\n")
    return 0


def _suites_for(name: str) -> list[str]:
    from ..verify import EXTRA_SUITES, SUITES

    if name == "all":
        return list(SUITES)
    if name in SUITES or name in EXTRA_SUITES:
        return [name]
    raise KeyError(name)


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    from ..verify import run_suite

    try:
        names = _suites_for(args.suite)
    except KeyError:
        err.write(f"unknown suite {args.suite!r}; expected {SUITE_CHOICES_NOTE}\n")
        return 2
    reports = []
    for name in names:
        rep = run_suite(name, fail_fast=args.fail_fast)
        reports.append(rep)
        if args.format == "text":
            out.write(rep.to_text() + "\n")
            out.flush()
        if args.fail_fast and not rep.ok:
            break
    fails = sum(r.failed for r in reports)
    if args.format == "json":
        if len(reports) == 1:
            doc = reports[0].to_dict()
        else:
            doc = {"suites": [r.to_dict() for r in reports],
                   "pass": sum(r.passed for r in reports), "fail": fails}
        out.write(json.dumps(doc, indent=2) + "\n")
    return 0 if fails == 0 else 1


def _cmd_export(args, out: TextIO, err: TextIO) -> int:
    tensors = exportable_tensors()
    if args.object not in tensors:
        err.write(f"unknown tensor {args.object!r}; choose from {', '.join(sorted(tensors))}\n")
        return 2
    try:
        text = _tensor_csv(tensors[args.object], args.convention)
    except ValueError as e:
        err.write(f"error: {e}\n")
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_catalog(args, out: TextIO, err: TextIO) -> int:
    from ..verify import list_identities

    items = list_identities(space=args.space, suite=args.suite, pattern=args.pattern)
    if args.format == "json":
        doc = [{"id": i.id, "suite": i.suite, "paper_ref": i.paper_ref, "anchor": i.anchor,
                "clearer": list(i.clearer), "summary": i.summary} for i in items]
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    for i in items:
        line = f"{i.id:16s} {i.suite:16s} {i.paper_ref}"
        if i.summary:
            line += f"  {i.summary}"
        out.write(line + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qnc", description="Exact q-deformed quantum-space algebra.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce an expression to normal form")
    p.add_argument("--space", required=True, choices=["euclid", "minkowski"])
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("expr")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", required=True, help=SUITE_CHOICES_NOTE)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write a constant tensor as a CSV matrix")
    p.add_argument("--object", required=True)
    p.add_argument("--format", default="csv", choices=["csv"])
    p.add_argument("--convention", default="lex", choices=["lex", "paper"])
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("catalog", help="list catalogued identities")
    p.add_argument("--space", choices=["euclid", "minkowski"])
    p.add_argument("--suite")
    p.add_argument("--pattern")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_catalog)
    return ap


def run_cli(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
            err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:  # argparse: usage errors exit 2, --help exits 0
        return int(e.code or 0)
    return args.func(args, out, err)


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run_cli(argv))


__all__ = ["build_parser", "evaluate", "exportable_tensors", "main", "parse_expr", "poly_to_dict",
           "reduce_text", "run_cli"]
