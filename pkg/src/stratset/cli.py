"""Command line entry point: ``stratset build|marks|check|verify|diagram``.

Exit codes: 0 success or passing verdict, 1 failing verdict, 2 usage or
input error.  Errors are printed to stderr as a JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import anodyne, diagram, dsl, filtration, harness
from .marking import MarkingError
from .sset import SSetError


class UsageError(Exception):
    def __init__(self, kind: str, message: str, position: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.position = position

    def to_json(self) -> dict:
        out = {"error": self.kind, "message": self.message}
        if self.position is not None:
            out["position"] = self.position
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", f"{self.prog}: {message}")


def _emit(obj, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2) + "\n")


def _build(text: str):
    try:
        return dsl.build(text)
    except dsl.DSLError as exc:
        raise UsageError(exc.kind, exc.message, exc.pos) from None
    except (MarkingError, SSetError) as exc:
        raise UsageError("range", str(exc)) from None


def summary(X) -> dict:
    U = X.underlying
    return {
        "name": X.name,
        "cells": len(U),
        "counts": list(U.counts()),
        "marked_counts": list(X.marked_counts()),
    }


def cmd_build(args) -> int:
    X = _build(args.expr)
    if args.json:
        data = X.to_json()
        if args.json == "-":
            _emit(data)
            return 0
        with open(args.json, "w") as fh:
            fh.write(json.dumps(data, indent=2) + "\n")
    _emit(summary(X))
    return 0


def cmd_marks(args) -> int:
    X = _build(args.expr)
    if args.dim is not None and args.dim < 1:
        raise UsageError("range", f"--dim must be at least 1, got {args.dim}")
    dims = [args.dim] if args.dim is not None else range(1, X.underlying.top_dim + 1)
    for r in dims:
        for label in X.marked_labels(r):
            sys.stdout.write(f"{r} {label}\n")
    return 0


def cmd_check(args) -> int:
    X = _build(args.expr)
    if args.complicial is not None:
        v = anodyne.is_complicial(X, args.complicial)
    elif args.saturated is not None:
        v = anodyne.is_saturated(X, *args.saturated)
    else:
        N, D = args.n_complicial
        v = anodyne.is_n_complicial(X, N, D)
    _emit(v.to_json())
    return 0 if v.passed else 1


def _ints(values, names) -> list:
    if len(values) != len(names):
        raise UsageError("usage", f"expected {len(names)} integers ({' '.join(names)}), got {len(values)}")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError("usage", f"expected integers for {' '.join(names)}, got {' '.join(values)}") from None


def cmd_verify(args) -> int:
    try:
        if args.what == "filtration":
            l, m = _ints(args.params, ["l", "m"])
            cert = filtration.run_filtration(l, m)
            if args.dump:
                with open(args.dump, "w") as fh:
                    fh.write(json.dumps(cert.to_json(full=True), indent=2) + "\n")
            _emit(cert.to_json(full=False))
            return 0 if cert.passed else 1
        if args.what == "triviality":
            p, m, N = _ints(args.params, ["p", "m", "N"])
            cert = filtration.triviality_filtration(p, m, N)
            _emit(cert.to_json())
            return 0 if cert.passed else 1
        if args.what == "remark":
            l, m = _ints(args.params, ["l", "m"])
            rep = filtration.index_criterion(l, m)
            _emit(rep)
            return 0 if rep["passed"] else 1
    except filtration.FiltrationError as exc:
        raise UsageError("range", str(exc)) from None
    names = args.params or list(harness.DEFAULT_SUITES)
    unknown = [n for n in names if n not in harness.SUITES]
    if unknown:
        raise UsageError("usage", f"unknown suite {unknown[0]!r}; choose from {', '.join(harness.SUITES)}")
    reports = harness.run_suites(names)
    _emit({"passed": all(r.passed for r in reports), "suites": [r.to_json(args.timing) for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def cmd_diagram(args) -> int:
    X = _build(args.expr)
    try:
        c = diagram.resolve_simplex(X.underlying, args.simplex)
        sys.stdout.write(diagram.render(X.underlying, c, args.format))
    except diagram.DiagramError as exc:
        raise UsageError("input", str(exc)) from None
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stratset", description="Marked simplicial sets, Gray tensor markings and their checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build an object and print a summary")
    b.add_argument("expr")
    b.add_argument("--json", metavar="FILE", help="write the full object as JSON ('-' for stdout)")
    b.set_defaults(func=cmd_build)

    mk = sub.add_parser("marks", help="list marked nondegenerate cells")
    mk.add_argument("expr")
    mk.add_argument("--dim", type=int, help="only this dimension")
    mk.set_defaults(func=cmd_marks)

    c = sub.add_parser("check", help="bounded lifting checks")
    c.add_argument("expr")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--complicial", type=int, metavar="D")
    g.add_argument("--saturated", type=int, nargs=2, metavar=("D", "L"))
    g.add_argument("--n-complicial", type=int, nargs=2, metavar=("N", "D"))
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="run filtration, triviality, degeneracy-index (remark) or suite verification")
    v.add_argument("what", choices=["filtration", "triviality", "suites", "remark"])
    v.add_argument("params", nargs="*", help="l m | p m N | suite names | l m")
    v.add_argument("--dump", metavar="FILE", help="write the full filtration certificate with attaching maps")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds in suite reports")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("diagram", help="draw a product simplex as a lattice path")
    d.add_argument("expr")
    d.add_argument("--simplex", required=True, help="cell id, cell label, or x0,x1,../y0,y1,..")
    d.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    d.set_defaults(func=cmd_diagram)
    return p


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _emit(exc.to_json(), sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
