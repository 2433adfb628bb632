"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails or the trace form is
not symmetrizing, 2 on usage, configuration or expression errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import combinatorics as comb
from .algebra import algebra_for
from .bases import BASES, parameter_change_map, to_coordinates
from .errors import AlgebraError, ExpressionSyntaxError, NotSymmetrizingError
from .expr import format_element, parse_element
from .fixed import fixed_basis_labels, generation_check
from .scalars import ParameterSet, format_scalar
from .trace import gram_check, tau
from .verify import SUITES, VerificationReport, check_definition_relations, multi_parameter_fuzz, run_suites


class UsageError(Exception):
    pass


def load_parameters(path: str) -> ParameterSet:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from None
    try:
        return ParameterSet.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"config {path} is missing or mistypes a field: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _require_expr(args) -> str:
    if args.expr is None:
        raise UsageError(f"{args.command} needs --expr")
    return args.expr


def cmd_mult(args, P: ParameterSet) -> int:
    x = parse_element(_require_expr(args), P)
    data = {
        "context": P.to_dict(),
        "expression": args.expr,
        "basis": args.basis,
        "result": format_element(x, args.basis),
        "coordinates": to_coordinates(x, args.basis).to_dict()["entries"],
    }
    _emit(_dump(data), args.out)
    return 0


def cmd_convert(args, P: ParameterSet) -> int:
    x = parse_element(_require_expr(args), P)
    _emit(_dump(to_coordinates(x, args.basis).to_dict()), args.out)
    return 0


def cmd_trace(args, P: ParameterSet) -> int:
    x = parse_element(_require_expr(args), P)
    _emit(format_scalar(tau(x)), args.out)
    return 0


def _report_output(report: VerificationReport, fmt: str) -> str:
    return report.table() if fmt == "table" else _dump(report.to_dict())


def cmd_verify(args, P: ParameterSet) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.trials is None:
        report = run_suites(P, suites)
    else:
        report = multi_parameter_fuzz(P.n, P.r, args.trials, args.seed, suites)
    _emit(_report_output(report, args.format), args.out)
    return 0 if report.passed else 1


def cmd_gram(args, P: ParameterSet) -> int:
    try:
        report = gram_check(P)
    except NotSymmetrizingError as exc:
        print(f"NotSymmetrizing: {exc}", file=sys.stderr)
        return 1
    print(report.status_line())
    if args.out:
        Path(args.out).write_text(_dump(report.to_dict()) + "\n")
    return 0 if report.is_identity else 1


def cmd_fixed_basis(args, P: ParameterSet) -> int:
    A = algebra_for(P)
    labels = fixed_basis_labels(A)
    data = {
        "context": P.to_dict(),
        "size": len(labels),
        "basis": [{"k": list(k), "w": list(w)} for k, w in labels],
    }
    ok = True
    if args.check:
        ok = generation_check(A)
        data["generation_check"] = ok
    _emit(_dump(data), args.out)
    return 0 if ok else 1


def cmd_isomap(args, P: ParameterSet) -> int:
    if args.target is None:
        raise UsageError("isomap needs --target")
    target = load_parameters(args.target)
    change = parameter_change_map(P, target)
    A = algebra_for(P)
    report = VerificationReport("isomap", [P, target])
    check_definition_relations(A, change.t_images, change.T_images, target, report)
    data = change.to_dict()
    data["t_images"] = [format_element(x) for x in change.t_images]
    data["T_images"] = [format_element(x) for x in change.T_images]
    data["relations"] = report.to_dict()
    _emit(_dump(data), args.out)
    return 0 if report.passed else 1


def cmd_orbits(args, P: ParameterSet) -> int:
    reps = comb.enumerate_orbit_representatives(P.n, P.r)
    data = {
        "n": P.n,
        "r": P.r,
        "count": len(reps),
        "orbits": [{"representative": list(rep), "size": len(orb)} for rep, orb in reps],
    }
    _emit(_dump(data), args.out)
    return 0


COMMANDS = {
    "mult": cmd_mult,
    "trace": cmd_trace,
    "convert": cmd_convert,
    "verify": cmd_verify,
    "gram": cmd_gram,
    "fixed-basis": cmd_fixed_basis,
    "isomap": cmd_isomap,
    "orbits": cmd_orbits,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="makalg", description="Exact computations in the modified Ariki-Koike algebra.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="ParameterSet JSON file")
        p.add_argument("--out", help="write output here instead of stdout")
        if name in ("mult", "trace", "convert"):
            p.add_argument("--expr", help="element expression")
        if name in ("mult", "convert"):
            p.add_argument("--basis", choices=BASES, default="bg")
        if name == "verify":
            p.add_argument("--suite", choices=SUITES + ("all",), default="all")
            p.add_argument("--trials", type=int, help="fuzz over this many random parameter sets")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--format", choices=("json", "table"), default="json")
        if name == "fixed-basis":
            p.add_argument("--check", action="store_true", help="also run the generation check")
        if name == "isomap":
            p.add_argument("--target", help="ParameterSet JSON file of the target parameters")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        P = load_parameters(args.config)
        return COMMANDS[args.command](args, P)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExpressionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except NotSymmetrizingError as exc:
        print(f"NotSymmetrizing: {exc}", file=sys.stderr)
        return 1
    except AlgebraError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
