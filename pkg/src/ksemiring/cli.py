"""Command-line driver.

Exit codes: 0 success, 1 semantic failure (law violated, check failed,
precondition not met), 2 input error, 3 request beyond a supported bound.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks, classify, congruence as cg, dot, ideals as idl, natsr, specfmt
from .congruence import Partition
from .ideals import ElementSubset
from .kernel import AxiomError, PreconditionError, ScanLimitError, StructuralError, validate
from .report import analyze

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return specfmt.parse_semiring(text)
    except (specfmt.ParseError, StructuralError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _names(R, spec: str) -> list[str]:
    names = [t.strip() for t in spec.split(",") if t.strip()]
    for n in names:
        if n not in R.elements:
            raise InputError(f"unknown element {n!r}")
    return names


def _subset(R, spec: str) -> ElementSubset:
    return ElementSubset.of(R, _names(R, spec))


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, "utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        R = _load(args.path)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AxiomError as exc:
        print(exc.report.render(exc.elements))
        return EXIT_FAIL
    print(validate(R.elements, R.add, R.mul).render(R.elements))
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = analyze(_load(args.path))
    _emit(report.to_json() if args.format == "structured" else report.to_text(), args.output)
    return EXIT_OK


def cmd_kclosure(args) -> int:
    R = _load(args.path)
    A = _subset(R, args.subset)
    C = idl.k_closure(R, A)
    print(f"closure {C}")
    print("k-ideal" if C == A else "not k-closed")
    return EXIT_OK


def cmd_kappa(args) -> int:
    R = _load(args.path)
    t = cg.kappa(R, _subset(R, args.ideal))
    print(" ".join(str(c) for c in t.classes()))
    return EXIT_OK


def _partition(R, args) -> Partition:
    if args.ideal:
        return cg.kappa(R, _subset(R, args.ideal))
    classes = [_names(R, part) for part in args.classes.split("|")]
    try:
        return Partition.from_classes(R, classes)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_quotient(args) -> int:
    R = _load(args.path)
    q = cg.quotient(R, _partition(R, args))
    text = specfmt.render(q.quotient)
    proj = " ".join(f"{R.elements[i]}->{q.quotient.elements[c]}" for i, c in enumerate(q.projection))
    _emit(text + f"# projection: {proj}\n", args.output)
    return EXIT_OK


_CONSTRAINT_FLAGS = ("incline", "additively_idempotent", "commutative_mul", "with_zero", "ring")


def cmd_census(args) -> int:
    constraints = [c for c in _CONSTRAINT_FLAGS if getattr(args, c)]
    rep = classify.census(args.order, constraints, k_simple_only=args.k_simple_only)
    _emit(rep.to_json() if args.format == "structured" else rep.to_text(), args.output)
    return EXIT_OK


def cmd_check_paper(args) -> int:
    try:
        results = checks.run_checks(args.only, args.fixtures, args.max_order)
    except KeyError as exc:
        raise InputError(exc.args[0]) from exc
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_export_dot(args) -> int:
    _emit(dot.export(_load(args.path), args.target), args.output)
    return EXIT_OK


def _gens(spec: str) -> natsr.NatIdeal:
    try:
        return natsr.NatIdeal(tuple(int(t) for t in spec.split(",") if t.strip()))
    except ValueError as exc:
        raise InputError(f"bad generators {spec!r}: {exc}") from exc


def cmd_nat(args) -> int:
    I = _gens(args.gens)
    if args.nat_command == "contains":
        ok = natsr.nat_contains(I, args.x)
        print(f"{args.x} {'in' if ok else 'not in'} {I}")
    elif args.nat_command == "kclosure":
        a = natsr.nat_k_closure_witness(I, args.x)
        if a is None:
            print(f"{args.x} not in the k-closure of {I}")
        else:
            print(f"{args.x} in the k-closure of {I}: {args.x} + {a} = {args.x + a}")
    else:
        x = natsr.nat_is_k_closed_upto(I, args.bound)
        if x is None:
            print(f"{I} is k-closed up to {args.bound}")
        else:
            print(f"{I} is not k-closed: {x} is in the closure but not in the ideal")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ksemiring", description="k-ideals and k-congruences of finite semirings")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the semiring laws of a semiring file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="ideals, congruences and simplicity of a semiring")
    s.add_argument("path")
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.add_argument("--output")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("kclosure", help="subtractive closure of an ideal")
    s.add_argument("path")
    s.add_argument("--subset", required=True, help="comma-separated element names")
    s.set_defaults(func=cmd_kclosure)

    s = sub.add_parser("kappa", help="classes of the Bourne congruence of an ideal")
    s.add_argument("path")
    s.add_argument("--ideal", required=True)
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("quotient", help="quotient semiring by kappa(ideal) or an explicit partition")
    s.add_argument("path")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideal")
    g.add_argument("--classes", help="classes separated by '|', elements by ','")
    s.add_argument("--output")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("census", help="enumerate small semirings up to isomorphism")
    s.add_argument("--order", type=int, required=True)
    for flag in _CONSTRAINT_FLAGS:
        s.add_argument("--" + flag.replace("_", "-"), dest=flag, action="store_true")
    s.add_argument("--k-simple-only", action="store_true")
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.add_argument("--output")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("check-paper", help="recompute every verification item")
    s.add_argument("--only", action="append", metavar="ID", choices=checks.check_ids())
    s.add_argument("--fixtures", help="directory of fixture files to use instead of the shipped ones")
    s.add_argument("--max-order", type=int, default=4)
    s.set_defaults(func=cmd_check_paper)

    s = sub.add_parser("export-dot", help="graph description of an order or lattice")
    s.add_argument("path")
    s.add_argument("--target", choices=dot.TARGETS, default="hasse")
    s.add_argument("--output")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("nat", help="ideals of the nonnegative integers")
    nat = s.add_subparsers(dest="nat_command", required=True)
    n = nat.add_parser("contains")
    n.add_argument("--gens", required=True)
    n.add_argument("--x", type=int, required=True)
    n = nat.add_parser("kclosure")
    n.add_argument("--gens", required=True)
    n.add_argument("--x", type=int, required=True)
    n = nat.add_parser("kclosed")
    n.add_argument("--gens", required=True)
    n.add_argument("--bound", type=int, default=100)
    s.set_defaults(func=cmd_nat)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except natsr.RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ScanLimitError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (AxiomError, PreconditionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
