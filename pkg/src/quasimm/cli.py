"""Command-line surface: basis expansion, matrix functions, and verification.

Exit codes: 0 on success (and all checks passing for verify), 1 for I/O
or verification failures, 2 for usage and validation errors.  Rational
results print as p/q in lowest terms, integers without the /1.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import engine, qsym, verification
from .combinatorics import as_partition, parse_parts


class UsageError(Exception):
    """Bad arguments: malformed index, wrong basis, degree mismatch."""


class InputError(Exception):
    """Unreadable or malformed input file."""


_EXPONENT = re.compile(r"(\d+)\^\{?(\d+)\}?")

_BASIS_BUILDERS = {
    "m": qsym.monomial_sym,
    "p": qsym.power_sym,
    "e": qsym.elementary_sym,
    "h": qsym.homogeneous_sym,
    "s": qsym.schur_sym,
    "qs": qsym.quasischur,
}

_PARTITION_BASES = ("m", "p", "e", "h", "s")


def _parse_index(text: str):
    """Parse a comma-separated index, expanding exponent shorthand like 1^4."""
    expanded = _EXPONENT.sub(lambda m: ",".join([m.group(1)] * int(m.group(2))), text)
    try:
        return parse_parts(expanded)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _build_element(basis: str, index_text: str) -> qsym.QSym:
    index = _parse_index(index_text)
    if basis in _PARTITION_BASES:
        try:
            index = as_partition(index)
        except ValueError:
            raise UsageError(
                f"basis {basis!r} is indexed by partitions; got {index_text!r}"
            ) from None
    return _BASIS_BUILDERS[basis](index)


def _load_matrix(path: str) -> engine.SquareMatrix:
    try:
        return engine.load_matrix(path)
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path}: {exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed matrix in {path}: {exc}") from None


def _write_json(path: str, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _emit_scalar(value, args) -> int:
    print(value)
    if args.json:
        _write_json(args.json, {"value": str(value)})
    return 0


def cmd_expand(args) -> int:
    element = _build_element(args.basis, args.index)
    result = qsym.to_coords(element, args.target)
    print(qsym.format_element(result))
    if args.json:
        _write_json(args.json, qsym.to_json_dict(result))
    return 0


def cmd_qimm(args) -> int:
    element = _build_element(args.basis, args.index)
    matrix = _load_matrix(args.matrix)
    degree = element.degree()
    if degree != matrix.n:
        raise UsageError(f"index degree {degree} does not match matrix dimension {matrix.n}")
    variant = "Phi" if args.variant == "phi" else "Psi"
    return _emit_scalar(engine.qimm(matrix, element, variant), args)


def cmd_imm(args) -> int:
    index = _parse_index(args.index)
    try:
        lam = as_partition(index)
    except ValueError:
        raise UsageError(f"immanant shape must be a partition; got {args.index!r}") from None
    matrix = _load_matrix(args.matrix)
    if sum(lam) != matrix.n:
        raise UsageError(f"shape order {sum(lam)} does not match matrix dimension {matrix.n}")
    return _emit_scalar(engine.immanant(matrix, lam), args)


def cmd_d2(args) -> int:
    matrix = _load_matrix(args.matrix)
    if matrix.n < 2:
        raise UsageError("the second immanant needs dimension at least 2")
    return _emit_scalar(engine.second_immanant(matrix), args)


def cmd_det(args) -> int:
    return _emit_scalar(engine.determinant(_load_matrix(args.matrix)), args)


def cmd_perm(args) -> int:
    return _emit_scalar(engine.permanent(_load_matrix(args.matrix)), args)


def cmd_verify(args) -> int:
    hook_max = args.max_n if args.max_n is not None else 6
    toeplitz_max = args.max_n if args.max_n is not None else 8
    if args.scope == "examples":
        report = verification.verify_worked_examples(toeplitz_max)
    elif args.scope == "theorem4":
        report = verification.Report()
        for n in range(3, hook_max + 1):
            report = report.merge(verification.verify_hook_rule(n))
    elif args.scope == "toeplitz":
        report = verification.verify_toeplitz(toeplitz_max)
    else:
        report = verification.verify_all(hook_max, toeplitz_max)
    print(verification.render_table(report))
    if args.json:
        _write_json(args.json, report.to_json_dict())
    return 0 if report.all_pass else 1


def cmd_toeplitz(args) -> int:
    if args.n < 1:
        raise UsageError("dimension must be at least 1")
    payload = verification.toeplitz_tridiagonal(args.n).to_json_dict()
    print(json.dumps(payload))
    if args.json:
        _write_json(args.json, payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the result as JSON to PATH")
    common.add_argument("--max-n", dest="max_n", type=int, help="bound for verification sweeps")
    common.add_argument(
        "--variant",
        choices=("psi", "phi"),
        default="psi",
        help="power-sum coordinate system for quasi-immanants",
    )

    parser = argparse.ArgumentParser(
        prog="quasimm",
        description="Exact quasi-immanants, immanants, and quasisymmetric expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a basis element")
    p.add_argument("basis", choices=tuple(_BASIS_BUILDERS))
    p.add_argument("index", help="comma-separated parts, e.g. 2,1,1 or 2,1^3")
    p.add_argument("--target", choices=qsym.BASES, default="M")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("qimm", parents=[common], help="quasi-immanant of a matrix")
    p.add_argument("matrix", help="path to a JSON or CSV matrix")
    p.add_argument("basis", choices=tuple(_BASIS_BUILDERS))
    p.add_argument("index")
    p.set_defaults(func=cmd_qimm)

    p = sub.add_parser("imm", parents=[common], help="immanant for a partition shape")
    p.add_argument("matrix")
    p.add_argument("index")
    p.set_defaults(func=cmd_imm)

    p = sub.add_parser("d2", parents=[common], help="second immanant")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_d2)

    p = sub.add_parser("det", parents=[common], help="determinant")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("perm", parents=[common], help="permanent")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("verify", parents=[common], help="run self-checks and report")
    p.add_argument("scope", choices=("examples", "theorem4", "toeplitz", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("toeplitz", parents=[common], help="emit the 0/1 tridiagonal matrix")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_toeplitz)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
