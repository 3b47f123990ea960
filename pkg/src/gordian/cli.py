"""Command line surface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
suite failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .laurent import LaurentPoly, PolyParseError
from .obstruct import QuadFormVerdict, SearchBounds, build_report, quadform_represents
from .seifert import (
    InvalidMatrixError,
    KnotInvariants,
    SeifertMatrix,
    alexander,
    parse_matrix_text,
)
from .blanchfield import gram_matrix
from .tables import load_entries, parse_table_csv
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_matrix(path: str) -> SeifertMatrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    return parse_matrix_text(text)


def _print_invariants(inv: KnotInvariants, out):
    print(f"delta: {inv.alexander}", file=out)
    print(f"sigma: {inv.signature}", file=out)
    print(f"determinant: {inv.determinant}", file=out)


def cmd_alex(args, out) -> int:
    print(alexander(_load_matrix(args.matrix)), file=out)
    return 0


def cmd_invariants(args, out) -> int:
    _print_invariants(KnotInvariants.from_matrix(_load_matrix(args.matrix)), out)
    return 0


def cmd_blanchfield(args, out) -> int:
    V = _load_matrix(args.matrix)
    gram = gram_matrix(V)
    for i, row in enumerate(gram, start=1):
        for j, entry in enumerate(row, start=1):
            print(f"beta[{i}][{j}]: {entry}", file=out)
    return 0


def cmd_quadform(args, out) -> int:
    verdict: QuadFormVerdict = quadform_represents(args.h, args.d, args.bound)
    print(f"form: {args.h * args.h}x^2 + ({2 * args.h - 1})xy + y^2 = +-({args.d})", file=out)
    print(f"outcome: {verdict.outcome}", file=out)
    if verdict.outcome == "witness":
        print(f"x: {verdict.x}", file=out)
        print(f"y: {verdict.y}", file=out)
        print(f"sign: {verdict.sign:+d}", file=out)
    elif verdict.outcome == "inconclusive":
        print(f"searched_bound: {verdict.searched_bound}", file=out)
    return 0


def _obstruct_input(delta_text, matrix_path, which):
    if (delta_text is None) == (matrix_path is None):
        raise UsageError(f"provide exactly one of --delta{which} or --matrix{which}")
    if delta_text is not None:
        return LaurentPoly.parse(delta_text)
    return _load_matrix(matrix_path)


def _bounds_from_args(args) -> SearchBounds:
    if args.bound is None:
        return SearchBounds()
    # one knob scales both bounded searches; the breadth window stays fixed
    return SearchBounds(cc_max_coeff=args.bound, quadform_bound=args.bound)


def _parse_manifest_token(token: str):
    token = token.strip()
    if os.path.exists(token):
        return _load_matrix(token)
    return LaurentPoly.parse(token)


def cmd_obstruct(args, out) -> int:
    bounds = _bounds_from_args(args)
    if args.manifest is not None:
        if args.delta1 or args.delta2 or args.matrix1 or args.matrix2:
            raise UsageError("--manifest cannot be combined with inline inputs")
        with open(args.manifest, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
        pair_no = 0
        for raw in lines:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            left, sep, right = line.partition("|")
            if not sep:
                raise ValueError(f"manifest line needs two inputs separated by |: {line!r}")
            pair_no += 1
            report = build_report(
                _parse_manifest_token(left),
                _parse_manifest_token(right),
                bounds=bounds,
            )
            if pair_no > 1:
                print(file=out)
            print(f"pair: {pair_no}", file=out)
            print(report.format(), file=out)
        return 0
    first = _obstruct_input(args.delta1, args.matrix1, 1)
    second = _obstruct_input(args.delta2, args.matrix2, 2)
    report = build_report(first, second, ua1=args.ua1, ua2=args.ua2, bounds=bounds)
    print(report.format(), file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}")
    result = run_suite(args.suite, args.seed, args.iters)
    print(f"suite: {args.suite}", file=out)
    print(f"seed: {result.seed}", file=out)
    print(f"iterations: {result.iterations}", file=out)
    print(f"passes: {result.iterations - result.failures}", file=out)
    print(f"failures: {result.failures}", file=out)
    if not result.passed:
        print(f"counterexample: {result.counterexample}", file=out)
        return 3
    return 0


def _entry_line(entry) -> str:
    inv = entry.invariants
    line = (
        f"{entry.label}: delta={inv.alexander} sigma={inv.signature} "
        f"determinant={inv.determinant}"
    )
    if entry.note:
        line += f" ({entry.note})"
    return line


def cmd_table(args, out) -> int:
    entries = load_entries()
    if args.action == "list":
        for label in entries:
            print(_entry_line(entries[label]), file=out)
        return 0
    if args.action == "show":
        if args.label is None:
            raise UsageError("table show needs a label")
        if args.label not in entries:
            print(f"error: unknown label {args.label!r}", file=sys.stderr)
            return 1
        entry = entries[args.label]
        print(f"label: {entry.label}", file=out)
        if entry.matrix is not None:
            print("matrix:", file=out)
            for row in entry.matrix.rows:
                print("  " + " ".join(str(x) for x in row), file=out)
        else:
            print("matrix: no Seifert matrix bundled", file=out)
        _print_invariants(entry.invariants, out)
        return 0
    # import
    if args.label is None:
        raise UsageError("table import needs a csv file")
    with open(args.label, "r", encoding="utf-8") as handle:
        imported = parse_table_csv(handle.read())
    for entry in imported:
        print(_entry_line(entry), file=out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="gordian", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("alex", help="print the Alexander polynomial of a matrix file")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("invariants", help="print Alexander polynomial, signature, determinant")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("blanchfield", help="print the pairing matrix of the standard generators")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_blanchfield)

    p = sub.add_parser("quadform", help="decide h^2 x^2 + (2h-1)xy + y^2 = +-d")
    p.add_argument("h", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--bound", type=int, default=10_000)
    p.set_defaults(func=cmd_quadform)

    p = sub.add_parser("obstruct", help="run the obstruction battery on a pair of inputs")
    p.add_argument("--delta1")
    p.add_argument("--matrix1")
    p.add_argument("--delta2")
    p.add_argument("--matrix2")
    p.add_argument("--ua1", type=int)
    p.add_argument("--ua2", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--manifest", help="batch mode: one pair per line, inputs separated by |")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("verify", help="run a seeded randomized verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="bundled example knots")
    p.add_argument("action", choices=("list", "show", "import"))
    p.add_argument("label", nargs="?", metavar="label-or-file")
    p.set_defaults(func=cmd_table)

    return parser


_VALUE_FLAGS = frozenset(
    {
        "--delta1",
        "--delta2",
        "--matrix1",
        "--matrix2",
        "--matrix",
        "--ua1",
        "--ua2",
        "--bound",
        "--manifest",
        "--suite",
        "--seed",
        "--iters",
    }
)
_KNOWN_FLAGS = _VALUE_FLAGS | {"-h", "--help"}


def _merge_option_values(argv):
    """Join ``--flag value`` into ``--flag=value`` when the value starts
    with ``-``; polynomials can begin with a minus sign."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in _VALUE_FLAGS
            and nxt is not None
            and nxt.startswith("-")
            and nxt not in _KNOWN_FLAGS
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_option_values(list(argv))
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (PolyParseError, InvalidMatrixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
