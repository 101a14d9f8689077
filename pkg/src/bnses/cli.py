"""Command-line front end.

Exit status: 0 success, 1 validation or parse failure, 2 domain error
(e.g. a malformed value literal), 3 I/O failure.  Every failure prints one
diagnostic line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import dataset as ds
from . import softset
from .errors import DomainError, ValidationError
from .number import DEFAULT_TOLERANCE, BipolarNeutrosophicNumber, compare, score
from .ranking import rank

EXIT_OK, EXIT_INVALID, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3

_UNARY = {
    "complement": softset.complement,
    "agree": softset.restrict_agree,
    "disagree": softset.restrict_disagree,
}
_BINARY = {
    "union": softset.union,
    "intersect": softset.intersection,
}
_ARITY = {"validate": 1, "complement": 1, "agree": 1, "disagree": 1,
          "score": 1, "rank": 1, "union": 2, "intersect": 2}


class _IOFailure(Exception):
    pass


def _read(path, stdin):
    try:
        if path == "-":
            return stdin.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(path, stdin):
    try:
        return ds.parse(_read(path, stdin))
    except ValidationError as exc:
        exc.args = (f"{path}: {exc}",)
        raise


def _score_table(dataset) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["parameter", "negated", "expert", "opinion", "element", "score"])
    for k, u, v in dataset.set.records():
        writer.writerow([k.parameter.name, str(k.parameter.negated).lower(),
                         k.expert, int(k.opinion), u, f"{score(v):.6f}"])
    return buf.getvalue().encode("utf-8")


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError("tolerance must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnses",
        description="Bipolar neutrosophic soft expert set toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default="-",
                        help="output file (default: standard output)")
    common.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOLERANCE,
                        help="equality tolerance for comparisons (default: %(default)g)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    helps = {
        "validate": "check a dataset file",
        "complement": "complement of a dataset's set",
        "union": "union of two datasets",
        "intersect": "intersection of two datasets",
        "agree": "keep only agree records",
        "disagree": "keep only disagree records",
        "score": "score table for every stored value",
        "rank": "rank the universe by net agreement score",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("paths", nargs="*", metavar="PATH",
                       help="dataset file(s); '-' reads standard input")
        p.add_argument("-i", "--input", action="append", default=[], metavar="PATH",
                       help="dataset file, may be repeated")

    p = sub.add_parser("compare", parents=[common],
                       help="compare two comma-separated six-component values")
    p.add_argument("left")
    p.add_argument("right")
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit status."""
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_DOMAIN

    try:
        output = _execute(args, stdin)
        if output:
            if args.output == "-":
                stdout.write(output)
                stdout.flush()
            else:
                with open(args.output, "wb") as fh:
                    fh.write(output)
    except ValidationError as exc:
        print(f"bnses: {exc.category} error: {exc}", file=stderr)
        return EXIT_INVALID
    except DomainError as exc:
        print(f"bnses: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except _IOFailure as exc:
        print(f"bnses: i/o error: {exc}", file=stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"bnses: i/o error: {exc}", file=stderr)
        return EXIT_IO
    return EXIT_OK


def _execute(args, stdin) -> bytes:
    if args.command == "compare":
        left = BipolarNeutrosophicNumber.parse(args.left)
        right = BipolarNeutrosophicNumber.parse(args.right)
        return f"{compare(left, right, args.tolerance).name}\n".encode()

    paths = list(args.paths) + list(args.input)
    expected = _ARITY[args.command]
    if len(paths) != expected:
        raise DomainError(
            f"{args.command} takes exactly {expected} input(s), got {len(paths)}")
    datasets = [_load(p, stdin) for p in paths]

    if args.command == "validate":
        return b""
    if args.command == "score":
        return _score_table(datasets[0])
    if args.command == "rank":
        return ds.export_ranking(rank(datasets[0]))
    if args.command in _UNARY:
        d = datasets[0]
        return ds.serialize(d.replace_set(_UNARY[args.command](d.set)))
    h, g = datasets
    return ds.serialize(h.merge(g, _BINARY[args.command](h.set, g.set)))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
