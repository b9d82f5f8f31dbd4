"""Command-line interface: number, enumerate, map, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
cap exceeded, 4 parse error (message carries the byte offset), 5 input file
family mismatch.  Stdout is deterministic for identical invocations; counts
and timing go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import trees, verify
from .bijection import phi, phi_inverse
from .exact import forest_catalan, k_catalan
from .trees import BINARY, COLORED_TERNARY, ParseError, SizeCapError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_PARSE = 4
EXIT_FAMILY = 5

FORMATS = ("sexp", "dot", "json")


class FamilyMismatchError(Exception):
    """Input parsed as the opposite tree family from the one requested."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fussforest",
        description="Exact tree counting, enumeration, bijection mapping, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_number = sub.add_parser("number", help="print a k-ary tree or forest count")
    p_number.add_argument("--k", type=int, required=True, help="arity, k >= 2")
    p_number.add_argument("--n", type=int, required=True, help="internal vertex count, n >= 0")
    p_number.add_argument("--m", type=int, default=None,
                          help="component count; when given, counts m-component forests")
    p_number.set_defaults(func=cmd_number)

    p_enum = sub.add_parser("enumerate", help="stream every tree of a family, one per line")
    p_enum.add_argument("--family", choices=(BINARY, COLORED_TERNARY), required=True)
    p_enum.add_argument("--n", type=int, required=True, help="weight (internal vertices / weight)")
    p_enum.add_argument("--p", type=int, default=None,
                        help="restrict colored ternary trees to p internal vertices")
    p_enum.add_argument("--format", choices=FORMATS, default="sexp")
    p_enum.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_enum.add_argument("--max-n", type=int, default=None,
                        help="acknowledge and override the enumeration cap")
    p_enum.set_defaults(func=cmd_enumerate)

    p_map = sub.add_parser("map", help="apply the bijection to a file of trees (one per line)")
    p_map.add_argument("--direction", choices=("t2b", "b2t"), required=True,
                       help="t2b: colored ternary to binary; b2t: the inverse")
    p_map.add_argument("--in", dest="in_path", default="-", help="input path, '-' for stdin")
    p_map.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_map.add_argument("--format", choices=FORMATS, default="sexp")
    p_map.set_defaults(func=cmd_map)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("--suite", choices=verify.SUITES, required=True)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--m-max", type=int, default=None)
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def cmd_number(args) -> int:
    if args.m is None:
        print(k_catalan(args.n, args.k))
    else:
        print(forest_catalan(args.n, args.k, args.m))
    return EXIT_OK


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _render(stream, index: int, tree, fmt: str) -> str | None:
    if fmt == "sexp":
        stream.write(trees.serialize(tree) + "\n")
    elif fmt == "dot":
        stream.write(trees.to_dot(tree, index))
    else:
        return trees.serialize(tree)
    return None


def cmd_enumerate(args) -> int:
    if args.p is not None and args.family != COLORED_TERNARY:
        raise ValueError("--p only applies to the colored-ternary family")
    if args.family == COLORED_TERNARY:
        source = trees.enumerate_colored_ternary(args.n, args.p, max_n=args.max_n)
    else:
        source = trees.enumerate_binary(args.n, max_n=args.max_n)
    stream, close = _open_out(args.out)
    try:
        count = 0
        collected = []
        for tree in source:
            item = _render(stream, count, tree, args.format)
            if item is not None:
                collected.append(item)
            count += 1
        if args.format == "json":
            stream.write(json.dumps(collected) + "\n")
        print(f"enumerated {count} tree(s)", file=sys.stderr)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _read_lines(path: str) -> list[str]:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="ascii").read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def cmd_map(args) -> int:
    source_parse, target_parse = (
        (trees.parse_ternary, trees.parse_binary) if args.direction == "t2b"
        else (trees.parse_binary, trees.parse_ternary)
    )
    apply_map = phi if args.direction == "t2b" else phi_inverse
    lines = _read_lines(args.in_path)
    parsed = []
    offset = 0
    for line_no, line in enumerate(lines, start=1):
        try:
            parsed.append(source_parse(line))
        except ParseError as err:
            try:
                target_parse(line)
            except ParseError:
                raise ParseError(offset + err.offset, err.expected, err.found) from None
            raise FamilyMismatchError(
                f"line {line_no} parses as the opposite family; check --direction") from None
        offset += len(line) + 1
    stream, close = _open_out(args.out)
    try:
        collected = []
        for index, tree in enumerate(parsed):
            item = _render(stream, index, apply_map(tree), args.format)
            if item is not None:
                collected.append(item)
        if args.format == "json":
            stream.write(json.dumps(collected) + "\n")
        print(f"mapped {len(parsed)} tree(s)", file=sys.stderr)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, n_max=args.n_max, m_max=args.m_max, order=args.order)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    print(f"elapsed: {report.elapsed_seconds:.3f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse uses exit code 2 for usage errors
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SizeCapError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except FamilyMismatchError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAMILY
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
