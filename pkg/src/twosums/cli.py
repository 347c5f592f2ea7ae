"""Command-line interface: ``gen``, ``verify``, ``search``, ``sweep``, ``render``.

Exit codes: 0 success, 1 invalid sequence, 2 no sequence exists, 3 parse or
usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, TextIO, Tuple

from .constructor import NoSuchSequence, classify, construct
from .oracle import MAX_EXHAUSTIVE_M, SearchConfig, census, search
from .repair import RepairDefect
from .seqcore import VerificationReport, constrained_positions, parse_sequence, verify

EXIT_OK, EXIT_INVALID, EXIT_NONEXISTENT, EXIT_USAGE = 0, 1, 2, 3

# m=9 solution count reported by an earlier computer search
PUBLISHED_M9_COUNT = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _format_record(m: int, values: Sequence[int], x: int, y: int, case: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"m": m, "values": list(values), "x": x, "y": y, "case": case})
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="").writerow([m, x, y, case, " ".join(map(str, values))])
        return buf.getvalue()
    return " ".join(map(str, values)) + f"\nx={x} y={y} case={case}"


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    m = args.m
    if m < 3:
        raise UsageError(f"m must be at least 3, got {m}")
    try:
        seq = construct(m)
    except NoSuchSequence as exc:
        print(f"error: {exc} (every m >= 3 except 7 has one)", file=sys.stderr)
        return EXIT_NONEXISTENT
    print(_format_record(m, seq.values, seq.weights.x, seq.weights.y, str(seq.case), args.format), file=out)
    return EXIT_OK


def _read_sequences(args: argparse.Namespace) -> List[Tuple[int, ...]]:
    if args.sequence:
        lines = [" ".join(args.sequence)]
    elif args.file:
        try:
            with open(args.file) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        lines = sys.stdin.read().splitlines()
    lines = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise UsageError("no sequence given")
    try:
        return [parse_sequence(ln) for ln in lines]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _describe(values: Sequence[int], report: VerificationReport) -> List[str]:
    lines = [" ".join(map(str, values))]
    if report.window_sums:
        xs, _ = constrained_positions(len(values))
        xs = set(xs)
        for p, s in report.window_sums:
            lines.append(f"  window {p:>4} ({'x' if p in xs else 'y'}): {s}")
    if report.valid:
        lines.append(f"valid: {report.weights}")
    else:
        lines.append(f"invalid: {report.failure}")
    return lines


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    status = EXIT_OK
    for values in _read_sequences(args):
        report = verify(values)
        print("\n".join(_describe(values, report)), file=out)
        if not report.valid:
            status = EXIT_INVALID
    return status


def cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    exhaustive = args.mode in ("all", "count")
    if exhaustive and args.m > MAX_EXHAUSTIVE_M and args.max_nodes is None:
        raise UsageError(
            f"mode {args.mode} needs m <= {MAX_EXHAUSTIVE_M} (or an explicit --max-nodes)"
        )
    try:
        config = SearchConfig(
            args.m,
            mode=args.mode,
            limit=args.limit,
            symmetry=args.symmetry,
            max_nodes=args.max_nodes,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = search(config)
    if args.mode == "count":
        print(result.count, file=out)
    elif args.mode == "exists":
        print("yes" if result.found else "no", file=out)
    else:
        for sol in result.solutions:
            print(" ".join(map(str, sol)), file=out)
        if not result.solutions:
            print("no solution", file=out)
    print(f"exhausted: {'yes' if result.exhausted else 'no'}", file=out)
    print(f"nodes: {result.nodes_explored}", file=out)
    if args.mode == "count" and args.m == 9 and result.exhausted:
        counts = census(9)
        matches = [k for k in ("raw", "reversal") if counts[k] == PUBLISHED_M9_COUNT]
        print(
            f"note: published count {PUBLISHED_M9_COUNT}; raw={counts['raw']}, "
            f"up-to-reversal={counts['reversal']}; matches: {', '.join(matches) or 'neither'}",
            file=out,
        )
    # nonexistence is only claimed after the whole space was covered
    if args.mode != "count" and not result.found and result.exhausted:
        return EXIT_NONEXISTENT
    return EXIT_OK


def sweep_row(m: int) -> Tuple[int, str, Optional[int], Optional[int], str]:
    """``(m, case, x, y, status)`` for one length."""
    case = classify(m)
    if case.tag == "Impossible":
        return m, str(case), None, None, "impossible"
    try:
        seq = construct(m)
    except (NoSuchSequence, RepairDefect) as exc:
        return m, str(case), None, None, f"FAILED: {exc}"
    report = verify(seq.values)
    status = "ok" if report.valid and report.weights == seq.weights else f"FAILED: {report.failure}"
    return m, str(case), seq.weights.x, seq.weights.y, status


def cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    if not 3 <= args.m_min <= args.m_max:
        raise UsageError(f"need 3 <= m_min <= m_max, got {args.m_min}..{args.m_max}")
    ms = range(args.m_min, args.m_max + 1)
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(sweep_row, ms, chunksize=64))
    else:
        rows = map(sweep_row, ms)
    failures = 0
    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(["m", "case", "x", "y", "status"])
    for m, case, x, y, status in rows:
        if status == "impossible":
            text = f"m={m} impossible"
        else:
            text = f"m={m} {case} x={x} y={y} {status}"
            failures += status != "ok"
        if writer:
            writer.writerow([m, case, "" if x is None else x, "" if y is None else y, status])
        else:
            print(text, file=out)
    return EXIT_OK if failures == 0 else EXIT_INVALID


def render(values: Sequence[int]) -> str:
    """Values on one line, class-1 window sums above, class-3 sums below."""
    report = verify(values)
    if not report.valid:
        raise ValueError(f"cannot render invalid sequence: {report.failure}")
    sums = dict(report.window_sums)
    width = max(len(str(v)) for v in list(values) + list(sums.values())) + 1
    above, middle, below = [], [], []
    for p, v in enumerate(values, start=1):
        middle.append(str(v).rjust(width))
        above.append(str(sums[p]).rjust(width) if p % 4 == 1 else " " * width)
        below.append(str(sums[p]).rjust(width) if p % 4 == 3 else " " * width)
    return "\n".join("".join(row).rstrip() for row in (above, middle, below))


def cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    status = EXIT_OK
    for values in _read_sequences(args):
        try:
            print(render(values), file=out)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = EXIT_INVALID
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twosums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="construct a sequence of length m")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_gen)

    for name, func, help_ in (
        ("verify", cmd_verify, "check sequences"),
        ("render", cmd_render, "draw a sequence with its window sums"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("sequence", nargs="*", help="integers, comma or space separated")
        p.add_argument("--file", help="file with one sequence per line")
        p.set_defaults(func=func)

    p = sub.add_parser("search", help="exhaustive search for length m")
    p.add_argument("m", type=int)
    p.add_argument("--mode", choices=("exists", "first", "all", "count"), default="count")
    p.add_argument("--symmetry", choices=("raw", "reversal"), default="raw")
    p.add_argument("--limit", type=int)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="construct and verify every m in a range")
    p.add_argument("m_min", type=int)
    p.add_argument("m_max", type=int)
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out or sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
