"""Command-line front end.

The primary answer is the only thing written to stdout; diagnostics go to
stderr. Exit codes: 0 success, 2 input file or parameter parse error,
3 state cap exceeded, 4 independent-set size guarantee failed, 5 improper
input coloring, 6 palette too small, 7 sequence verification failure.

The oracle's k^n cap (default 10^7) can be overridden with the
RECOLOR_STATE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .engine import (
    RecoloringStep,
    recolor_between,
    recolor_theorem_pipeline,
    sequence_stats,
    verify_sequence,
)
from .errors import (
    GraphFormatError,
    ImproperInput,
    PaletteTooSmall,
    RecolorwalkError,
    SequenceViolation,
    SizeGuaranteeViolated,
    StateSpaceTooLarge,
)
from .graphs import mad_brute, mad_exact, parse_coloring, parse_graph, serialize_coloring
from .layering import (
    SpecialISParams,
    build_degree_partition,
    degree_partition_from_degeneracy,
    serialize_partition,
)
from .oracle import DEFAULT_STATE_CAP, bfs_distance, count_proper_colorings, exact_diameter

_EXIT_CODES = (
    (GraphFormatError, 2),
    (StateSpaceTooLarge, 3),
    (SizeGuaranteeViolated, 4),
    (ImproperInput, 5),
    (PaletteTooSmall, 6),
    (SequenceViolation, 7),
)


def _read_input(path: str, role: str, report: dict) -> str:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {role} file {path}: {exc.strerror}") from None
    report["inputs"][role] = hashlib.sha256(data).hexdigest()
    return data.decode("utf-8")


def _parse_rational(text: str) -> Fraction:
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError):
        pass
    raise GraphFormatError(f"expected an exact rational like 1/2, got {text!r}")


def _parse_steps(text: str) -> list[RecoloringStep]:
    steps = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError("expected step 'vertex color'", line_no)
        try:
            steps.append(RecoloringStep(int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError("expected step 'vertex color'", line_no) from None
    return steps


def _state_cap() -> int:
    raw = os.environ.get("RECOLOR_STATE_CAP")
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphFormatError(f"RECOLOR_STATE_CAP is not an integer: {raw!r}") from None


def _stats_payload(stats, partition, n: int) -> dict:
    return {
        "total": stats.total,
        "max_per_vertex": stats.max_per_vertex,
        "per_vertex": list(stats.per_vertex),
        "s": partition.s,
        "t": partition.t,
        "n": n,
    }


def _cmd_mad(args, report: dict) -> int:
    g = parse_graph(_read_input(args.graph, "graph", report))
    value = mad_exact(g) if args.mode == "exact" else mad_brute(g)
    answer = f"{value.numerator}/{value.denominator}"
    report["outputs"]["mad"] = answer
    print(answer)
    return 0


def _cmd_partition(args, report: dict) -> int:
    g = parse_graph(_read_input(args.graph, "graph", report))
    params = SpecialISParams(d=args.d, epsilon=_parse_rational(args.epsilon))
    partition = build_degree_partition(g, params)
    report["outputs"]["s"] = partition.s
    report["outputs"]["t"] = partition.t
    sys.stdout.write(serialize_partition(partition))
    return 0


def _cmd_recolor(args, report: dict) -> int:
    g = parse_graph(_read_input(args.graph, "graph", report))
    alpha = parse_coloring(_read_input(args.from_path, "from", report), g.n, args.k)
    beta = parse_coloring(_read_input(args.to_path, "to", report), g.n, args.k)
    if args.degenerate_fallback:
        partition = degree_partition_from_degeneracy(g)
        seq = recolor_between(g, partition, alpha, beta, args.k)
        stats = sequence_stats(seq)
    else:
        if args.d is None or args.epsilon is None:
            raise GraphFormatError("-d and --epsilon are required without --degenerate-fallback")
        seq, stats, partition = recolor_theorem_pipeline(
            g, args.d, _parse_rational(args.epsilon), alpha, beta, args.k)
    if args.out:
        lines = "".join(f"{step.vertex} {step.new_color}\n" for step in seq.steps)
        Path(args.out).write_text(lines)
    if args.stats:
        payload = _stats_payload(stats, partition, g.n)
        Path(args.stats).write_text(
            json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    report["outputs"]["sequence_length"] = stats.total
    report["outputs"]["s"] = partition.s
    report["outputs"]["t"] = partition.t
    report["outputs"]["stats"] = _stats_payload(stats, partition, g.n)
    if args.report:
        mad = mad_exact(g)
        report["outputs"]["mad"] = f"{mad.numerator}/{mad.denominator}"
    print(stats.total)
    return 0


def _cmd_verify(args, report: dict) -> int:
    g = parse_graph(_read_input(args.graph, "graph", report))
    alpha = parse_coloring(_read_input(args.from_path, "from", report), g.n, args.k)
    steps = _parse_steps(_read_input(args.sequence, "sequence", report))
    final = verify_sequence(g, alpha, steps, args.k)
    answer = "OK final=" + " ".join(str(c) for c in final.colors)
    report["outputs"]["final"] = serialize_coloring(final).strip()
    print(answer)
    return 0


def _cmd_oracle(args, report: dict) -> int:
    g = parse_graph(_read_input(args.graph, "graph", report))
    cap = _state_cap()
    if args.count:
        answer = str(count_proper_colorings(g, args.k, cap))
    elif args.diameter:
        value = exact_diameter(g, args.k, cap)
        answer = "disconnected" if value is None else str(value)
    else:
        from_path, to_path = args.distance
        alpha = parse_coloring(_read_input(from_path, "from", report), g.n, args.k)
        beta = parse_coloring(_read_input(to_path, "to", report), g.n, args.k)
        value = bfs_distance(g, args.k, alpha, beta, cap)
        answer = "unreachable" if value is None else str(value)
    report["outputs"]["answer"] = answer
    print(answer)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolorwalk",
        description="Recoloring walks between proper graph colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    mad = sub.add_parser("mad", help="exact maximum average degree, printed as p/q")
    mad.add_argument("graph")
    mad.add_argument("--mode", choices=("exact", "brute"), default="exact")
    mad.set_defaults(func=_cmd_mad)

    partition = sub.add_parser("partition", help="build and print a degree-layer partition")
    partition.add_argument("graph")
    partition.add_argument("-d", type=int, required=True)
    partition.add_argument("--epsilon", required=True, metavar="P/Q")
    partition.set_defaults(func=_cmd_partition)

    recolor = sub.add_parser("recolor", help="emit a recoloring walk between two colorings")
    recolor.add_argument("graph")
    recolor.add_argument("from_path", metavar="from")
    recolor.add_argument("to_path", metavar="to")
    recolor.add_argument("-k", type=int, required=True)
    recolor.add_argument("-d", type=int)
    recolor.add_argument("--epsilon", metavar="P/Q")
    recolor.add_argument("--degenerate-fallback", action="store_true")
    recolor.add_argument("--stats", metavar="OUT.json")
    recolor.add_argument("--out", metavar="SEQ.txt")
    recolor.set_defaults(func=_cmd_recolor)

    verify = sub.add_parser("verify", help="replay and check a sequence file")
    verify.add_argument("graph")
    verify.add_argument("from_path", metavar="from")
    verify.add_argument("sequence")
    verify.add_argument("-k", type=int, required=True)
    verify.set_defaults(func=_cmd_verify)

    oracle = sub.add_parser("oracle", help="exhaustive answers on tiny instances")
    oracle.add_argument("graph")
    oracle.add_argument("-k", type=int, required=True)
    group = oracle.add_mutually_exclusive_group(required=True)
    group.add_argument("--diameter", action="store_true")
    group.add_argument("--count", action="store_true")
    group.add_argument("--distance", nargs=2, metavar=("FROM", "TO"))
    oracle.set_defaults(func=_cmd_oracle)

    for p in (mad, partition, recolor, verify, oracle):
        p.add_argument("--report", metavar="OUT.json",
                       help="write a JSON run report to this path")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = _build_parser().parse_args(argv)
    report = {"command": argv, "inputs": {}, "outputs": {}}
    code = 0
    try:
        code = args.func(args, report)
    except (RecolorwalkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = next((c for t, c in _EXIT_CODES if isinstance(exc, t)), 2)
        if code == 4 and args.command == "recolor" and not args.degenerate_fallback:
            print("hint: --degenerate-fallback builds a degeneracy-based "
                  "partition without the density precondition", file=sys.stderr)
    if getattr(args, "report", None):
        report["exit_status"] = code
        Path(args.report).write_text(
            json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
