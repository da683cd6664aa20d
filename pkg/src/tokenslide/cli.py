"""Command-line front end.

Exit codes: 0 = YES, 1 = NO, 2 = usage or input error.

    tokenslide solve --method oracle|cw|fvs-fpt|split|auto <instance> [--expr F]
    tokenslide oracle <instance>
    tokenslide verify <instance> <moves-file>
    tokenslide generate --reduction x3c|triangulate|diam-vc|diam-fvs|search ...
    tokenslide enumerate --what covers|mis|mfvs <graph-or-instance>

The oracle state cap can be overridden with TOKENSLIDE_ORACLE_CAP.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import cwdp, cwexpr, formats, fvsfpt, oracle, reductions, splitsolver
from .graph import (
    Graph,
    InvalidMoveError,
    Move,
    normalize_budget,
    split_partition,
    validate_sequence,
)


class CliError(Exception):
    """Input or usage error; reported on stderr with exit code 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _write_output(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _oracle_cap() -> int:
    raw = os.environ.get("TOKENSLIDE_ORACLE_CAP")
    if raw is None:
        return oracle.DEFAULT_STATE_CAP
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"TOKENSLIDE_ORACLE_CAP must be an integer, got {raw!r}") from None


def _sorted_names(vertices) -> str:
    return " ".join(sorted(vertices))


def _format_set(s) -> str:
    return "{" + " ".join(sorted(s)) + "}"


def _solve(args) -> int:
    inst = formats.parse_instance(_read(args.instance))
    inst = normalize_budget(inst)
    method = args.method
    if method == "auto":
        if inst.kind != "DS" and split_partition(inst.graph) is not None:
            method = "split"
        elif inst.kind == "FVS":
            method = "fvs-fpt"
        else:
            method = "oracle"

    witness: list[Move] | None = None
    steps: int | None = None
    if method == "oracle":
        found = oracle.discover_min_moves(inst, max_states=_oracle_cap())
        if found is not None:
            steps, witness = found
    elif method == "cw":
        if args.expr is None:
            raise CliError("--method cw requires --expr <expression-file>")
        if inst.kind != "VC":
            raise CliError(f"--method cw handles VC instances only, got {inst.kind}")
        if args.witness is not None:
            raise CliError("--method cw decides without producing witnesses")
        expr = cwexpr.parse_expression(_read(args.expr))
        try:
            steps = cwdp.solve_vcd_cw(expr, inst)
        except (cwdp.RedundantExpressionError, cwdp.ExpressionMismatchError) as exc:
            raise CliError(str(exc)) from None
    elif method == "fvs-fpt":
        if inst.kind != "FVS":
            raise CliError(f"--method fvs-fpt handles FVS instances only, got {inst.kind}")
        if args.dump_reps is not None:
            reps = fvsfpt.enumerate_compact_representations(inst.graph, inst.k)
            lines = [" ".join(_format_set(c) for c in rep.classes) for rep in reps]
            _write_output("".join(line + "\n" for line in lines), args.dump_reps)
        found = fvsfpt.solve_fvsd_fpt(inst)
        if found is not None:
            steps, witness = found
    elif method == "split":
        try:
            found = splitsolver.solve_split(inst)
        except (splitsolver.NotSplitError, splitsolver.UnsupportedKindError) as exc:
            raise CliError(str(exc)) from None
        if found is not None:
            steps, witness = found
    else:
        raise CliError(f"unknown method {method!r}")

    if steps is None:
        print("NO")
        return 1
    print(f"YES {steps}")
    if args.witness is not None and witness is not None:
        _write_output(formats.format_moves(witness), args.witness)
    return 0


def _verify(args) -> int:
    inst = formats.parse_instance(_read(args.instance))
    moves = formats.parse_moves(_read(args.moves))
    try:
        report = validate_sequence(inst, moves)
    except InvalidMoveError as exc:
        raise CliError(f"invalid move sequence: {exc}") from None
    print(f"final {_sorted_names(report.final)}")
    print(f"steps {report.steps}")
    print(f"feasible {'yes' if report.feasible else 'no'}")
    print(f"within-budget {'yes' if report.within_budget else 'no'}")
    return 0 if report.feasible and report.within_budget else 1


def _generate(args) -> int:
    if args.reduction == "x3c":
        x = formats.parse_x3c(_read(args.input))
        inst = reductions.x3c_to_vcd(x)
        _write_output(formats.format_instance(inst), args.output)
    elif args.reduction == "triangulate":
        inst = formats.parse_instance(_read(args.input))
        if inst.kind != "VC":
            raise CliError(f"triangulate expects a VC instance, got {inst.kind}")
        out = reductions.vcd_to_fvsd(inst)
        _write_output(formats.format_instance(out), args.output)
    elif args.reduction in ("diam-vc", "diam-fvs"):
        g = formats.parse_graph(_read(args.input))
        if args.k is None:
            raise CliError(f"{args.reduction} requires -k")
        transform = (
            reductions.diameterize_vc if args.reduction == "diam-vc" else reductions.diameterize_fvs
        )
        g2, k2 = transform(g, args.k)
        _write_output(formats.format_graph(g2), args.output)
        print(f"k-prime {k2}")
    elif args.reduction == "search":
        g = formats.parse_graph(_read(args.input))
        if args.kind is None or not args.tokens:
            raise CliError("search requires --kind and --tokens")
        inst = reductions.search_to_discovery(
            g, args.kind, len(args.tokens), frozenset(args.tokens)
        )
        _write_output(formats.format_instance(inst), args.output)
    else:
        raise CliError(f"unknown reduction {args.reduction!r}")
    return 0


def _enumerate(args) -> int:
    text = _read(args.input)
    try:
        g: Graph = formats.parse_graph(text)
    except formats.FormatError:
        g = formats.parse_instance(text).graph
    try:
        if args.what == "covers":
            sets = splitsolver.enumerate_minimal_vertex_covers_split(g)
        elif args.what == "mis":
            sets = splitsolver.enumerate_maximal_independent_sets_split(g)
        else:
            sets = splitsolver.enumerate_minimal_fvs_split(g)
    except splitsolver.NotSplitError as exc:
        raise CliError(str(exc)) from None
    for s in sorted(sets, key=lambda s: (len(s), sorted(s))):
        print(_format_set(s))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenslide",
        description="Solvers for solution discovery on graphs under token sliding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and report YES <steps> or NO")
    p.add_argument("instance", help="instance file")
    p.add_argument(
        "--method",
        choices=("oracle", "cw", "fvs-fpt", "split", "auto"),
        default="auto",
    )
    p.add_argument("--expr", help="expression file (required for --method cw)")
    p.add_argument("--witness", help="write the witness move sequence to this file")
    p.add_argument(
        "--dump-reps",
        help="with --method fvs-fpt, write the compact representation list here",
    )
    p.set_defaults(func=_solve)

    p = sub.add_parser("oracle", help="force the exhaustive configuration-space search")
    p.add_argument("instance")
    p.add_argument("--witness")
    p.set_defaults(func=_solve, method="oracle", expr=None, dump_reps=None)

    p = sub.add_parser("verify", help="replay a move sequence against an instance")
    p.add_argument("instance")
    p.add_argument("moves")
    p.set_defaults(func=_verify)

    p = sub.add_parser("generate", help="build instances via the reductions")
    p.add_argument(
        "--reduction",
        required=True,
        choices=("x3c", "triangulate", "diam-vc", "diam-fvs", "search"),
    )
    p.add_argument("input", help="input file (x3c, instance, or graph)")
    p.add_argument("-k", type=int, help="parameter for diam-vc / diam-fvs")
    p.add_argument("--kind", choices=("VC", "IS", "DS", "FVS"), help="for search")
    p.add_argument("--tokens", nargs="*", default=[], help="placement for search")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_generate)

    p = sub.add_parser("enumerate", help="dump candidate solutions on a split graph")
    p.add_argument("--what", required=True, choices=("covers", "mis", "mfvs"))
    p.add_argument("input", help="graph or instance file")
    p.set_defaults(func=_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (formats.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.StateSpaceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
