"""Vertex-cover discovery over an irredundant labeled-graph expression.

Bottom-up dynamic program on the expression tree.  Each table entry is a
tuple (moves, tokens, absorb, project): `moves` counts slides already spent
inside the current subgraph, `tokens[z]` is the number of tokens on z-vertices
in the final configuration, and `absorb[z]` / `project[z]` count slides that
enter / leave the z-vertices through a hypothetical outside vertex adjacent to
everything.  Join nodes convert matching absorb/project units into real moves;
the root accepts when some stored tuple has no outstanding absorb or project.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .cwexpr import (
    Introduce,
    Join,
    Node,
    Relabel,
    UnionNode,
    WExpression,
    _postorder,
    check_irredundant,
    check_matches,
    evaluate,
)
from .graph import DiscoveryInstance


class RedundantExpressionError(ValueError):
    """The expression re-introduces an edge; the DP requires irredundant input."""


class ExpressionMismatchError(ValueError):
    """The expression does not denote the instance graph."""


class DPTuple(NamedTuple):
    moves: int
    tokens: tuple[int, ...]
    absorb: tuple[int, ...]
    project: tuple[int, ...]


class NodeContext(NamedTuple):
    label_sizes: tuple[int, ...]
    initial_tokens: tuple[int, ...]
    k: int
    b: int


class DPTable(NamedTuple):
    true_tuples: frozenset[DPTuple]


def is_valid_tuple(ctx: NodeContext, s: DPTuple) -> bool:
    """Conditions: (a) token budget, (b) empty classes carry nothing,
    (c) move budget, (d) per-class flow conservation and capacity.

    The flow-conservation equality in (d) describes the accounting in which
    every cross-class move is still routed through the virtual outside vertex.
    It holds for the introduce-node base cases; join nodes then trade matched
    absorb/project pairs for direct moves, after which stored tuples satisfy
    the relaxed form checked by _admissible instead.
    """
    if not _admissible(ctx, s):
        return False
    for init, kz, az, pz in zip(ctx.initial_tokens, s.tokens, s.absorb, s.project):
        if init + az - pz != kz:
            return False
    return True


def _admissible(ctx: NodeContext, s: DPTuple) -> bool:
    """Validity without the flow-conservation equality: conditions (a), (b),
    (c), and the capacity bound K(z) <= |U_z| from (d)."""
    if sum(s.tokens) > ctx.k:
        return False
    if s.moves > ctx.b:
        return False
    for size, kz, az, pz in zip(ctx.label_sizes, s.tokens, s.absorb, s.project):
        if size == 0 and (kz or az or pz):
            return False
        if kz > size or az > ctx.b or pz > ctx.b or kz < 0 or az < 0 or pz < 0:
            return False
    return True


def _prunable(s: DPTuple, b: int) -> bool:
    # every outstanding absorb/project unit still needs one future join move
    return s.moves + max(sum(s.absorb), sum(s.project)) > b


def _introduce_tuples(ctx: NodeContext, label: int) -> Iterator[DPTuple]:
    w = len(ctx.label_sizes)
    init = ctx.initial_tokens[label - 1]
    zeros = (0,) * w
    for a in range(ctx.b + 1):
        for p in range(ctx.b + 1):
            kz = init + a - p
            if kz < 0 or kz > 1 or kz > ctx.k:
                continue
            absorb = zeros[: label - 1] + (a,) + zeros[label:]
            project = zeros[: label - 1] + (p,) + zeros[label:]
            tokens = zeros[: label - 1] + (kz,) + zeros[label:]
            yield DPTuple(0, tokens, absorb, project)


def _combine(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(x, y))


def _fold(vec: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    out = list(vec)
    out[j - 1] += out[i - 1]
    out[i - 1] = 0
    return tuple(out)


def compute_node_tables(
    expr: WExpression, inst: DiscoveryInstance
) -> list[tuple[Node, NodeContext, DPTable]]:
    """Per-node tables in postorder; the last entry belongs to the root."""
    violations = check_irredundant(expr)
    if violations:
        raise RedundantExpressionError(
            "; ".join(str(v) for v in violations[:5])
            + ("; ..." if len(violations) > 5 else "")
        )
    if not check_matches(expr, inst.graph):
        raise ExpressionMismatchError("expression does not denote the instance graph")
    if inst.kind != "VC":
        raise ValueError(f"this solver handles VC only, got {inst.kind}")

    _, snaps = evaluate(expr)
    w = expr.width
    k, b = inst.k, inst.budget
    start = inst.start

    out: list[tuple[Node, NodeContext, DPTable]] = []
    tables: dict[int, frozenset[DPTuple]] = {}
    contexts: dict[int, NodeContext] = {}

    for node in _postorder(expr.root):
        snap = snaps[id(node)]
        sizes = [0] * w
        inits = [0] * w
        for v, lab in snap.label_of.items():
            sizes[lab - 1] += 1
            if v in start:
                inits[lab - 1] += 1
        ctx = NodeContext(tuple(sizes), tuple(inits), k, b)

        entries: set[DPTuple] = set()
        if isinstance(node, Introduce):
            for s in _introduce_tuples(ctx, node.label):
                if is_valid_tuple(ctx, s) and not _prunable(s, b):
                    entries.add(s)
        elif isinstance(node, UnionNode):
            left = tables[id(node.left)]
            right = tables[id(node.right)]
            for s1 in left:
                for s2 in right:
                    moves = s1.moves + s2.moves
                    if moves > b:
                        continue
                    s = DPTuple(
                        moves,
                        _combine(s1.tokens, s2.tokens),
                        _combine(s1.absorb, s2.absorb),
                        _combine(s1.project, s2.project),
                    )
                    if _admissible(ctx, s) and not _prunable(s, b):
                        entries.add(s)
        elif isinstance(node, Relabel):
            i, j = node.old, node.new
            for s1 in tables[id(node.child)]:
                s = DPTuple(
                    s1.moves,
                    _fold(s1.tokens, i, j),
                    _fold(s1.absorb, i, j),
                    _fold(s1.project, i, j),
                )
                if _admissible(ctx, s) and not _prunable(s, b):
                    entries.add(s)
        else:  # Join
            i, j = node.a, node.b
            size_i, size_j = ctx.label_sizes[i - 1], ctx.label_sizes[j - 1]
            for s1 in tables[id(node.child)]:
                # an uncovered i-j edge would remain unless one side is full
                if s1.tokens[i - 1] < size_i and s1.tokens[j - 1] < size_j:
                    continue
                max_f = min(s1.project[i - 1], s1.absorb[j - 1])
                max_g = min(s1.project[j - 1], s1.absorb[i - 1])
                for f in range(max_f + 1):
                    for g in range(max_g + 1):
                        moves = s1.moves + f + g
                        if moves > b:
                            continue
                        absorb = list(s1.absorb)
                        project = list(s1.project)
                        absorb[i - 1] -= g
                        absorb[j - 1] -= f
                        project[i - 1] -= f
                        project[j - 1] -= g
                        s = DPTuple(moves, s1.tokens, tuple(absorb), tuple(project))
                        if _admissible(ctx, s) and not _prunable(s, b):
                            entries.add(s)

        tables[id(node)] = frozenset(entries)
        contexts[id(node)] = ctx
        out.append((node, ctx, DPTable(frozenset(entries))))
    return out


def compute_tables(expr: WExpression, inst: DiscoveryInstance) -> DPTable:
    """Root table of the dynamic program."""
    return compute_node_tables(expr, inst)[-1][2]


def solve_vcd_cw(expr: WExpression, inst: DiscoveryInstance) -> int | None:
    """Minimum number of slides to reach a vertex cover, or None when the
    budget does not suffice."""
    root = compute_tables(expr, inst)
    best: int | None = None
    for s in root.true_tuples:
        if any(s.absorb) or any(s.project):
            continue
        if best is None or s.moves < best:
            best = s.moves
    return best
