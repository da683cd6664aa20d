"""Feedback-vertex-set discovery, fixed-parameter pipeline in the token count.

Three stages: enumerate a complete list of compact representations (disjoint
vertex classes such that picking one vertex per class yields a feedback
vertex set), score each representation by a minimum-cost assignment of tokens
to classes (class weight = hop distance to the nearest class vertex), and
realize the best assignment as an explicit move sequence.

The enumerator is a branching procedure: strip acyclic material (degree <= 1
vertices and bridge edges), contract maximal degree-2 paths, and either emit
one class per remaining disjoint cycle or branch over the elements of a
shortest cycle in the contracted multigraph.  A branch vertex becomes a
singleton class; a contracted path becomes a class holding the whole path,
since deleting any one vertex of an induced degree-2 path breaks exactly the
cycles that traverse the path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .assignment import Assignment, CostMatrix, min_cost_assignment
from .graph import (
    DiscoveryInstance,
    Graph,
    GraphError,
    Move,
    distances_from,
    is_connected,
    shortest_path,
)


class SchedulingDeadlockError(RuntimeError):
    """Move realization stalled; the supplied matching was not minimum-weight."""


@dataclass(frozen=True)
class CompactRepresentation:
    """Pairwise disjoint vertex classes; one vertex per class is always an FVS."""

    classes: tuple[frozenset[str], ...]

    def __post_init__(self):
        seen: set[str] = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("classes must be non-empty")
            if seen & cls:
                raise ValueError("classes must be pairwise disjoint")
            seen |= cls


@dataclass(frozen=True)
class CandidateBipartite:
    token_side: tuple[str, ...]
    class_side: tuple[frozenset[str], ...]
    weights: CostMatrix  # rows = classes, cols = tokens


def _prune_low_degree(adj: dict[str, set[str]]):
    stack = [v for v, nb in adj.items() if len(nb) <= 1]
    while stack:
        v = stack.pop()
        if v not in adj or len(adj[v]) > 1:
            continue
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) <= 1:
                stack.append(w)
        del adj[v]


def _is_bridge(adj: dict[str, set[str]], u: str, v: str) -> bool:
    # u-v is a bridge iff v is unreachable from u without the edge itself
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if x == u and y == v:
                continue
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return True


def _simplify(adj: dict[str, set[str]], order) -> None:
    """Iteratively delete degree-<=1 vertices and bridge edges; cycles survive."""
    while True:
        _prune_low_degree(adj)
        bridges = []
        for u in sorted(adj, key=order):
            for v in sorted(adj[u], key=order):
                if order(u) < order(v) and _is_bridge(adj, u, v):
                    bridges.append((u, v))
        if not bridges:
            return
        for u, v in bridges:
            if u in adj and v in adj:
                adj[u].discard(v)
                adj[v].discard(u)


def _components(adj: dict[str, set[str]], order) -> list[list[str]]:
    out = []
    seen: set[str] = set()
    for v in sorted(adj, key=order):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(comp)
    return out


def _contracted_multigraph(
    adj: dict[str, set[str]], branch: set[str], order
) -> list[tuple[str, str, tuple[str, ...]]]:
    """Edges (u, v, interior) between branch vertices; loops allowed (u == v)."""
    edges = []
    walked: set[tuple[str, str]] = set()
    for u in sorted(branch, key=order):
        for first in sorted(adj[u], key=order):
            if (u, first) in walked:
                continue
            interior: list[str] = []
            prev, cur = u, first
            while cur not in branch:
                interior.append(cur)
                nxt = next(x for x in adj[cur] if x != prev)
                prev, cur = cur, nxt
            walked.add((u, first))
            walked.add((cur, interior[-1] if interior else u))
            edges.append((u, cur, tuple(interior)))
    return edges


def _shortest_cycle_classes(
    adj: dict[str, set[str]], branch: set[str], order
) -> list[frozenset[str]]:
    """Candidate classes covering one shortest cycle of the contracted multigraph."""
    edges = _contracted_multigraph(adj, branch, order)
    loops = [e for e in edges if e[0] == e[1]]
    if loops:
        u, _, interior = loops[0]
        return [frozenset((u,)), frozenset(interior)]
    by_pair: dict[tuple[str, str], list[tuple[str, str, tuple[str, ...]]]] = {}
    for e in edges:
        key = tuple(sorted((e[0], e[1]), key=order))
        by_pair.setdefault(key, []).append(e)
    parallels = sorted(
        (key for key, grp in by_pair.items() if len(grp) >= 2),
        key=lambda key: (order(key[0]), order(key[1])),
    )
    if parallels:
        (u, v) = parallels[0]
        e1, e2 = by_pair[(u, v)][0], by_pair[(u, v)][1]
        classes = [frozenset((u,)), frozenset((v,))]
        for e in (e1, e2):
            if e[2]:
                classes.append(frozenset(e[2]))
        return classes
    # simple contracted graph: girth by per-edge removal + BFS
    nbrs: dict[str, list[tuple[str, int]]] = {v: [] for v in branch}
    for idx, (u, v, _) in enumerate(edges):
        nbrs[u].append((v, idx))
        nbrs[v].append((u, idx))
    best: tuple[int, int] | None = None  # (cycle length, defining edge index)
    best_cycle: list[int] | None = None
    for idx, (u, v, _) in enumerate(edges):
        prev: dict[str, tuple[str, int]] = {u: (u, -1)}
        queue = deque([u])
        while queue and v not in prev:
            x = queue.popleft()
            for y, eidx in nbrs[x]:
                if eidx == idx or y in prev:
                    continue
                prev[y] = (x, eidx)
                queue.append(y)
        if v not in prev:
            continue
        path_edges = []
        cur = v
        while cur != u:
            cur, eidx = prev[cur]
            path_edges.append(eidx)
        length = len(path_edges) + 1
        if best is None or length < best[0]:
            best = (length, idx)
            best_cycle = path_edges + [idx]
    if best_cycle is None:
        raise AssertionError("branch vertices without any contracted cycle")
    classes: list[frozenset[str]] = []
    verts: set[str] = set()
    for eidx in best_cycle:
        u, v, interior = edges[eidx]
        verts.update((u, v))
        if interior:
            classes.append(frozenset(interior))
    classes.extend(frozenset((x,)) for x in verts)
    return classes


def enumerate_compact_representations(g: Graph, k: int) -> list[CompactRepresentation]:
    """Complete list: every minimal feedback vertex set of size <= k is
    represented (meets each class of some entry exactly once)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    order = g.index
    reps: list[CompactRepresentation] = []
    emitted: set[frozenset[frozenset[str]]] = set()

    def class_key(cls: frozenset[str]) -> int:
        return min(order(v) for v in cls)

    def emit(chosen: tuple[frozenset[str], ...]):
        key = frozenset(chosen)
        if key in emitted:
            return
        emitted.add(key)
        reps.append(CompactRepresentation(tuple(sorted(chosen, key=class_key))))

    def recurse(removed: frozenset[str], budget: int, chosen: tuple[frozenset[str], ...]):
        adj = {v: set(g.neighbors(v)) - removed for v in g.vertices if v not in removed}
        _simplify(adj, order)
        if not adj:
            emit(chosen)
            return
        branch = {v for v in adj if len(adj[v]) >= 3}
        if not branch:
            comps = _components(adj, order)
            if len(comps) <= budget:
                emit(chosen + tuple(frozenset(c) for c in comps))
            return
        if budget == 0:
            return
        for cls in sorted(_shortest_cycle_classes(adj, branch, order), key=class_key):
            recurse(removed | cls, budget - 1, chosen + (cls,))

    recurse(frozenset(), k, ())
    return reps


def build_candidate_bipartite(
    g: Graph, start: frozenset[str], rep: CompactRepresentation
) -> CandidateBipartite:
    """Weight of (class, token) = fewest slides from the token to the class."""
    tokens = tuple(sorted(start, key=g.index))
    if len(rep.classes) > len(tokens):
        raise ValueError("more classes than tokens; representation cannot be saturated")
    dist = {u: distances_from(g, u) for u in tokens}
    rows = []
    for cls in rep.classes:
        rows.append(tuple(int(min(dist[u][y] for y in cls)) for u in tokens))
    return CandidateBipartite(
        tokens, rep.classes, CostMatrix(len(rep.classes), len(tokens), tuple(rows))
    )


def _class_targets(
    g: Graph, bip: CandidateBipartite, asg: Assignment
) -> dict[str, str]:
    dist = {u: distances_from(g, u) for u in bip.token_side}
    targets: dict[str, str] = {}
    for r, c in asg.pairs:
        token = bip.token_side[c]
        cls = bip.class_side[r]
        targets[token] = min(cls, key=lambda y: (dist[token][y], g.index(y)))
    return targets


def realize_matching(
    g: Graph, start: frozenset[str], targets: dict[str, str]
) -> list[Move]:
    """Turn a minimum-weight token-to-target matching into an explicit legal
    move sequence of length sum(dist(u, target(u))).

    Tokens advance along fixed shortest paths.  When the next path vertex is
    occupied, the blocked token and the blocker swap jobs: the blocker carries
    on along the remaining path, the blocked token takes over the blocker's
    route (prefixed by the contested vertex) and resumes later.  Swaps keep
    the total remaining distance constant, so the final length equals the
    matching weight.  A stall (possible only when the matching is not minimum)
    raises SchedulingDeadlockError.
    """
    for u, t in targets.items():
        if u not in start:
            raise ValueError(f"matched vertex {u!r} holds no token")
        if t not in g:
            raise GraphError(f"unknown target vertex: {t!r}")
    if len(set(targets.values())) != len(targets):
        raise ValueError("targets must be pairwise distinct")

    tokens = sorted(start, key=g.index)
    pos = {u: u for u in tokens}
    at = {u: u for u in tokens}
    route: dict[str, list[str]] = {u: [] for u in tokens}
    for u in tokens:
        if u in targets:
            route[u] = shortest_path(g, u, targets[u])[1:]

    moves: list[Move] = []
    total = sum(len(r) for r in route.values())
    idle_rounds = 0
    while True:
        tok = next((u for u in tokens if route[u]), None)
        if tok is None:
            break
        made = len(moves)
        steps_left = total - len(moves) + len(tokens)
        for _ in range(steps_left + 1):
            if not route[tok]:
                break
            nxt = route[tok][0]
            blocker = at.get(nxt)
            if blocker is None:
                here = pos[tok]
                del at[here]
                at[nxt] = tok
                pos[tok] = nxt
                moves.append(Move(here, nxt))
                route[tok].pop(0)
            else:
                tail = route[tok][1:]
                route[tok] = [nxt] + route[blocker]
                route[blocker] = tail
                tok = blocker
        idle_rounds = 0 if len(moves) > made else idle_rounds + 1
        if idle_rounds > 2 * len(tokens) + 4 or len(moves) > total:
            raise SchedulingDeadlockError(
                "move scheduling stalled; matching was not minimum-weight"
            )
    return moves


def solve_fvsd_fpt(inst: DiscoveryInstance) -> tuple[int, list[Move]] | None:
    """Decide feedback-vertex-set discovery; on success return the minimum
    number of slides and a witness sequence."""
    if inst.kind != "FVS":
        raise ValueError(f"this solver handles FVS only, got {inst.kind}")
    if not is_connected(inst.graph):
        raise ValueError("solver requires a connected graph")
    g = inst.graph
    best: tuple[int, dict[str, str]] | None = None
    for rep in enumerate_compact_representations(g, inst.k):
        if len(rep.classes) > inst.k:
            continue
        if not rep.classes:
            total, targets = 0, {}
        else:
            bip = build_candidate_bipartite(g, inst.start, rep)
            asg = min_cost_assignment(bip.weights)
            total, targets = asg.total, _class_targets(g, bip, asg)
        if best is None or total < best[0]:
            best = (total, targets)
    if best is None or best[0] > inst.budget:
        return None
    return best[0], realize_matching(g, inst.start, best[1])
