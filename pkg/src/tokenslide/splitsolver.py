"""Polynomial-time discovery solvers on split graphs (VC, IS, FVS).

Candidate solutions are enumerable on split graphs: after repartitioning,
the minimal vertex covers are exactly Q and, per clique vertex v, the set
(Q - {v}) + (N(v) in I); maximal independent sets are their complements; and
every minimal feedback vertex set leaves at most two clique vertices, which
bounds the candidates by O(n^2).  Each candidate is scored with a
minimum-cost assignment and the best one is realized as a move sequence.
"""

from __future__ import annotations

from .assignment import CostMatrix, min_cost_assignment
from .fvsfpt import realize_matching
from .graph import (
    DiscoveryInstance,
    Graph,
    Move,
    SplitPartition,
    check_solution,
    distances_from,
    is_connected,
    split_partition,
)


class NotSplitError(ValueError):
    """The input graph is not a split graph."""


class UnsupportedKindError(ValueError):
    """Dominating-set discovery stays hard on split graphs; use the oracle."""


def _require_split(g: Graph) -> SplitPartition:
    sp = split_partition(g)
    if sp is None:
        raise NotSplitError("input graph is not a split graph")
    return sp


def _sorted_sets(g: Graph, sets) -> list[frozenset[str]]:
    return sorted(
        (frozenset(s) for s in sets),
        key=lambda s: (len(s), tuple(sorted(g.index(v) for v in s))),
    )


def enumerate_minimal_vertex_covers_split(g: Graph) -> list[frozenset[str]]:
    """Exactly |Q|+1 minimal covers, Q taken from the repartitioned partition."""
    sp = _require_split(g)
    clique = sorted(sp.clique_side, key=g.index)
    clique_set = set(clique)
    covers = [frozenset(clique_set)]
    for v in clique:
        covers.append(
            frozenset(clique_set - {v}) | {w for w in g.neighbors(v) if w not in clique_set}
        )
    for cover in covers:
        if not check_solution(g, "VC", cover):
            raise AssertionError(f"enumerated set is not a cover: {sorted(cover)}")
        for x in cover:
            if all(y in cover for y in g.neighbors(x)):
                raise AssertionError(f"cover is not minimal at {x!r}")
    return covers


def enumerate_maximal_independent_sets_split(g: Graph) -> list[frozenset[str]]:
    """I itself plus, per clique vertex v, {v} together with I minus N(v)."""
    sp = _require_split(g)
    indep = frozenset(sp.independent_side)
    out = []
    if all(
        any(w in indep for w in g.neighbors(v)) for v in sp.clique_side
    ):
        out.append(indep)
    for v in sorted(sp.clique_side, key=g.index):
        out.append(frozenset({v}) | (indep - set(g.neighbors(v))))
    result = []
    seen = set()
    for s in out:
        if s in seen:
            continue
        seen.add(s)
        if not check_solution(g, "IS", s):
            raise AssertionError(f"enumerated set is not independent: {sorted(s)}")
        for x in g.vertices:
            if x not in s and not any(y in s for y in g.neighbors(x)):
                raise AssertionError(f"independent set is not maximal, can add {x!r}")
        result.append(s)
    return result


def enumerate_minimal_fvs_split(g: Graph) -> list[frozenset[str]]:
    """All minimal feedback vertex sets of a split graph.

    Candidates leave at most two clique vertices u, v; their common
    independent-side neighbors form triangles with them and must go.
    """
    sp = _require_split(g)
    clique = sorted(sp.clique_side, key=g.index)
    clique_set = set(clique)
    candidates = [frozenset(clique_set)]
    for u in clique:
        candidates.append(frozenset(clique_set - {u}))
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            common = {
                w
                for w in g.neighbors(u)
                if w not in clique_set and g.has_edge(v, w)
            }
            candidates.append(frozenset(clique_set - {u, v}) | common)
    result = []
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        if not check_solution(g, "FVS", cand):
            continue
        if any(check_solution(g, "FVS", cand - {x}) for x in cand):
            continue  # not inclusion-minimal
        result.append(cand)
    return result


def solve_split(inst: DiscoveryInstance) -> tuple[int, list[Move]] | None:
    """Decide the discovery instance on a split graph; on success return the
    minimum number of slides and a witness sequence."""
    if inst.kind == "DS":
        raise UnsupportedKindError(
            "dominating-set discovery is NP-complete on split graphs; use the oracle"
        )
    g = inst.graph
    if not is_connected(g):
        raise ValueError("solver requires a connected graph")
    _require_split(g)
    k = inst.k
    tokens = sorted(inst.start, key=g.index)
    dist = {u: distances_from(g, u) for u in tokens}

    if inst.kind == "VC":
        candidates = [c for c in enumerate_minimal_vertex_covers_split(g) if len(c) <= k]
    elif inst.kind == "FVS":
        candidates = [c for c in enumerate_minimal_fvs_split(g) if len(c) <= k]
    else:
        candidates = [
            c for c in enumerate_maximal_independent_sets_split(g) if len(c) >= k
        ]

    best: tuple[int, dict[str, str]] | None = None
    for cand in candidates:
        verts = sorted(cand, key=g.index)
        if inst.kind in ("VC", "FVS"):
            # saturate the candidate side; unmatched tokens stay put
            if not verts:
                total, targets = 0, {}
            else:
                cost = CostMatrix(
                    len(verts),
                    len(tokens),
                    tuple(
                        tuple(int(dist[u][v]) for u in tokens) for v in verts
                    ),
                )
                asg = min_cost_assignment(cost)
                total = asg.total
                targets = {tokens[c]: verts[r] for r, c in asg.pairs}
        else:
            # IS: every token must land inside the candidate set
            if k == 0:
                total, targets = 0, {}
            else:
                cost = CostMatrix(
                    len(tokens),
                    len(verts),
                    tuple(tuple(int(dist[u][v]) for v in verts) for u in tokens),
                )
                asg = min_cost_assignment(cost)
                total = asg.total
                targets = {tokens[r]: verts[c] for r, c in asg.pairs}
        if best is None or total < best[0]:
            best = (total, targets)

    if best is None or best[0] > inst.budget:
        return None
    return best[0], realize_matching(g, inst.start, best[1])
