"""Immutable graphs, feasibility predicates, and token-sliding move semantics.

Vertices are opaque string names.  All iteration orders are derived from the
order in which vertices were declared, so every algorithm built on top of this
module is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

KINDS = ("VC", "IS", "DS", "FVS")


class GraphError(ValueError):
    """Invalid graph construction or an unknown vertex."""


class InvalidMoveError(ValueError):
    """A move sequence breaks the token-sliding rules or the budget."""


class NotConnectedError(ValueError):
    """Operation requires a connected graph."""


class Graph:
    """Simple undirected graph with named vertices, immutable after construction.

    Raises GraphError on self-loops, duplicate edges, duplicate vertex names,
    or edges whose endpoints were not declared.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        verts = tuple(vertices)
        index: dict[str, int] = {}
        for v in verts:
            if v in index:
                raise GraphError(f"duplicate vertex name: {v!r}")
            index[v] = len(index)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        seen: set[frozenset[str]] = set()
        edge_list: list[tuple[str, str]] = []
        for u, v in edges:
            if u not in index:
                raise GraphError(f"edge endpoint not declared: {u!r}")
            if v not in index:
                raise GraphError(f"edge endpoint not declared: {v!r}")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            seen.add(key)
            if index[u] > index[v]:
                u, v = v, u
            edge_list.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.vertices = verts
        self.edges = tuple(edge_list)
        self._index = index
        # neighbor lists sorted by declaration order for determinism
        self._adj = {v: tuple(sorted(adj[v], key=index.__getitem__)) for v in verts}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex: {v!r}") from None

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex: {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def without_vertices(self, drop: Iterable[str]) -> "Graph":
        """Induced subgraph on the vertices not in `drop`."""
        gone = set(drop)
        keep = [v for v in self.vertices if v not in gone]
        kept = set(keep)
        edges = [(u, v) for u, v in self.edges if u in kept and v in kept]
        return Graph(keep, edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and (
            {frozenset(e) for e in self.edges} == {frozenset(e) for e in other.edges}
        )

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(frozenset(e) for e in self.edges)))


def build_graph(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> Graph:
    """Validate and build a Graph; see the Graph constructor for the checks."""
    return Graph(vertices, edges)


class Move(NamedTuple):
    src: str
    dst: str


@dataclass(frozen=True)
class DiscoveryInstance:
    """A discovery problem: reach a feasible configuration within `budget` slides."""

    graph: Graph
    kind: str
    start: frozenset[str]
    budget: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown problem kind: {self.kind!r}")
        for v in self.start:
            if v not in self.graph:
                raise GraphError(f"token on unknown vertex: {v!r}")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        object.__setattr__(self, "start", frozenset(self.start))

    @property
    def k(self) -> int:
        return len(self.start)


@dataclass(frozen=True)
class SplitPartition:
    """Split partition in repartitioned form: every clique vertex has a neighbor in I."""

    clique_side: frozenset[str]
    independent_side: frozenset[str]


class ReplayResult(NamedTuple):
    final: frozenset[str]
    steps: int
    feasible: bool
    within_budget: bool


def distances_from(g: Graph, source: str) -> dict[str, float]:
    """Breadth-first hop counts from `source`; unreachable vertices map to inf."""
    if source not in g:
        raise GraphError(f"unknown vertex: {source!r}")
    dist: dict[str, float] = {v: math.inf for v in g.vertices}
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if dist[w] == math.inf:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    dist = distances_from(g, g.vertices[0])
    return all(d != math.inf for d in dist.values())


def diameter(g: Graph) -> int:
    """Exact diameter; raises NotConnectedError on disconnected input."""
    if g.n == 0:
        raise NotConnectedError("diameter of an empty graph is undefined")
    best = 0
    for v in g.vertices:
        ecc = max(distances_from(g, v).values())
        if ecc == math.inf:
            raise NotConnectedError("graph is disconnected")
        best = max(best, int(ecc))
    return best


def shortest_path(g: Graph, source: str, target: str) -> list[str]:
    """One deterministic shortest path from source to target (inclusive)."""
    if source == target:
        return [source]
    parent: dict[str, str] = {source: source}
    frontier = [source]
    while frontier and target not in parent:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    if target not in parent:
        raise NotConnectedError(f"no path from {source!r} to {target!r}")
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _acyclic(g: Graph, removed: set[str]) -> bool:
    """True iff g minus `removed` has no cycle (union-find over surviving edges)."""
    parent = {v: v for v in g.vertices if v not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def check_solution(g: Graph, kind: str, s: Iterable[str]) -> bool:
    """Feasibility of vertex set `s` for the given problem kind (VC/IS/DS/FVS)."""
    chosen = set(s)
    for v in chosen:
        if v not in g:
            raise GraphError(f"unknown vertex in solution: {v!r}")
    if kind == "VC":
        return all(u in chosen or v in chosen for u, v in g.edges)
    if kind == "IS":
        return not any(u in chosen and v in chosen for u, v in g.edges)
    if kind == "DS":
        return all(
            v in chosen or any(w in chosen for w in g.neighbors(v)) for v in g.vertices
        )
    if kind == "FVS":
        return _acyclic(g, chosen)
    raise ValueError(f"unknown problem kind: {kind!r}")


def configurations_adjacent(g: Graph, s1: Iterable[str], s2: Iterable[str]) -> bool:
    """True iff s2 arises from s1 by sliding one token along an edge."""
    a, b = frozenset(s1), frozenset(s2)
    if len(a) != len(b):
        return False
    gone = a - b
    came = b - a
    if len(gone) != 1 or len(came) != 1:
        return False
    (x,) = gone
    (y,) = came
    return g.has_edge(x, y)


def validate_sequence(inst: DiscoveryInstance, moves: list[Move]) -> ReplayResult:
    """Replay `moves` from the start configuration.

    Raises InvalidMoveError on a slide from an unoccupied vertex, onto an
    occupied vertex, or along a non-edge.  Returns the final configuration
    together with feasibility and budget verdicts.
    """
    g = inst.graph
    occupied = set(inst.start)
    for step, (src, dst) in enumerate(moves, 1):
        if src not in g or dst not in g:
            raise InvalidMoveError(f"step {step}: unknown vertex in move {src}->{dst}")
        if src not in occupied:
            raise InvalidMoveError(f"step {step}: no token on {src}")
        if dst in occupied:
            raise InvalidMoveError(f"step {step}: destination {dst} is occupied")
        if not g.has_edge(src, dst):
            raise InvalidMoveError(f"step {step}: {src}-{dst} is not an edge")
        occupied.remove(src)
        occupied.add(dst)
    final = frozenset(occupied)
    return ReplayResult(
        final=final,
        steps=len(moves),
        feasible=check_solution(g, inst.kind, final),
        within_budget=len(moves) <= inst.budget,
    )


def normalize_budget(inst: DiscoveryInstance) -> DiscoveryInstance:
    """Cap the budget at k*diam(G); larger budgets never change the answer."""
    cap = inst.k * diameter(inst.graph)
    if inst.budget <= cap:
        return inst
    return DiscoveryInstance(inst.graph, inst.kind, inst.start, cap)


def split_partition(g: Graph) -> SplitPartition | None:
    """Split recognition via the degree-sequence characterization.

    Returns a partition in repartitioned form (every clique vertex has a
    neighbor on the independent side), or None if g is not split.  The
    candidate partition is verified against the invariants before return.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index(v)))
    degs = [g.degree(v) for v in order]
    m_idx = max(i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:m_idx]) != m_idx * (m_idx - 1) + sum(degs[m_idx:]):
        return None
    clique = order[:m_idx]
    indep = order[m_idx:]
    clique_set = set(clique)
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            if not g.has_edge(u, v):
                return None
    for u, v in g.edges:
        if u not in clique_set and v not in clique_set:
            return None
    # repartition: at most one clique vertex can lack an I-neighbor
    for u in sorted(clique, key=g.index):
        if all(w in clique_set for w in g.neighbors(u)):
            clique_set.remove(u)
            indep = indep + [u]
            break
    return SplitPartition(frozenset(clique_set), frozenset(indep))


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum-cardinality search plus elimination-order verification."""
    if g.n == 0:
        return True
    weight = {v: 0 for v in g.vertices}
    visited: list[str] = []
    seen: set[str] = set()
    for _ in range(g.n):
        v = max(
            (u for u in g.vertices if u not in seen),
            key=lambda u: (weight[u], -g.index(u)),
        )
        visited.append(v)
        seen.add(v)
        for w in g.neighbors(v):
            if w not in seen:
                weight[w] += 1
    # eliminating in reverse visit order must be perfect
    elim_pos = {v: g.n - 1 - i for i, v in enumerate(visited)}
    for v in g.vertices:
        later = [w for w in g.neighbors(v) if elim_pos[w] > elim_pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: elim_pos[w])
        for w in later:
            if w != u and not g.has_edge(u, w):
                return False
    return True
