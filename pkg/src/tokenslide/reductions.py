"""Instance generators: hardness-reduction constructions used as test corpora.

Generated vertex names are structured (q0..., v3^2, e_a_b, s1^1) so tests can
address gadget parts symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    DiscoveryInstance,
    Graph,
    Move,
    diameter,
    is_chordal,
    is_connected,
)


@dataclass(frozen=True)
class X3CInstance:
    """Exact cover by 3-sets: a 3n-element universe and a family of triples."""

    universe: tuple[int, ...]
    family: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.universe) % 3 != 0:
            raise ValueError("universe size must be divisible by 3")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe elements must be distinct")
        ground = set(self.universe)
        for triple in self.family:
            if len(triple) != 3 or len(set(triple)) != 3:
                raise ValueError(f"family members need exactly 3 distinct elements: {triple}")
            if not set(triple) <= ground:
                raise ValueError(f"family member uses unknown elements: {triple}")


def x3c_to_vcd(x: X3CInstance) -> DiscoveryInstance:
    """Chordal vertex-cover discovery instance: a clique q0..q3n, one 5-vertex
    star per triple (root v_i, four leaves), star vertices wired to the clique
    vertices of the triple's elements.  Tokens start on all leaves, budget 4n.
    """
    n3 = len(x.universe)
    n = n3 // 3
    elem_vertex = {e: f"q{i}" for i, e in enumerate(x.universe, start=1)}
    clique = [f"q{i}" for i in range(n3 + 1)]
    vertices = list(clique)
    edges = [(clique[i], clique[j]) for i in range(len(clique)) for j in range(i + 1, len(clique))]
    tokens = []
    for i, triple in enumerate(x.family, start=1):
        root = f"v{i}"
        leaves = [f"v{i}^{j}" for j in range(1, 5)]
        vertices.append(root)
        vertices.extend(leaves)
        tokens.extend(leaves)
        for leaf in leaves:
            edges.append((root, leaf))
        for member in (root, *leaves):
            for e in sorted(triple):
                edges.append((member, elem_vertex[e]))
    g = Graph(vertices, edges)
    if not is_connected(g) or not is_chordal(g):
        raise AssertionError("construction must be connected and chordal")
    return DiscoveryInstance(g, "VC", frozenset(tokens), 4 * n)


def x3c_witness_to_moves(x: X3CInstance, cover: list[int]) -> list[Move]:
    """Witness for a yes-instance: per selected triple, slide three leaves onto
    the clique vertices of its elements and the fourth leaf onto the root."""
    n = len(x.universe) // 3
    chosen = list(cover)
    if len(chosen) != n or len(set(chosen)) != n:
        raise ValueError(f"cover must select exactly {n} distinct sets")
    covered: set[int] = set()
    for i in chosen:
        if not 1 <= i <= len(x.family):
            raise ValueError(f"set index out of range: {i}")
        triple = set(x.family[i - 1])
        if covered & triple:
            raise ValueError("cover is not exact: sets overlap")
        covered |= triple
    if covered != set(x.universe):
        raise ValueError("cover is not exact: universe not covered")
    elem_vertex = {e: f"q{i}" for i, e in enumerate(x.universe, start=1)}
    moves = []
    for i in sorted(chosen):
        elems = sorted(x.family[i - 1])
        for j, e in enumerate(elems, start=2):
            moves.append(Move(f"v{i}^{j}", elem_vertex[e]))
        moves.append(Move(f"v{i}^1", f"v{i}"))
    return moves


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def vcd_to_fvsd(inst: DiscoveryInstance) -> DiscoveryInstance:
    """Replace every edge uv with a triangle u, v, e_uv; tokens and budget stay."""
    if inst.kind != "VC":
        raise ValueError("input instance must be a VC instance")
    g = inst.graph
    taken = set(g.vertices)
    vertices = list(g.vertices)
    edges = list(g.edges)
    for u, v in g.edges:
        w = _fresh(f"e_{u}_{v}", taken)
        vertices.append(w)
        edges.append((u, w))
        edges.append((v, w))
    return DiscoveryInstance(Graph(vertices, edges), "FVS", inst.start, inst.budget)


def diameterize_vc(g: Graph, k: int) -> tuple[Graph, int]:
    """Add a universal vertex; a size-k cover exists iff a size-(k+1) one does,
    and the result has diameter at most 2."""
    taken = set(g.vertices)
    hub = _fresh("u", taken)
    vertices = list(g.vertices) + [hub]
    edges = list(g.edges) + [(v, hub) for v in g.vertices]
    return Graph(vertices, edges), k + 1


def diameterize_fvs(g: Graph, k: int) -> tuple[Graph, int]:
    """Add an apex adjacent to everything plus k+2 pendant triangles through
    it; any small feedback vertex set of the result must take the apex."""
    taken = set(g.vertices)
    apex = _fresh("s", taken)
    vertices = list(g.vertices) + [apex]
    edges = list(g.edges) + [(v, apex) for v in g.vertices]
    for i in range(1, k + 3):
        a = _fresh(f"s{i}^1", taken)
        b = _fresh(f"s{i}^2", taken)
        vertices.extend((a, b))
        edges.extend(((apex, a), (apex, b), (a, b)))
    return Graph(vertices, edges), k + 1


def search_to_discovery(
    g: Graph, kind: str, k: int, placement: frozenset[str]
) -> DiscoveryInstance:
    """Budget k*diam(G) makes discovery equivalent to the plain search problem."""
    if len(placement) != k:
        raise ValueError(f"placement has {len(placement)} vertices, expected {k}")
    return DiscoveryInstance(g, kind, frozenset(placement), k * diameter(g))
