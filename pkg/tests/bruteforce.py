"""Independent brute-force oracles for the test suite.

Everything here is written from the problem definitions with itertools-style
enumeration, deliberately not reusing the package's algorithms, so tests can
cross-check the two routes against each other.
"""

from itertools import combinations

from tokenslide.graph import Graph


def bf_has_cycle(g: Graph, removed: frozenset = frozenset()) -> bool:
    """Cycle detection by edge counting per component (forest bound)."""
    keep = [v for v in g.vertices if v not in removed]
    keep_set = set(keep)
    edges = [(u, v) for u, v in g.edges if u in keep_set and v in keep_set]
    comp = {v: v for v in keep}

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    components = len(keep)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp[ru] = rv
            components -= 1
    return len(edges) > len(keep) - components


def bf_vertex_sets_forming_cycle(g: Graph, vertices) -> bool:
    """True iff the given vertex set induces a (single, spanning) cycle."""
    vs = list(vertices)
    if len(vs) < 3:
        return False
    sub = {v: [w for w in g.neighbors(v) if w in set(vs)] for v in vs}
    if any(len(nb) != 2 for nb in sub.values()):
        return False
    seen = {vs[0]}
    frontier = [vs[0]]
    while frontier:
        nxt = []
        for u in frontier:
            for w in sub[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == len(vs)


def bf_is_fvs_by_cycle_search(g: Graph, s) -> bool:
    """Exhaustive: no subset of the remaining vertices forms a cycle."""
    remaining = [v for v in g.vertices if v not in set(s)]
    for r in range(3, len(remaining) + 1):
        for cand in combinations(remaining, r):
            if bf_vertex_sets_forming_cycle(g, cand):
                return False
    return True


def bf_check(g: Graph, kind: str, s) -> bool:
    chosen = set(s)
    if kind == "VC":
        return all(u in chosen or v in chosen for u, v in g.edges)
    if kind == "IS":
        return all(not (u in chosen and v in chosen) for u, v in g.edges)
    if kind == "DS":
        return all(
            v in chosen or any(w in chosen for w in g.neighbors(v)) for v in g.vertices
        )
    if kind == "FVS":
        return not bf_has_cycle(g, frozenset(chosen))
    raise ValueError(kind)


def bf_solution_exists(g: Graph, kind: str, k: int) -> bool:
    """Size-k solution existence by subset enumeration (size >= k for IS)."""
    for cand in combinations(g.vertices, k):
        if bf_check(g, kind, cand):
            return True
    return False


def bf_minimal_fvs(g: Graph, max_size: int | None = None) -> set[frozenset]:
    """All inclusion-minimal feedback vertex sets (optionally up to a size)."""
    limit = g.n if max_size is None else max_size
    found: set[frozenset] = set()
    for r in range(0, limit + 1):
        for cand in combinations(g.vertices, r):
            cs = frozenset(cand)
            if any(prev <= cs for prev in found):
                continue
            if bf_check(g, "FVS", cs):
                found.add(cs)
    return found


def bf_minimal_vertex_covers(g: Graph) -> set[frozenset]:
    found: set[frozenset] = set()
    for r in range(0, g.n + 1):
        for cand in combinations(g.vertices, r):
            cs = frozenset(cand)
            if any(prev <= cs for prev in found):
                continue
            if bf_check(g, "VC", cs):
                found.add(cs)
    return found


def bf_maximal_independent_sets(g: Graph) -> set[frozenset]:
    independents = [
        frozenset(cand)
        for r in range(0, g.n + 1)
        for cand in combinations(g.vertices, r)
        if bf_check(g, "IS", cand)
    ]
    pool = set(independents)
    return {s for s in pool if not any(s < t for t in pool)}


def bf_split_partitions(g: Graph):
    """All (clique, independent) 2-colorings found by brute force."""
    out = []
    for r in range(0, g.n + 1):
        for cand in combinations(g.vertices, r):
            q = set(cand)
            rest = [v for v in g.vertices if v not in q]
            if all(g.has_edge(u, v) for u, v in combinations(sorted(q), 2)) and all(
                not g.has_edge(u, v) for u, v in combinations(rest, 2)
            ):
                out.append((frozenset(q), frozenset(rest)))
    return out


def bf_min_assignment(cost) -> float:
    """Minimum total over all injections of the smaller side into the larger."""
    from itertools import permutations

    rows, cols = len(cost), len(cost[0])
    best = float("inf")
    if rows <= cols:
        for perm in permutations(range(cols), rows):
            best = min(best, sum(cost[r][perm[r]] for r in range(rows)))
    else:
        for perm in permutations(range(rows), cols):
            best = min(best, sum(cost[perm[c]][c] for c in range(cols)))
    return best


def bf_is_chordal(g: Graph) -> bool:
    """Chordal iff no vertex subset of size >= 4 induces a chordless cycle."""
    for r in range(4, g.n + 1):
        for cand in combinations(g.vertices, r):
            if bf_vertex_sets_forming_cycle(g, cand):
                return False
    return True
