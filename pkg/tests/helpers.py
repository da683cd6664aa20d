"""Seeded graph generators and expression builders shared by the tests."""

import random
from itertools import combinations

from tokenslide.graph import Graph


def path_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return Graph(names, edges)


def complete_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, list(combinations(names, 2)))


def star_graph(leaves: int) -> Graph:
    names = ["c"] + [f"l{i}" for i in range(1, leaves + 1)]
    return Graph(names, [("c", leaf) for leaf in names[1:]])


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random spanning tree plus random extra edges; always connected."""
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add((names[j], names[i]))
    for i, j in combinations(range(n), 2):
        if (names[i], names[j]) not in edges and rng.random() < extra_edge_prob:
            edges.add((names[i], names[j]))
    return Graph(names, sorted(edges))


def random_split_graph(
    rng: random.Random, clique_size: int, indep_size: int, edge_prob: float = 0.5
) -> Graph:
    """Random connected split graph: clique q1.., independent i1.., random
    cross edges, patched to be connected."""
    clique = [f"q{i}" for i in range(1, clique_size + 1)]
    indep = [f"i{i}" for i in range(1, indep_size + 1)]
    edges = set(combinations(clique, 2))
    for w in indep:
        for q in clique:
            if rng.random() < edge_prob:
                edges.add((q, w))
    if clique:
        for w in indep:
            if not any((q, w) in edges for q in clique):
                edges.add((rng.choice(clique), w))
    g = Graph(clique + indep, sorted(edges))
    return g


def random_tree(rng: random.Random, n: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(names[rng.randrange(i)], names[i]) for i in range(1, n)]
    return Graph(names, edges)


def random_configuration(rng: random.Random, g: Graph, k: int) -> frozenset:
    return frozenset(rng.sample(list(g.vertices), k))


# ---------------------------------------------------------------------------
# expression builders (text form); all outputs are irredundant by construction


def path_expression(n: int, prefix: str = "v") -> str:
    """Width-3 path: grow at the head, retiring the old head into label 1."""
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    expr = f"(i {names[0]} 1)"
    if n == 1:
        return expr
    expr = f"(j 1 2 (u {expr} (i {names[1]} 2)))"
    for name in names[2:]:
        expr = f"(r 3 2 (r 2 1 (j 2 3 (u {expr} (i {name} 3)))))"
    return expr


def clique_expression(n: int, prefix: str = "v") -> str:
    """Width-2 complete graph: join each new vertex to everything, then merge."""
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    expr = f"(i {names[0]} 1)"
    for name in names[1:]:
        expr = f"(r 2 1 (j 1 2 (u {expr} (i {name} 2))))"
    return expr


def star_expression(leaves: int) -> str:
    expr = "(i l1 2)"
    for i in range(2, leaves + 1):
        expr = f"(u {expr} (i l{i} 2))"
    return f"(j 1 2 (u (i c 1) {expr}))"


def complete_bipartite_expression(a: int, b: int) -> str:
    left = "(i a1 1)"
    for i in range(2, a + 1):
        left = f"(u {left} (i a{i} 1))"
    right = "(i b1 2)"
    for i in range(2, b + 1):
        right = f"(u {right} (i b{i} 2))"
    return f"(j 1 2 (u {left} {right}))"


def complete_bipartite_graph(a: int, b: int) -> Graph:
    names = [f"a{i}" for i in range(1, a + 1)] + [f"b{i}" for i in range(1, b + 1)]
    edges = [
        (f"a{i}", f"b{j}") for i in range(1, a + 1) for j in range(1, b + 1)
    ]
    return Graph(names, edges)


def c4_expression() -> str:
    # C4 as K_{2,2}: v1-v2-v3-v4-v1 with parts {v1, v3} and {v2, v4}
    return "(j 1 2 (u (u (i v1 1) (i v3 1)) (u (i v2 2) (i v4 2))))"


def c4_graph() -> Graph:
    return Graph(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    )


def threshold_expression_and_graph(rng: random.Random, n: int) -> tuple[str, Graph]:
    """Random threshold graph: repeatedly add an isolated or universal vertex."""
    names = [f"v{i}" for i in range(1, n + 1)]
    expr = f"(i {names[0]} 1)"
    edges: list[tuple[str, str]] = []
    present = [names[0]]
    for name in names[1:]:
        # last vertex is always universal so the graph comes out connected
        if name != names[-1] and rng.random() < 0.5:
            expr = f"(u {expr} (i {name} 1))"
        else:
            edges.extend((old, name) for old in present)
            expr = f"(r 2 1 (j 1 2 (u {expr} (i {name} 2))))"
        present.append(name)
    return expr, Graph(names, edges)


def cw_corpus(seed: int = 0) -> list[tuple[str, str, Graph]]:
    """(name, expression text, graph) pairs with n <= 8 and width <= 3."""
    rng = random.Random(seed)
    corpus: list[tuple[str, str, Graph]] = []
    for n in range(2, 9):
        corpus.append((f"P{n}", path_expression(n), path_graph(n)))
    for n in range(3, 7):
        corpus.append((f"K{n}", clique_expression(n), complete_graph(n)))
    for leaves in range(2, 8):
        corpus.append((f"star{leaves}", star_expression(leaves), star_graph(leaves)))
    corpus.append(("C3", clique_expression(3), cycle_graph(3)))
    corpus.append(("C4", c4_expression(), c4_graph()))
    for a, b in ((2, 3), (3, 3), (2, 4), (1, 5)):
        corpus.append(
            (f"K{a},{b}", complete_bipartite_expression(a, b), complete_bipartite_graph(a, b))
        )
    for i in range(8):
        expr, g = threshold_expression_and_graph(rng, rng.randint(4, 8))
        corpus.append((f"threshold{i}", expr, g))
    return corpus
