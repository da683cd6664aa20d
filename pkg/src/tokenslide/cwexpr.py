"""Parsing and evaluation of labeled-graph construction expressions.

An expression denotes a graph built from four operations on labeled vertices:

    (i <name> <label>)   introduce a vertex with a label in [w]
    (u <e1> <e2>)        disjoint union of two expressions
    (r <i> <j> <e>)      relabel every i into j (i != j)
    (j <i> <j> <e>)      add every missing edge between i-vertices and j-vertices

The expression width w is inferred as the largest label used.  An expression
is irredundant when no join re-adds an existing edge; the vertex-cover solver
requires irredundant input and rejects everything else with a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph


class ExpressionError(ValueError):
    """Syntax or structural error in an expression."""


@dataclass(frozen=True)
class Introduce:
    vertex: str
    label: int


@dataclass(frozen=True)
class UnionNode:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Relabel:
    old: int
    new: int
    child: "Node"


@dataclass(frozen=True)
class Join:
    a: int
    b: int
    child: "Node"


Node = Union[Introduce, UnionNode, Relabel, Join]


@dataclass(frozen=True)
class WExpression:
    root: Node
    width: int


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    label_of: dict[str, int] = field(compare=False)

    def label_set(self, label: int) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.label_of[v] == label)


def _lex(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse_int_label(tok: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ExpressionError(f"label must be an integer, got {tok!r}") from None
    if value < 1:
        raise ExpressionError(f"labels start at 1, got {value}")
    return value


def parse_expression(text: str) -> WExpression:
    """Parse and validate; raises ExpressionError on malformed input."""
    toks = _lex(text)
    pos = 0

    def need(what: str) -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ExpressionError(f"unexpected end of expression, expected {what}")
        tok = toks[pos]
        pos += 1
        return tok

    def parse_node() -> Node:
        open_tok = need("'('")
        if open_tok != "(":
            raise ExpressionError(f"expected '(', got {open_tok!r}")
        op = need("operation")
        if op == "i":
            name = need("vertex name")
            if name in "()":
                raise ExpressionError("missing vertex name")
            label = _parse_int_label(need("label"))
            node: Node = Introduce(name, label)
        elif op == "u":
            node = UnionNode(parse_node(), parse_node())
        elif op in ("r", "j"):
            a = _parse_int_label(need("label"))
            b = _parse_int_label(need("label"))
            if a == b:
                raise ExpressionError(f"'{op}' requires two distinct labels, got {a} twice")
            child = parse_node()
            node = Relabel(a, b, child) if op == "r" else Join(a, b, child)
        else:
            raise ExpressionError(f"unknown operation {op!r}")
        close = need("')'")
        if close != ")":
            raise ExpressionError(f"expected ')', got {close!r}")
        return node

    root = parse_node()
    if pos != len(toks):
        raise ExpressionError(f"trailing input after expression: {toks[pos]!r}")

    names: set[str] = set()
    width = 1

    def validate(node: Node):
        nonlocal width
        if isinstance(node, Introduce):
            if node.vertex in names:
                raise ExpressionError(f"duplicate vertex name {node.vertex!r}")
            names.add(node.vertex)
            width = max(width, node.label)
        elif isinstance(node, UnionNode):
            validate(node.left)
            validate(node.right)
        else:
            width = max(width, node.old if isinstance(node, Relabel) else node.a)
            width = max(width, node.new if isinstance(node, Relabel) else node.b)
            validate(node.child)

    validate(root)
    return WExpression(root, width)


def _postorder(root: Node) -> list[Node]:
    out: list[Node] = []
    stack: list[tuple[Node, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            out.append(node)
            continue
        stack.append((node, True))
        if isinstance(node, UnionNode):
            stack.append((node.right, False))
            stack.append((node.left, False))
        elif isinstance(node, (Relabel, Join)):
            stack.append((node.child, False))
    return out


def evaluate(expr: WExpression) -> tuple[LabeledGraph, dict[int, LabeledGraph]]:
    """Bottom-up evaluation; returns the root graph plus a per-node snapshot map.

    Snapshots are keyed by id(node) for the nodes of this expression tree.
    """
    snaps: dict[int, LabeledGraph] = {}
    for node in _postorder(expr.root):
        if isinstance(node, Introduce):
            lg = LabeledGraph(Graph([node.vertex], []), {node.vertex: node.label})
        elif isinstance(node, UnionNode):
            a, b = snaps[id(node.left)], snaps[id(node.right)]
            vertices = list(a.graph.vertices) + list(b.graph.vertices)
            edges = list(a.graph.edges) + list(b.graph.edges)
            labels = dict(a.label_of)
            labels.update(b.label_of)
            lg = LabeledGraph(Graph(vertices, edges), labels)
        elif isinstance(node, Relabel):
            child = snaps[id(node.child)]
            labels = {
                v: (node.new if lab == node.old else lab)
                for v, lab in child.label_of.items()
            }
            lg = LabeledGraph(child.graph, labels)
        else:  # Join
            child = snaps[id(node.child)]
            g = child.graph
            new_edges = [
                (u, v)
                for u in child.label_set(node.a)
                for v in child.label_set(node.b)
                if not g.has_edge(u, v)
            ]
            lg = LabeledGraph(
                Graph(g.vertices, list(g.edges) + new_edges), dict(child.label_of)
            )
        snaps[id(node)] = lg
    return snaps[id(expr.root)], snaps


@dataclass(frozen=True)
class JoinViolation:
    join: Join
    edge: tuple[str, str]

    def __str__(self):
        u, v = self.edge
        return f"join {self.join.a},{self.join.b} re-introduces edge {u}-{v}"


def check_irredundant(expr: WExpression) -> list[JoinViolation]:
    """Every edge must be introduced by exactly one join; violations name both."""
    violations: list[JoinViolation] = []
    _, snaps = evaluate(expr)
    for node in _postorder(expr.root):
        if not isinstance(node, Join):
            continue
        child = snaps[id(node.child)]
        for u in child.label_set(node.a):
            for v in child.label_set(node.b):
                if child.graph.has_edge(u, v):
                    violations.append(JoinViolation(node, (u, v)))
    return violations


def check_matches(expr: WExpression, g: Graph) -> bool:
    """True iff the expression denotes exactly g (same names, same edges)."""
    built, _ = evaluate(expr)
    return built.graph == g
