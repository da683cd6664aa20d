"""Text formats: graphs, discovery instances, move sequences, exact-cover inputs.

Graph format:        `graph <n> <m>`, then n `v <name>` lines, then m `e <a> <b>` lines.
Instance format:     a graph block followed by `problem VC|IS|DS|FVS`,
                     `tokens <name> ...`, `budget <int>`.
Move format:         one `move <from> <to>` per line.
Exact-cover format:  `x3c <3n> <m>`, then m lines of 3 element indices (1-based).

All formats are whitespace-separated; `#` starts a comment.
"""

from __future__ import annotations

from .graph import KINDS, DiscoveryInstance, Graph, Move
from .reductions import X3CInstance


class FormatError(ValueError):
    """Malformed input text."""


def _tokens(text: str) -> list[str]:
    out: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        out.extend(body.split())
    return out


class _Reader:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.pos = 0

    def next(self, what: str) -> str:
        if self.pos >= len(self.toks):
            raise FormatError(f"unexpected end of input, expected {what}")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def next_int(self, what: str) -> int:
        tok = self.next(what)
        try:
            return int(tok)
        except ValueError:
            raise FormatError(f"expected integer for {what}, got {tok!r}") from None

    def expect(self, keyword: str):
        tok = self.next(f"keyword {keyword!r}")
        if tok != keyword:
            raise FormatError(f"expected {keyword!r}, got {tok!r}")

    def done(self) -> bool:
        return self.pos >= len(self.toks)


def _read_graph(r: _Reader) -> Graph:
    r.expect("graph")
    n = r.next_int("vertex count")
    m = r.next_int("edge count")
    vertices = []
    for _ in range(n):
        r.expect("v")
        vertices.append(r.next("vertex name"))
    edges = []
    for _ in range(m):
        r.expect("e")
        edges.append((r.next("edge endpoint"), r.next("edge endpoint")))
    return Graph(vertices, edges)


def parse_graph(text: str) -> Graph:
    r = _Reader(text)
    g = _read_graph(r)
    if not r.done():
        raise FormatError(f"trailing input: {r.toks[r.pos]!r}")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines += [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> DiscoveryInstance:
    r = _Reader(text)
    g = _read_graph(r)
    r.expect("problem")
    kind = r.next("problem kind")
    if kind not in KINDS:
        raise FormatError(f"unknown problem kind: {kind!r}")
    r.expect("tokens")
    tokens = []
    while not r.done() and r.toks[r.pos] != "budget":
        tokens.append(r.next("token vertex"))
    r.expect("budget")
    budget = r.next_int("budget")
    if not r.done():
        raise FormatError(f"trailing input: {r.toks[r.pos]!r}")
    try:
        return DiscoveryInstance(g, kind, frozenset(tokens), budget)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_instance(inst: DiscoveryInstance) -> str:
    tokens = " ".join(sorted(inst.start, key=inst.graph.index))
    return (
        format_graph(inst.graph)
        + f"problem {inst.kind}\n"
        + f"tokens {tokens}\n"
        + f"budget {inst.budget}\n"
    )


def parse_moves(text: str) -> list[Move]:
    r = _Reader(text)
    moves = []
    while not r.done():
        r.expect("move")
        src = r.next("move source")
        dst = r.next("move destination")
        moves.append(Move(src, dst))
    return moves


def format_moves(moves: list[Move]) -> str:
    return "".join(f"move {m.src} {m.dst}\n" for m in moves)


def parse_x3c(text: str) -> X3CInstance:
    r = _Reader(text)
    r.expect("x3c")
    size = r.next_int("universe size")
    count = r.next_int("set count")
    family = []
    for _ in range(count):
        family.append(tuple(r.next_int("element index") for _ in range(3)))
    if not r.done():
        raise FormatError(f"trailing input: {r.toks[r.pos]!r}")
    try:
        return X3CInstance(tuple(range(1, size + 1)), tuple(family))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_x3c(x: X3CInstance) -> str:
    lines = [f"x3c {len(x.universe)} {len(x.family)}"]
    lines += [" ".join(str(e) for e in triple) for triple in x.family]
    return "\n".join(lines) + "\n"
