"""Exhaustive breadth-first search over the token configuration space.

Ground truth for every solver: states are k-subsets of the vertex set,
neighbors are single token slides to an unoccupied adjacent vertex.  The
search is exact; it refuses oversized state spaces instead of degrading.
"""

from __future__ import annotations

from collections import deque
from math import comb

from .graph import DiscoveryInstance, Move, check_solution, is_connected

DEFAULT_STATE_CAP = 10_000_000


class StateSpaceTooLargeError(RuntimeError):
    """C(n, k) exceeds the configured cap; the oracle refuses to search."""


def discover_min_moves(
    inst: DiscoveryInstance, max_states: int = DEFAULT_STATE_CAP
) -> tuple[int, list[Move]] | None:
    """Minimum number of slides to any feasible configuration, with a witness.

    Returns (steps, moves) with steps <= budget, or None if no feasible
    configuration is reachable within the budget.
    """
    g = inst.graph
    if not is_connected(g):
        raise ValueError("oracle requires a connected graph")
    n, k = g.n, inst.k
    space = comb(n, k)
    if space > max_states:
        raise StateSpaceTooLargeError(
            f"state space C({n},{k}) = {space} exceeds cap {max_states}"
        )

    idx = {v: i for i, v in enumerate(g.vertices)}
    names = g.vertices
    adj = {i: tuple(idx[w] for w in g.neighbors(v)) for v, i in idx.items()}

    def feasible(state: tuple[int, ...]) -> bool:
        return check_solution(g, inst.kind, (names[i] for i in state))

    start = tuple(sorted(idx[v] for v in inst.start))
    if feasible(start):
        return 0, []

    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Move]] = {}
    seen = {start}
    queue: deque[tuple[tuple[int, ...], int]] = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth >= inst.budget:
            continue
        occupied = set(state)
        for x in state:
            for y in adj[x]:
                if y in occupied:
                    continue
                nxt = tuple(sorted(occupied - {x} | {y}))
                if nxt in seen:
                    continue
                seen.add(nxt)
                parent[nxt] = (state, Move(names[x], names[y]))
                if feasible(nxt):
                    moves = []
                    cur = nxt
                    while cur != start:
                        cur, mv = parent[cur]
                        moves.append(mv)
                    moves.reverse()
                    return depth + 1, moves
                queue.append((nxt, depth + 1))
    return None


def decide(inst: DiscoveryInstance, max_states: int = DEFAULT_STATE_CAP) -> bool:
    return discover_min_moves(inst, max_states) is not None
