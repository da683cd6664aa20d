"""Minimum-cost assignment between tokens and target vertices or classes.

Thin contract layer over scipy's linear_sum_assignment.  Costs are
non-negative integers (graph distances); INF marks forbidden pairings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import linear_sum_assignment

INF = math.inf


class InfeasibleAssignmentError(ValueError):
    """Every assignment saturating the smaller side uses a forbidden pairing."""


@dataclass(frozen=True)
class CostMatrix:
    rows: int
    cols: int
    cost: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.cost) != self.rows or any(len(r) != self.cols for r in self.cost):
            raise ValueError("cost matrix shape mismatch")
        for row in self.cost:
            for c in row:
                if c != INF and (c < 0 or c != int(c)):
                    raise ValueError(f"costs must be non-negative integers or INF, got {c}")

    @staticmethod
    def from_rows(rows: list[list[float]]) -> "CostMatrix":
        if not rows or not rows[0]:
            raise ValueError("cost matrix must have at least one row and one column")
        return CostMatrix(len(rows), len(rows[0]), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Assignment:
    pairs: tuple[tuple[int, int], ...]
    total: int


def min_cost_assignment(c: CostMatrix) -> Assignment:
    """Assignment saturating every index of the smaller side at minimum total cost.

    Raises InfeasibleAssignmentError when no finite-cost saturating assignment
    exists.  Ties are resolved deterministically; pairs come back sorted by row.
    """
    if min(c.rows, c.cols) < 1:
        raise ValueError("cost matrix must be at least 1x1")
    try:
        row_ind, col_ind = linear_sum_assignment(c.cost)
    except ValueError:
        raise InfeasibleAssignmentError("no finite-cost saturating assignment") from None
    pairs = sorted(zip((int(r) for r in row_ind), (int(j) for j in col_ind)))
    total = 0
    for r, j in pairs:
        w = c.cost[r][j]
        if w == INF:
            raise InfeasibleAssignmentError("no finite-cost saturating assignment")
        total += int(w)
    return Assignment(tuple(pairs), total)
