"""Constructive colourings and predicted spans for stars and complete
k-partite graphs, plus an independent L(p,1) reference solver.

The star construction roots the centre at colour 0, spends the colours
missing from [0, r] on leaves first, then continues above r. The k-partite
construction lays parts out in colour blocks separated by gaps of r+1 so
every cross-part difference clears the forbidden set.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .checker import missing_colours, sigma
from .core import Colouring, Graph, TSet
from .solver import Budget, BudgetExceededError


class PredictionMode(str, Enum):
    EXACT = "exact"
    STRICT_UPPER_BOUND = "strict_upper_bound"


@dataclass(frozen=True)
class StarPrediction:
    """Predicted star span: an exact value when sigma < n, otherwise a bound
    the true span stays strictly below."""

    mode: PredictionMode
    value: int


def star_span_predicted(n: int, t: TSet) -> StarPrediction:
    """Predicted span of the star with n leaves.

    sigma < n: exactly n - sigma + r. sigma >= n: strictly below r.
    """
    if n < 1:
        raise ValueError(f"leaf count must be >= 1, got {n}")
    sig = sigma(t)
    if sig < n:
        return StarPrediction(PredictionMode.EXACT, n - sig + t.r)
    return StarPrediction(PredictionMode.STRICT_UPPER_BOUND, t.r)


def star_colouring(n: int, t: TSet) -> Colouring:
    """Colouring of the star with n leaves: centre 0 (vertex 0), leaves 1..n.

    Centre takes 0; the first min(sigma, n) leaves take the missing colours
    ascending; any remaining leaves take r+1, r+2, ... The highest colour is
    n - sigma + r when sigma < n, and the n-th missing colour when sigma >= n
    (an upper-bound witness in that regime, not an optimum).
    """
    if n < 1:
        raise ValueError(f"leaf count must be >= 1, got {n}")
    miss = missing_colours(t)
    leaf_cols = miss[:n]
    leaf_cols += [t.r + i for i in range(1, n - len(leaf_cols) + 1)]
    return Colouring([0] + leaf_cols)


def _check_sizes(sizes: tuple[int, ...]) -> None:
    if len(sizes) < 1:
        raise ValueError("at least one part required")
    for s in sizes:
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise ValueError(f"part sizes must be positive integers, got {s!r}")


def kpartite_upper_bound(sizes: tuple[int, ...], t: TSet) -> int:
    """Span bound for the complete k-partite graph: r*k + sum(sizes) - 1.

    Valid for k = 1 too (edgeless graph), where it overshoots badly; the
    construction below requires k >= 2.
    """
    sizes = tuple(sizes)
    _check_sizes(sizes)
    return t.r * len(sizes) + sum(sizes) - 1


def kpartite_colouring(sizes: tuple[int, ...], t: TSet) -> Colouring:
    """Block colouring of the complete k-partite graph with parts in
    consecutive id blocks (part i holds ids sum(sizes[:i])..+sizes[i]-1).

    The first vertex of part 0 takes colour 0; parts 1..k-1 then take
    consecutive colour blocks, each starting r+1 above the highest colour
    used; the rest of part 0 takes the final block. Cross-part differences
    are therefore > r, and within-part colours are distinct. The highest
    colour never exceeds kpartite_upper_bound(sizes, t).
    """
    sizes = tuple(sizes)
    _check_sizes(sizes)
    if len(sizes) < 2:
        raise ValueError("construction needs at least two parts")
    r = t.r
    n = sum(sizes)
    cols = [0] * n
    top = 0
    offset = sizes[0]
    for size in sizes[1:]:
        start = top + r + 1
        for i in range(size):
            cols[offset + i] = start + i
        top = start + size - 1
        offset += size
    if sizes[0] > 1:
        start = top + r + 1
        for i in range(sizes[0] - 1):
            cols[1 + i] = start + i
    return Colouring(cols)


def lpq_reference_span(g: Graph, p: int, budget: Budget | None = None) -> int:
    """L(p,1) span of g: adjacent colours differ by >= p, distance-two
    colours are distinct.

    Self-contained reference search, independent of the main solver: its own
    adjacency and distance-two computation (common-neighbour test), vertices
    in id order, colours ascending, ceiling deepened from 0. Exists so that
    spans under T = {0..p-1} can be cross-checked against a second route.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    budget = budget or Budget()
    start = time.monotonic()
    deadline = start + budget.max_seconds
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    nbset = [set(a) for a in adj]
    two: list[list[int]] = [
        [v for v in range(n)
         if v != u and v not in nbset[u] and nbset[u] & nbset[v]]
        for u in range(n)
    ]
    attempts = 0

    def search(limit: int) -> bool:
        nonlocal attempts
        assigned: list[int | None] = [None] * n

        def place(v: int) -> bool:
            nonlocal attempts
            if v == n:
                return True
            for c in range(limit + 1):
                attempts += 1
                if attempts > budget.max_nodes or (
                        (attempts & 1023) == 0 and time.monotonic() > deadline):
                    raise BudgetExceededError(
                        limit, (n - 1) * p, attempts, time.monotonic() - start)
                if any(assigned[u] is not None and abs(c - assigned[u]) < p
                       for u in adj[v]):
                    continue
                if any(assigned[u] == c for u in two[v]):
                    continue
                assigned[v] = c
                if place(v + 1):
                    return True
                assigned[v] = None
            return False

        return place(0)

    for limit in range((n - 1) * p + 1):
        if search(limit):
            return limit
    raise AssertionError("colours 0, p, 2p, ... are always feasible")
