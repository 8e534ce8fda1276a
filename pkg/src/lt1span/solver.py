"""Span computation: exact backtracking search, brute-force oracle, greedy bound.

The span of a graph under a forbidden set T is the smallest s such that a
valid colouring exists using only colours {0..s}. Feasibility is monotone in
s, so the exact solver deepens s from 0 (default) or binary-searches below a
greedy upper bound. The brute-force oracle shares no search code with the
exact solver so the two can cross-check each other.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from .core import Colouring, Graph, SpanResult, TSet, adjacency, distance_two_pairs

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_SECONDS_BUDGET = 60.0

GREEDY_ORDERS = ("degree_desc", "id_asc", "random")


@dataclass(frozen=True)
class Budget:
    """Resource ceiling for a search: node count and wall-clock seconds."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    max_seconds: float = DEFAULT_SECONDS_BUDGET


class BudgetExceededError(Exception):
    """Search hit its budget before resolving the span.

    Carries the best-known bracket: every s < lower_bound is refuted, and a
    valid colouring with span upper_bound is known to exist.
    """

    def __init__(self, lower_bound: int, upper_bound: int,
                 nodes_explored: int, elapsed: float) -> None:
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed
        super().__init__(
            f"budget exhausted after {nodes_explored} nodes, {elapsed:.2f}s; "
            f"span lies in [{lower_bound}, {upper_bound}]"
        )


class BruteForceGuardError(ValueError):
    """Brute-force instance larger than the guard allows without force=True."""


class MaxSpanExceededError(Exception):
    """No valid colouring exists within the requested span ceiling."""

    def __init__(self, max_span: int, nodes_explored: int, elapsed: float) -> None:
        self.max_span = max_span
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed
        super().__init__(f"no valid colouring within span {max_span}")


class _Stop(Exception):
    """Internal: budget tripped inside the search."""


class _Tracker:
    """Counts colour-placement attempts and enforces a budget."""

    __slots__ = ("nodes", "max_nodes", "start", "deadline")

    def __init__(self, budget: Budget) -> None:
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.start = time.monotonic()
        self.deadline = self.start + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Stop
        # clock checked every 1024 attempts to keep syscall cost negligible
        if (self.nodes & 1023) == 0 and time.monotonic() > self.deadline:
            raise _Stop

    def elapsed(self) -> float:
        return time.monotonic() - self.start


_UNLIMITED = Budget(max_nodes=2**63, max_seconds=float("inf"))


def trivial_upper_bound(g: Graph, t: TSet) -> int:
    """Span that always admits a colouring: colours 0, r+1, 2(r+1), ...

    Any two of those differ by a positive multiple of r+1, which exceeds
    every element of T, and all are distinct.
    """
    return (g.n - 1) * (t.r + 1)


def _search(g: Graph, t: TSet, s: int, tracker: _Tracker) -> tuple[int, ...] | None:
    """First valid assignment with colours <= s, or None.

    Vertices in descending-degree order (ties by smallest id), colours tried
    ascending; a partial assignment is abandoned as soon as an already-coloured
    neighbour hits a forbidden difference or an already-coloured distance-two
    vertex shares the colour.
    """
    n = g.n
    adj = adjacency(g)
    two: list[set[int]] = [set() for _ in range(n)]
    for u, v in distance_two_pairs(g):
        two[u].add(v)
        two[v].add(u)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    prev_nb = [[pos[w] for w in adj[v] if pos[w] < pos[v]] for v in order]
    prev_two = [[pos[w] for w in two[v] if pos[w] < pos[v]] for v in order]
    forbidden = frozenset(t.elements)
    cols = [0] * n
    tick = tracker.tick

    def extend(i: int) -> bool:
        if i == n:
            return True
        nbs = prev_nb[i]
        d2s = prev_two[i]
        for colour in range(s + 1):
            tick()
            ok = True
            for j in nbs:
                if abs(colour - cols[j]) in forbidden:
                    ok = False
                    break
            if ok:
                for j in d2s:
                    if cols[j] == colour:
                        ok = False
                        break
            if ok:
                cols[i] = colour
                if extend(i + 1):
                    return True
        return False

    if not extend(0):
        return None
    out = [0] * n
    for i, v in enumerate(order):
        out[v] = cols[i]
    return tuple(out)


def feasible_with_span(g: Graph, t: TSet, s: int) -> Colouring | None:
    """A valid colouring using only colours {0..s}, or None if none exists.

    Deterministic: same inputs return the same colouring.
    """
    if s < 0:
        raise ValueError(f"span bound must be non-negative, got {s}")
    got = _search(g, t, s, _Tracker(_UNLIMITED))
    return None if got is None else Colouring(got)


def exact_span(g: Graph, t: TSet, budget: Budget | None = None,
               strategy: str = "iterative") -> SpanResult:
    """Exact span: smallest s with a feasible colouring, plus its witness.

    strategy "iterative" deepens s = 0, 1, 2, ...; "binary" bisects between 0
    and a greedy upper bound. Both return the same span; witness and
    nodes_explored are deterministic per strategy. Raises BudgetExceededError
    with the best-known bracket when the budget runs out.
    """
    if strategy not in ("iterative", "binary"):
        raise ValueError(f"unknown strategy {strategy!r}")
    budget = budget or Budget()
    tracker = _Tracker(budget)
    ceiling = trivial_upper_bound(g, t)

    if strategy == "iterative":
        lo = 0
        try:
            for s in range(ceiling + 1):
                lo = s
                got = _search(g, t, s, tracker)
                if got is not None:
                    return SpanResult(s, Colouring(got), "exact",
                                      tracker.nodes, tracker.elapsed())
            raise AssertionError("trivial upper bound must be feasible")
        except _Stop:
            upper = greedy_upper_bound(g, t).span
            raise BudgetExceededError(lo, min(upper, ceiling),
                                      tracker.nodes, tracker.elapsed()) from None

    seed_result = greedy_upper_bound(g, t)
    lo, hi = 0, seed_result.span
    best: tuple[int, ...] = tuple(seed_result.witness.colours)
    try:
        while lo < hi:
            mid = (lo + hi) // 2
            got = _search(g, t, mid, tracker)
            if got is not None:
                best = got
                hi = mid
            else:
                lo = mid + 1
    except _Stop:
        raise BudgetExceededError(lo, hi, tracker.nodes,
                                  tracker.elapsed()) from None
    return SpanResult(lo, Colouring(best), "exact", tracker.nodes, tracker.elapsed())


def brute_force_span(g: Graph, t: TSet, max_span: int = 12, *,
                     force: bool = False) -> SpanResult:
    """Independent oracle: plain nested enumeration of every assignment.

    For s = 0, 1, ..., max_span, enumerates all (s+1)^n colour vectors and
    returns at the first valid one. Shares no search code with exact_span.
    Guarded to n <= 8 and max_span <= 12 unless force=True.
    """
    if not force and (g.n > 8 or max_span > 12):
        raise BruteForceGuardError(
            f"brute force refused for n={g.n}, max_span={max_span} "
            f"(guard: n <= 8 and max_span <= 12; pass force=True to override)"
        )
    if max_span < 0:
        raise ValueError(f"max_span must be non-negative, got {max_span}")
    start = time.monotonic()
    n = g.n
    edges = sorted(g.edges)
    d2 = sorted(distance_two_pairs(g))
    forbidden = frozenset(t.elements)
    nodes = 0
    for s in range(max_span + 1):
        for assignment in product(range(s + 1), repeat=n):
            nodes += 1
            ok = True
            for u, v in edges:
                if abs(assignment[u] - assignment[v]) in forbidden:
                    ok = False
                    break
            if ok:
                for u, v in d2:
                    if assignment[u] == assignment[v]:
                        ok = False
                        break
            if ok:
                return SpanResult(s, Colouring(assignment), "brute_force",
                                  nodes, time.monotonic() - start)
    raise MaxSpanExceededError(max_span, nodes, time.monotonic() - start)


def greedy_upper_bound(g: Graph, t: TSet, order: str = "degree_desc",
                       seed: int | None = None) -> SpanResult:
    """Upper bound: each vertex takes the smallest consistent colour.

    order is one of "degree_desc" (descending degree, ties by id), "id_asc",
    or "random" (requires a seed). Always succeeds; the result's span bounds
    the exact span from above.
    """
    if order not in GREEDY_ORDERS:
        raise ValueError(f"unknown order {order!r}; expected one of {GREEDY_ORDERS}")
    n = g.n
    adj = adjacency(g)
    if order == "degree_desc":
        seq = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    elif order == "id_asc":
        seq = list(range(n))
    else:
        if seed is None:
            raise ValueError("order 'random' requires a seed")
        seq = list(range(n))
        random.Random(seed).shuffle(seq)
    two: list[set[int]] = [set() for _ in range(n)]
    for u, v in distance_two_pairs(g):
        two[u].add(v)
        two[v].add(u)
    forbidden = frozenset(t.elements)
    start = time.monotonic()
    nodes = 0
    cols: list[int | None] = [None] * n
    for v in seq:
        nb_cols = [cols[w] for w in adj[v] if cols[w] is not None]
        d2_cols = {cols[w] for w in two[v] if cols[w] is not None}
        colour = 0
        while True:
            nodes += 1
            if colour not in d2_cols and all(
                    abs(colour - x) not in forbidden for x in nb_cols):
                break
            colour += 1
        cols[v] = colour
    witness = Colouring(cols)  # type: ignore[arg-type]
    return SpanResult(max(witness.colours), witness, "greedy",
                      nodes, time.monotonic() - start)
