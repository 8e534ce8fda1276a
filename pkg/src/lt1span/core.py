"""Core types for L(t,1)-colouring of simple undirected graphs.

An L(t,1)-colouring assigns a non-negative integer colour to every vertex so
that the colour difference across any edge avoids a finite forbidden set T
(which always contains 0), and vertices at distance exactly two receive
distinct colours.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


@dataclass(frozen=True)
class TSet:
    """Forbidden difference set: distinct non-negative integers including 0.

    Stored ascending; r is the largest forbidden difference.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]) -> None:
        elems = tuple(elements)
        if not elems:
            raise ValueError("TSet must be non-empty")
        for x in elems:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"TSet elements must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"TSet elements must be non-negative, got {x}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("TSet elements must be strictly ascending")
        if elems[0] != 0:
            raise ValueError("TSet must contain 0")
        object.__setattr__(self, "elements", elems)

    @property
    def r(self) -> int:
        """Largest element of T."""
        return self.elements[-1]

    def __contains__(self, diff: int) -> bool:
        return diff in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as (min, max) pairs; loops are rejected, duplicate
    edges collapse. Hashable, so graphs can key caches.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)


@dataclass(frozen=True)
class Colouring:
    """Vertex colouring: colour of vertex v is colours[v], all non-negative."""

    colours: tuple[int, ...]

    def __init__(self, colours: Iterable[int]) -> None:
        cols = tuple(colours)
        for c in cols:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"colours must be non-negative integers, got {c!r}")
        object.__setattr__(self, "colours", cols)

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colours)


class ViolationKind(str, Enum):
    ADJACENT_DIFF_IN_T = "AdjacentDiffInT"
    DISTANCE_TWO_EQUAL = "DistanceTwoEqual"


@dataclass(frozen=True)
class Violation:
    """One broken rule: the pair (u, v) and the offending value.

    detail is the forbidden difference for an edge violation and the shared
    colour for a distance-two violation.
    """

    kind: ViolationKind
    u: int
    v: int
    detail: int


@dataclass(frozen=True)
class SpanResult:
    """Outcome of a span computation.

    span is the witness's highest colour; method is one of "exact",
    "brute_force", "greedy", "constructive". For "greedy" the span is an
    upper bound only, for the others the witness attains it. nodes_explored
    counts colour placements attempted; elapsed is wall seconds.
    """

    span: int
    witness: Colouring
    method: str
    nodes_explored: int
    elapsed: float


def adjacency(g: Graph) -> list[set[int]]:
    """Neighbour sets indexed by vertex. O(n + m)."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def neighbours(g: Graph, v: int) -> set[int]:
    """Vertices adjacent to v."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return {w for e in g.edges for w in e if v in e and w != v}


def distance_two_pairs(g: Graph) -> frozenset[tuple[int, int]]:
    """Unordered pairs at graph distance exactly two.

    Two-level breadth expansion from each vertex: neighbours of neighbours,
    minus direct neighbours and the vertex itself. Pairs are (min, max),
    disjoint from the edge set by construction. O(sum of deg(u)*deg(w)).
    """
    adj = adjacency(g)
    pairs: set[tuple[int, int]] = set()
    for u in range(g.n):
        reach: set[int] = set()
        for w in adj[u]:
            reach |= adj[w]
        reach -= adj[u]
        reach.discard(u)
        for v in reach:
            if u < v:
                pairs.add((u, v))
    return frozenset(pairs)
