"""Shared test utilities.

Everything here re-derives facts from first principles so tests can
cross-check the library against code that shares nothing with it:
isomorphism-deduplicated graph enumeration, BFS distances, and a
rule-by-rule violation predicate.
"""
from __future__ import annotations

import itertools
from collections import deque

from lt1span import Graph


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distance from source to every vertex; -1 when unreachable."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def independent_violations(g: Graph, t, c) -> set[tuple[str, int, int]]:
    """(kind, u, v) triples broken by c, derived straight from the rules.

    Uses BFS distances rather than the library's adjacency-set expansion, so
    a bug there cannot hide here.
    """
    out: set[tuple[str, int, int]] = set()
    forbidden = set(t.elements)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] == 1 and abs(c[u] - c[v]) in forbidden:
                out.add(("AdjacentDiffInT", u, v))
            elif dist[v] == 2 and c[u] == c[v]:
                out.add(("DistanceTwoEqual", u, v))
    return out


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _canonical(n: int, edges: list[tuple[int, int]]) -> tuple:
    """Lexicographically smallest relabelling of the edge list."""
    best = None
    for perm in itertools.permutations(range(n)):
        relabelled = tuple(sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in edges))
        if best is None or relabelled < best:
            best = relabelled
    return best


def connected_graphs_up_to_iso(max_n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs with
    1..max_n vertices. Counts per n: 1, 1, 2, 6, 21."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen: set[tuple] = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if not _connected(n, edges):
                continue
            key = _canonical(n, edges)
            if key not in seen:
                seen.add(key)
                out.append(Graph(n, edges))
    return out


def random_graph(rng, n: int, p: float) -> Graph:
    """Erdős–Rényi graph drawn from a stdlib Random instance (test-side
    randomness, unrelated to the library's splitmix64 generator)."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)
