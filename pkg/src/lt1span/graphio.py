"""Graph file parsing/serialization, family generators, and result output.

Graph files use a DIMACS-like dialect: "c ..." comment lines, one
"p edge <n> <m>" header, then "e <u> <v>" lines with 1-based endpoints.

Random graphs are generated with splitmix64 so they are reproducible
bit-for-bit across languages. The algorithm, per output word from a 64-bit
state x: x += 0x9E3779B97F4A7C15; z = x; z = (z ^ (z >> 30)) *
0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return
z ^ (z >> 31), all modulo 2^64. One word is drawn per vertex pair (u, v),
u < v, in lexicographic order; the pair becomes an edge iff
(word >> 11) * 2^-53 < edge_probability.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterator

from .checker import sigma
from .core import Colouring, Graph, SpanResult, TSet

_MASK64 = (1 << 64) - 1

FAMILY_KINDS = ("star", "complete", "complete_multipartite", "path", "cycle", "random")


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for a generated graph.

    kind is one of star (n = leaf count), complete, path, cycle (n = vertex
    count), complete_multipartite (sizes = part sizes), random (n vertices,
    each pair an edge with edge_probability, reproducible from seed).
    """

    kind: str
    n: int | None = None
    sizes: tuple[int, ...] | None = None
    edge_probability: float | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        k = self.kind
        if k not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {k!r}")
        if k == "complete_multipartite":
            if not self.sizes or any(s < 1 for s in self.sizes):
                raise ValueError("complete_multipartite needs part sizes all >= 1")
            object.__setattr__(self, "sizes", tuple(self.sizes))
            return
        if self.n is None or self.n < 1:
            raise ValueError(f"{k} needs n >= 1, got {self.n!r}")
        if k == "cycle" and self.n < 3:
            raise ValueError(f"cycle needs n >= 3, got {self.n}")
        if k == "random":
            p = self.edge_probability
            if p is None or not (0.0 <= p <= 1.0):
                raise ValueError(f"edge probability must be in [0, 1], got {p!r}")
            if self.seed is None or not (0 <= self.seed < 2**64):
                raise ValueError("seed must be an unsigned 64-bit integer")

    @classmethod
    def star(cls, n: int) -> FamilySpec:
        return cls("star", n=n)

    @classmethod
    def complete(cls, n: int) -> FamilySpec:
        return cls("complete", n=n)

    @classmethod
    def multipartite(cls, sizes: tuple[int, ...]) -> FamilySpec:
        return cls("complete_multipartite", sizes=tuple(sizes))

    @classmethod
    def path(cls, n: int) -> FamilySpec:
        return cls("path", n=n)

    @classmethod
    def cycle(cls, n: int) -> FamilySpec:
        return cls("cycle", n=n)

    @classmethod
    def random(cls, n: int, edge_probability: float, seed: int) -> FamilySpec:
        return cls("random", n=n, edge_probability=edge_probability, seed=seed)


def splitmix64(seed: int) -> Iterator[int]:
    """Infinite stream of 64-bit words from the splitmix64 generator."""
    x = seed & _MASK64
    while True:
        x = (x + 0x9E3779B97F4A7C15) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes.

    star: vertex 0 is the centre, leaves 1..n. complete_multipartite: parts
    occupy consecutive id blocks. path/cycle: edges in id order. random: see
    the module docstring for the documented PRNG contract.
    """
    k = spec.kind
    if k == "star":
        n = spec.n
        return Graph(n + 1, [(0, i) for i in range(1, n + 1)])
    if k == "complete":
        n = spec.n
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if k == "complete_multipartite":
        sizes = spec.sizes
        n = sum(sizes)
        bounds = []
        off = 0
        for s in sizes:
            bounds.append((off, off + s))
            off += s
        edges = [
            (u, v)
            for a in range(len(sizes))
            for b in range(a + 1, len(sizes))
            for u in range(*bounds[a])
            for v in range(*bounds[b])
        ]
        return Graph(n, edges)
    if k == "path":
        n = spec.n
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if k == "cycle":
        n = spec.n
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    # random
    n = spec.n
    p = spec.edge_probability
    words = splitmix64(spec.seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (next(words) >> 11) * 2.0**-53 < p:
                edges.append((u, v))
    return Graph(n, edges)


def parse_family_spec(text: str) -> FamilySpec:
    """Parse colon syntax: star:3, complete:4, kpartite:2,2, path:5,
    cycle:6, random:6,0.5,42 (n, edge probability, seed)."""
    kind, sep, rest = text.partition(":")
    kind = kind.strip()
    if not sep or not rest.strip():
        raise ValueError(f"family spec needs kind:args, got {text!r}")
    args = [a.strip() for a in rest.split(",")]
    if kind in ("star", "complete", "path", "cycle"):
        if len(args) != 1:
            raise ValueError(f"{kind} takes one argument, got {len(args)}")
        return FamilySpec(kind, n=int(args[0]))
    if kind in ("kpartite", "complete_multipartite"):
        return FamilySpec.multipartite(tuple(int(a) for a in args))
    if kind == "random":
        if len(args) != 3:
            raise ValueError("random takes n,probability,seed")
        return FamilySpec.random(int(args[0]), float(args[1]), int(args[2]))
    raise ValueError(f"unknown family kind {kind!r}")


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS-like dialect into a Graph.

    File indices are 1-based and converted to 0-based. Duplicate edge lines
    collapse to one edge; loops and out-of-range endpoints are errors. A
    header edge count that disagrees with the number of edge lines is a
    warning, not an error.
    """
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {lineno}: header must be 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer header fields") from None
            if n < 1 or declared_m < 0:
                raise ValueError(f"line {lineno}: header out of range")
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise ValueError(f"line {lineno}: loop edge at vertex {u}")
            edges.append((u - 1, v - 1))
            edge_lines += 1
        else:
            raise ValueError(f"line {lineno}: unrecognized line {raw!r}")
    if n is None:
        raise ValueError("missing 'p edge <n> <m>' header")
    if edge_lines != declared_m:
        warnings.warn(
            f"header declares {declared_m} edges but file has {edge_lines} edge lines",
            stacklevel=2,
        )
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Graph back to the DIMACS-like dialect, edges sorted, 1-based."""
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_tset(text: str) -> TSet:
    """Parse the comma form "0,1,3". Must be ascending and include 0."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"TSet must be comma-separated integers, got {text!r}") from None
    return TSet(values)


def format_tset(t: TSet) -> str:
    return ",".join(str(x) for x in t.elements)


def result_payload(r: SpanResult, g: Graph, t: TSet) -> dict:
    """The result object as a dict in its fixed key order."""
    if len(r.witness) != g.n:
        raise ValueError(
            f"witness covers {len(r.witness)} vertices but graph has {g.n}")
    return {
        "lambda": r.span,
        "method": r.method,
        "colours": list(r.witness.colours),
        "tset": list(t.elements),
        "sigma": sigma(t),
        "nodes_explored": r.nodes_explored,
        "elapsed_ms": r.elapsed * 1000.0,
    }


def emit_result(r: SpanResult, g: Graph, t: TSet) -> str:
    """Single strict-JSON object: lambda, method, colours, tset, sigma,
    nodes_explored, elapsed_ms — in that order, no extra keys."""
    return json.dumps(result_payload(r, g, t), separators=(",", ":"))
