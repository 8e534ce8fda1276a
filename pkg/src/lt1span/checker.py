"""Validity checking and colour arithmetic for L(t,1)-colourings.

A colouring is valid when no edge's colour difference lands in the forbidden
set T and no two vertices at distance exactly two share a colour. The
complementary transform reflects a colouring about its highest colour plus a
shift; reflection preserves both conditions.
"""
from __future__ import annotations

from .core import Colouring, Graph, TSet, Violation, ViolationKind, distance_two_pairs


def validate(g: Graph, t: TSet, c: Colouring) -> list[Violation]:
    """All breaches of the two colouring conditions, one per pair per rule.

    Exhaustive by design: audit tooling needs complete diagnostics, not the
    first failure. Deterministic order: edge violations first, then
    distance-two violations, each sorted by vertex pair.
    """
    if len(c) != g.n:
        raise ValueError(
            f"colouring covers {len(c)} vertices but graph has {g.n}"
        )
    forbidden = frozenset(t.elements)
    out: list[Violation] = []
    for u, v in sorted(g.edges):
        diff = abs(c[u] - c[v])
        if diff in forbidden:
            out.append(Violation(ViolationKind.ADJACENT_DIFF_IN_T, u, v, diff))
    for u, v in sorted(distance_two_pairs(g)):
        if c[u] == c[v]:
            out.append(Violation(ViolationKind.DISTANCE_TWO_EQUAL, u, v, c[u]))
    return out


def c_span(c: Colouring) -> int:
    """Highest colour assigned by c."""
    if len(c) == 0:
        raise ValueError("empty colouring has no span")
    return max(c.colours)


def complement(c: Colouring, j: int = 0) -> Colouring:
    """Complementary colouring: v gets s + j - c(v) with s the highest colour.

    s is computed internally so (c, s) can never disagree. Outputs are
    non-negative because c(v) <= s. The result's highest colour is
    s + j - min(c).
    """
    if len(c) == 0:
        raise ValueError("empty colouring has no complement")
    if j < 0:
        raise ValueError(f"shift j must be non-negative, got {j}")
    s = c_span(c)
    return Colouring(s + j - x for x in c.colours)


def sigma(t: TSet) -> int:
    """Count of integers in [0, r] missing from T: r - |T| + 1."""
    return t.r - len(t) + 1


def missing_colours(t: TSet) -> list[int]:
    """Integers strictly between 0 and r absent from T, ascending.

    Length always equals sigma(t); these are the colours a star's leaves
    can take below r.
    """
    present = frozenset(t.elements)
    return [x for x in range(1, t.r) if x not in present]


def normalize(c: Colouring) -> Colouring:
    """Shift colours so the minimum is 0. Differences are untouched, so a
    valid colouring stays valid; the highest colour drops by min(c)."""
    if len(c) == 0:
        raise ValueError("empty colouring cannot be normalized")
    lo = min(c.colours)
    if lo == 0:
        return c
    return Colouring(x - lo for x in c.colours)
