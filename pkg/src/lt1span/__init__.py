"""L(t,1)-colouring of simple graphs: checking, exact spans, constructions,
claim audits, and a service/CLI front end."""
from __future__ import annotations

from .checker import c_span, complement, missing_colours, normalize, sigma, validate
from .core import (
    Colouring,
    Graph,
    SpanResult,
    TSet,
    Violation,
    ViolationKind,
    adjacency,
    distance_two_pairs,
    neighbours,
)
from .families import (
    PredictionMode,
    StarPrediction,
    kpartite_colouring,
    kpartite_upper_bound,
    lpq_reference_span,
    star_colouring,
    star_span_predicted,
)
from .graphio import (
    FamilySpec,
    emit_result,
    format_tset,
    generate,
    parse_family_spec,
    parse_graph,
    parse_tset,
    serialize_graph,
    splitmix64,
)
from .solver import (
    Budget,
    BudgetExceededError,
    BruteForceGuardError,
    MaxSpanExceededError,
    brute_force_span,
    exact_span,
    feasible_with_span,
    greedy_upper_bound,
    trivial_upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "BruteForceGuardError",
    "Colouring",
    "FamilySpec",
    "Graph",
    "MaxSpanExceededError",
    "PredictionMode",
    "SpanResult",
    "StarPrediction",
    "TSet",
    "Violation",
    "ViolationKind",
    "adjacency",
    "brute_force_span",
    "c_span",
    "complement",
    "distance_two_pairs",
    "emit_result",
    "exact_span",
    "feasible_with_span",
    "format_tset",
    "generate",
    "greedy_upper_bound",
    "kpartite_colouring",
    "kpartite_upper_bound",
    "lpq_reference_span",
    "missing_colours",
    "neighbours",
    "normalize",
    "parse_family_spec",
    "parse_graph",
    "parse_tset",
    "serialize_graph",
    "sigma",
    "splitmix64",
    "star_colouring",
    "star_span_predicted",
    "trivial_upper_bound",
    "validate",
    "__version__",
]
