"""Tests for the family constructions and predictions: star colourings,
the star span formula and its verified failure cases, the k-partite block
bound, and the independent L(p,1) reference solver.

The star formula n - sigma + r is a *claim* the library checks, not a fact
it assumes: the constructive colouring proves it as an upper bound, and the
FORMULA_COUNTEREXAMPLES table below freezes every grid cell where the exact
span is strictly smaller (each row was confirmed by brute force; see
CLAIMS.md).
"""
import pytest

from lt1span import (
    Budget,
    BudgetExceededError,
    Colouring,
    Graph,
    PredictionMode,
    TSet,
    c_span,
    exact_span,
    kpartite_colouring,
    kpartite_upper_bound,
    lpq_reference_span,
    sigma,
    star_colouring,
    star_span_predicted,
    validate,
)
from lt1span.graphio import FamilySpec, generate


def star(n):
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


# every (n, T) with r <= 4, |T| <= 5, sigma < n <= 7 where the formula
# value is NOT the exact span, with a valid witness beating it
FORMULA_COUNTEREXAMPLES = [
    (2, (0, 2), 3, 2, (1, 0, 2)),
    (3, (0, 3), 4, 3, (1, 0, 2, 3)),
    (4, (0, 3), 5, 4, (2, 0, 1, 3, 4)),
    (4, (0, 4), 5, 4, (1, 0, 2, 3, 4)),
    (5, (0, 4), 6, 5, (2, 0, 1, 3, 4, 5)),
    (6, (0, 4), 7, 6, (3, 0, 1, 2, 4, 5, 6)),
    (2, (0, 2, 3), 4, 2, (1, 0, 2)),
    (3, (0, 2, 4), 5, 4, (1, 0, 2, 4)),
    (3, (0, 3, 4), 5, 3, (1, 0, 2, 3)),
    (4, (0, 3, 4), 6, 4, (2, 0, 1, 3, 4)),
    (2, (0, 1, 3, 4), 5, 4, (2, 0, 4)),
    (2, (0, 2, 3, 4), 5, 2, (1, 0, 2)),
]


# ---------------------------------------------------- star predictions

def test_star_prediction_exact_mode():
    pred = star_span_predicted(3, TSet([0, 1]))
    assert pred.mode is PredictionMode.EXACT
    assert pred.value == 4


def test_star_prediction_strict_upper_mode():
    # sigma({0,1,3,4,8}) = 4 >= n = 3: true span promised strictly below r
    pred = star_span_predicted(3, TSet([0, 1, 3, 4, 8]))
    assert pred.mode is PredictionMode.STRICT_UPPER_BOUND
    assert pred.value == 8


def test_star_prediction_boundary_sigma_equals_n():
    t = TSet([0, 2])  # sigma = 1
    assert star_span_predicted(1, t).mode is PredictionMode.STRICT_UPPER_BOUND
    assert star_span_predicted(2, t).mode is PredictionMode.EXACT


def test_star_prediction_rejects_bad_n():
    with pytest.raises(ValueError, match=">= 1"):
        star_span_predicted(0, TSet([0]))


def test_spot_values_hold():
    assert exact_span(star(3), TSet([0, 1])).span == 4
    assert exact_span(star(3), TSet([0, 2])).span == 4


# --------------------------------------------------- star construction

def test_star_colouring_layout():
    # centre 0; missing colours 2 then past r: 4, 5
    assert star_colouring(3, TSet([0, 1, 3])).colours == (0, 2, 4, 5)
    # sigma >= n: only missing colours get used
    assert star_colouring(2, TSet([0, 1, 3, 4, 8])).colours == (0, 2, 5)


def test_star_colouring_always_valid_and_matches_prediction():
    for elems in [(0,), (0, 1), (0, 2), (0, 1, 2), (0, 3), (0, 1, 3),
                  (0, 2, 3), (0, 1, 2, 3), (0, 4), (0, 2, 4), (0, 3, 4)]:
        t = TSet(elems)
        for n in range(1, 8):
            col = star_colouring(n, t)
            assert validate(star(n), t, col) == []
            if sigma(t) < n:
                assert c_span(col) == star_span_predicted(n, t).value


def test_star_colouring_rejects_bad_n():
    with pytest.raises(ValueError, match=">= 1"):
        star_colouring(0, TSet([0]))


# ------------------------------------- the formula's verified failures

@pytest.mark.parametrize("n,tset,predicted,exact,witness", FORMULA_COUNTEREXAMPLES)
def test_formula_counterexamples_are_real(n, tset, predicted, exact, witness):
    t = TSet(tset)
    g = star(n)
    pred = star_span_predicted(n, t)
    assert pred.mode is PredictionMode.EXACT
    assert pred.value == predicted
    # the frozen witness is valid and beats the formula
    assert validate(g, t, Colouring(witness)) == []
    assert max(witness) == exact < predicted
    # and nothing smaller works: the solver lands exactly on it
    assert exact_span(g, t).span == exact


def test_formula_never_underestimates():
    # the construction proves n - sigma + r is always achievable, so the
    # exact span can only be smaller, never larger
    for elems in [(0, 2), (0, 3), (0, 4), (0, 2, 3), (0, 2, 4), (0, 3, 4)]:
        t = TSet(elems)
        for n in range(sigma(t) + 1, 8):
            assert exact_span(star(n), t).span <= star_span_predicted(n, t).value


def test_strict_upper_regime_holds():
    # sigma >= n: exact span strictly below r
    for elems in [(0, 2), (0, 3), (0, 4), (0, 2, 4), (0, 3, 4), (0, 2, 3, 4)]:
        t = TSet(elems)
        for n in range(1, sigma(t) + 1):
            assert exact_span(star(n), t).span < t.r


# ------------------------------------------------------------ k-partite

def test_kpartite_bound_values():
    assert kpartite_upper_bound((2, 2), TSet([0, 1])) == 5
    assert kpartite_upper_bound((1, 1), TSet([0])) == 1
    assert kpartite_upper_bound((3,), TSet([0, 1])) == 3
    assert kpartite_upper_bound((2, 1, 1), TSet([0])) == 3


def test_kpartite_bound_rejects_bad_sizes():
    with pytest.raises(ValueError, match="at least one part"):
        kpartite_upper_bound((), TSet([0]))
    with pytest.raises(ValueError, match="positive integers"):
        kpartite_upper_bound((2, 0), TSet([0]))


def test_kpartite_colouring_layout():
    assert kpartite_colouring((2, 1, 1), TSet([0])).colours == (0, 3, 1, 2)
    assert kpartite_colouring((2, 2), TSet([0, 1])).colours == (0, 5, 2, 3)


def test_kpartite_colouring_valid_within_bound():
    tuples = [(1, 1), (1, 2), (2, 2), (2, 3), (1, 1, 1), (1, 2, 3), (2, 2, 2)]
    tsets = [(0,), (0, 1), (0, 2), (0, 1, 2), (0, 3), (0, 1, 3), (0, 2, 3),
             (0, 1, 2, 3)]
    for sizes in tuples:
        g = generate(FamilySpec.multipartite(sizes))
        for elems in tsets:
            t = TSet(elems)
            col = kpartite_colouring(sizes, t)
            assert validate(g, t, col) == []
            assert c_span(col) <= kpartite_upper_bound(sizes, t)


def test_kpartite_colouring_needs_two_parts():
    with pytest.raises(ValueError, match="at least two parts"):
        kpartite_colouring((4,), TSet([0]))


def test_kpartite_bound_not_always_attained():
    # parts (2,2) with T={0,1}: bound 5, true span 4, yet the block
    # construction itself spends 5 — the bound is about the construction
    g = generate(FamilySpec.multipartite((2, 2)))
    t = TSet([0, 1])
    assert exact_span(g, t).span == 4
    assert c_span(kpartite_colouring((2, 2), t)) == 5


# ----------------------------------------------------- L(p,1) reference

def test_lpq_reference_frozen_values():
    assert lpq_reference_span(star(3), 2) == 4
    assert lpq_reference_span(Graph(3, [(0, 1), (1, 2)]), 1) == 2
    assert lpq_reference_span(Graph(3, [(0, 1), (0, 2), (1, 2)]), 3) == 6


def test_lpq_reference_rejects_bad_p():
    with pytest.raises(ValueError, match=">= 1"):
        lpq_reference_span(star(2), 0)


def test_lpq_reference_budget():
    big = generate(FamilySpec.multipartite((3, 3)))
    with pytest.raises(BudgetExceededError):
        lpq_reference_span(big, 3, Budget(max_nodes=10))


def test_lpq_matches_exact_span_on_consecutive_tsets():
    pool = [star(2), star(4), Graph(4, [(i, i + 1) for i in range(3)]),
            Graph(5, [(i, (i + 1) % 5) for i in range(5)]),
            generate(FamilySpec.multipartite((2, 2))),
            generate(FamilySpec.complete(4))]
    for p in (1, 2, 3):
        t = TSet(range(p))
        for g in pool:
            assert lpq_reference_span(g, p) == exact_span(g, t).span
