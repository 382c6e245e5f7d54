import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kyfan.complex import (Coloring, Involution, InputError, SimplicialComplex, alt_histogram, alt_number,
                           is_alternating_pattern, kyfan_parity, lambda_image, pair_representatives, validate)
from kyfan.generators import cross_polytope_sphere, search_nice_coloring, subdivided_cross_polytope


def test_alt_examples():
    assert alt_number([-1, 2, 2, 3, -4]) == 2
    assert alt_number([-1, 2, -3, 4]) == 3
    assert alt_number([1, 2, 3]) == 0
    assert alt_number([]) == 0


def test_lambda_image_collapses():
    sq = cross_polytope_sphere(1)
    col = Coloring({"a": -1, "b": 2, "c": 2, "d": 3, "e": -4}, 4)
    assert lambda_image("abcde", col) == frozenset({-1, 2, 3, -4})
    for s in sq.complex.simplices:
        assert lambda_image(s, sq.coloring) == frozenset(int(v) for v in s)


def test_square_is_valid():
    sq = cross_polytope_sphere(1)
    assert validate(sq.complex, sq.involution, sq.coloring).ok


def test_negated_label_breaks_antipodality():
    sq = cross_polytope_sphere(1)
    labels = dict(sq.coloring.labels)
    labels["+1"] = -1
    rep = validate(sq.complex, sq.involution, Coloring(labels, 2))
    assert "antipodality" in rep.axioms()
    assert any("+1" in v.witness for v in rep.violations if v.axiom == "antipodality")


def test_antipodal_edge_violation():
    sq = cross_polytope_sphere(1)
    labels = {"+1": 3, "-1": -3, "+2": -3, "-2": 3}
    rep = validate(sq.complex, sq.involution, Coloring(labels, 3))
    assert rep.axioms() == {"antipodal-edge"}
    assert ("+1", "+2") in [tuple(v.witness) for v in rep.violations]


def test_fixed_point_and_invariant_edge():
    cx = SimplicialComplex([("p", "q"), ("q", "r"), ("r", "p")])
    rep = validate(cx, Involution({"p": "p", "q": "r", "r": "q"}), None)
    assert "involution-free" in rep.axioms()


def test_unknown_vertex_in_involution():
    sq = cross_polytope_sphere(1)
    with pytest.raises(InputError):
        validate(sq.complex, Involution({**sq.involution.pairing, "+1": "zz"}), sq.coloring)


def test_non_maximal_facet_flagged():
    cx = SimplicialComplex([("a", "b"), ("a",)])
    rep = validate(cx, Involution({"a": "b", "b": "a"}), None)
    assert "facet-maximal" in rep.axioms()


def test_square_histogram():
    sq = cross_polytope_sphere(1)
    hist = alt_histogram(sq)
    assert {a: c for (d, a), c in hist.items() if d == 1} == {0: 2, 1: 2}
    assert sum(hist.values()) == len(sq.complex.simplices)
    paired = alt_histogram(sq, paired=True)
    assert {k: 2 * v for k, v in paired.items()} == hist


def test_square_kyfan():
    res = kyfan_parity(cross_polytope_sphere(1), 1)
    assert res.alpha == {(1, -2): 1}
    assert res.parity == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_cross_polytope_parity(n):
    lc = cross_polytope_sphere(n)
    res = kyfan_parity(lc, n)
    # only the fully alternating sign pattern (+,-,+,...) contributes
    assert res.alpha == {tuple((-1) ** p * (p + 1) for p in range(n + 1)): 1}
    assert res.parity == 1


def test_kyfan_dimension_obstruction():
    res = kyfan_parity(cross_polytope_sphere(1), 2)
    assert res.diagnostic


def test_alternating_pattern():
    assert is_alternating_pattern([1, -2, 3])
    assert is_alternating_pattern([3, 1, -2])
    assert not is_alternating_pattern([-1, 2])
    assert not is_alternating_pattern([1, 2])


# --- properties over generated colorings -----------------------------------

def recolored(n, seed):
    """Subdivided cross-polytope with a random carrier choice or a searched coloring."""
    rng = random.Random(seed)
    lc = subdivided_cross_polytope(n, rng)
    if seed % 2:
        col = search_nice_coloring(lc.complex, lc.involution, n + 2, seed=seed)
        lc.coloring = col
    return lc


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 2), st.integers(0, 10 ** 6))
def test_generated_colorings_are_nice_and_odd(n, seed):
    lc = recolored(n, seed)
    assert validate(lc.complex, lc.involution, lc.coloring).ok
    assert kyfan_parity(lc, n).parity == 1


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 2), st.integers(0, 10 ** 6))
def test_alt_invariants(n, seed):
    lc = recolored(n, seed)
    for s in lc.complex.simplices:
        a = lc.alt(s)
        assert a == lc.alt(lc.involution.image(s))
        assert a <= len(lambda_image(s, lc.coloring)) - 1 <= len(s) - 1
        for r in range(1, len(s)):
            for t in combinations(s, r):
                assert lc.alt(t) <= a


def test_pair_representatives_halve():
    lc = subdivided_cross_polytope(2)
    sims = list(lc.complex.simplices)
    reps = pair_representatives(lc.involution, sims)
    assert 2 * len(reps) == len(sims)
