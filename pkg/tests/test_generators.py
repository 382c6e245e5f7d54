import random

import pytest

from kyfan.complex import alt_number, validate
from kyfan.generators import (builtin_base, cross_polytope_sphere, hopf_s3, klein_bundle, klein_cells, parse_kind,
                              prism_multiplicity, search_nice_coloring, subdivided_cross_polytope, trivial_bundle)


def ok(lc):
    return validate(lc.complex, lc.involution, lc.coloring).ok


def test_cross_polytope_small():
    sq = cross_polytope_sphere(1)
    assert sq.complex.f_vector() == [4, 4]
    octa = cross_polytope_sphere(2)
    assert octa.complex.f_vector()[0] == 6 and len(octa.complex.facets) == 8
    assert ok(sq) and ok(octa)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_subdivision(n):
    lc = subdivided_cross_polytope(n)
    assert ok(lc)
    assert lc.coloring.N == n + 1
    assert len(lc.complex.vertices) == 3 ** (n + 1) - 1
    for d, sims in lc.complex.by_dim.items():
        assert len(sims) % 2 == 0
    assert max(lc.alt(f) for f in lc.complex.facets) <= n


def test_square_subdivision_has_eight_vertices():
    assert len(subdivided_cross_polytope(1).complex.vertices) == 8


@pytest.mark.parametrize("base,n", [("point", 1), ("point", 2), ("circle3", 1), ("circle4", 2), ("sphere1", 1)])
def test_trivial_bundles(base, n):
    b = builtin_base(base)
    lc = trivial_bundle(b, n)
    assert ok(lc)
    assert {abs(x) for x in lc.coloring.labels.values()} == set(range(1, n + 2))
    assert max(lc.alt(f) for f in lc.complex.facets) <= n
    expected = len(b.facets) * 2 ** (n + 1) * prism_multiplicity(b.dim, n)
    assert len(lc.complex.facets) == expected
    assert lc.complex.dim == n + b.dim


def test_torus_fixture(torus):
    assert ok(torus)
    assert torus.complex.f_vector() == [48, 144, 96]
    assert max(torus.alt(f) for f in torus.complex.facets) == 1
    pairs = [e for e in torus.complex.by_dim[1] if torus.alt(e) >= 1 and e <= torus.involution.image(e)]
    assert len(pairs) >= 2


def test_hopf_fixture(hopf):
    assert ok(hopf)
    assert (hopf.meta.n, hopf.meta.k) == (1, 2)
    assert hopf.complex.f_vector() == [8, 24, 32, 16]
    assert any(hopf.alt(f) == 3 for f in hopf.complex.facets)


def test_klein_fixture(klein):
    assert klein.status == "nice" and ok(klein)
    assert klein.complex.f_vector() == [48, 144, 96]
    assert klein.complex.euler_characteristic() // 2 == 0
    assert any(klein.alt(s) >= 2 for s in klein.complex.simplices)


def test_klein_needs_three_colors(klein):
    assert search_nice_coloring(klein.complex, klein.involution, 2) is None


@pytest.mark.parametrize("seed", range(5))
def test_klein_searched_colorings_have_alt_two(klein, seed):
    col = search_nice_coloring(klein.complex, klein.involution, 3, seed=seed)
    assert col is not None
    assert validate(klein.complex, klein.involution, col).ok
    assert max(alt_number(col.of(s)) for s in klein.complex.simplices) >= 2


def test_klein_cells_pairing_is_free():
    cells, pairing = klein_cells(3)
    assert all(pairing[pairing[c]] == c and pairing[c] != c for c in pairing)


def test_random_carrier_choice_still_nice():
    for seed in range(10):
        assert ok(subdivided_cross_polytope(2, random.Random(seed)))


def test_parse_kind():
    assert len(parse_kind("crosspoly:2").complex.facets) == 8
    assert parse_kind("hopf").meta.k == 2
    with pytest.raises(ValueError):
        parse_kind("moebius:3")
    with pytest.raises(ValueError):
        builtin_base("circle2")
