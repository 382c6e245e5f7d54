from fractions import Fraction

import pytest

from kyfan.complex import Coloring, lambda_image, sign_vector
from kyfan.flag import build_flag, face_meets_plane, random_points
from kyfan.generators import builtin_base, trivial_bundle
from kyfan.zset import (ZCell, ZComplex, build_z_complex, dimension_lemma_violations, effective_counts,
                        is_effective, pseudomanifold_check, zcell_of)


def test_effectiveness_examples():
    col = Coloring({"u": -1, "v": 2, "p": 1, "q": -2, "r": 3, "s": -4}, 4)
    assert is_effective("uv", col, 1, 0) and not is_effective("uv", col, 1, 1)
    assert is_effective("pqrs", col, 3, 0)
    assert is_effective("pqr", col, 1, 1)


def test_edge_cell_is_midpoint():
    col = Coloring({"u": -1, "v": 2}, 2)
    cell = zcell_of(("u", "v"), col, build_flag(2, 0), 1, 0)
    assert cell.dim == 0 and cell.interior
    assert cell.point == (Fraction(1, 2), Fraction(1, 2))


def test_collapsed_triangle_gives_segment():
    col = Coloring({"u": -1, "v": 2, "w": 2}, 2)
    cell = zcell_of(("u", "v", "w"), col, build_flag(2, 0), 1, 0)
    assert cell.dim == 1 and cell.interior


def test_non_effective_is_absent():
    col = Coloring({"u": 1, "v": 2}, 3)
    assert zcell_of(("u", "v"), col, build_flag(3, 1), 1, 0) is None


def test_level_above_flag_rejected():
    col = Coloring({"u": 1, "v": -2}, 3)
    with pytest.raises(ValueError):
        zcell_of(("u", "v"), col, build_flag(3, 0), 1, 1)


def _check_fixture(lc, i, flag):
    z = build_z_complex(lc, flag, i)
    n = lc.meta.n
    assert dimension_lemma_violations(lc, z) == []
    census = sum(1 for s in lc.complex.simplices if lc.alt(s) >= n + i)
    assert len(z.cells) == census
    for s in lc.complex.simplices:
        meets = face_meets_plane(sign_vector(lambda_image(s, lc.coloring), flag.N), flag, n + i - 1)
        assert (s in z.cells) == meets == (lc.alt(s) >= n + i)
    for s in z.cells:
        assert lc.involution.image(s) in z.cells
    return z


def test_torus_z0(torus):
    z = _check_fixture(torus, 0, build_flag(2, 0))
    assert z.by_dim() == {0: 24, 1: 24}
    assert pseudomanifold_check(z, 1).ok
    cnt = effective_counts(torus, 0, True)
    assert cnt.pairs == 12 and cnt.verdict == "pass"


def test_trivial_bundle_i1_not_asserted():
    # N = n+1 colors, so the level-n plane is {0} and nothing is 1-effective
    lc = trivial_bundle(builtin_base("circle3"), 2)
    assert max(lc.alt(s) for s in lc.complex.facets) == 2
    cnt = effective_counts(lc, 1, lc.height >= lc.meta.n + 1)
    assert cnt.pairs == 0 and cnt.verdict == "not asserted"


@pytest.mark.parametrize("i,expected", [(0, {0: 12, 1: 24, 2: 14}), (1, {0: 8, 1: 8}), (2, {0: 2})])
def test_hopf_levels(hopf, i, expected):
    z = _check_fixture(hopf, i, build_flag(4, 2))
    assert z.by_dim() == expected
    assert pseudomanifold_check(z, hopf.meta.k - i).pure


def test_hopf_nesting(hopf):
    flag = build_flag(4, 2)
    zs = [build_z_complex(hopf, flag, i) for i in range(3)]
    for lo, hi in zip(zs, zs[1:]):
        assert set(hi.cells) <= set(lo.cells)


def test_hopf_random_points(hopf):
    z = _check_fixture(hopf, 2, build_flag(4, 2, random_points(4, 3)))
    assert effective_counts(hopf, 2, True).pairs >= 1
    assert z.by_dim() == {0: 2}


def test_klein(klein):
    z0 = _check_fixture(klein, 0, build_flag(3, 1))
    assert pseudomanifold_check(z0, 1).ok
    z1 = _check_fixture(klein, 1, build_flag(3, 1))
    assert z1.by_dim() == {0: 6}
    cnt = effective_counts(klein, 1, True)
    assert cnt.pairs >= klein.meta.k + 1 - 1 and cnt.verdict == "pass"


def test_isolated_point_is_impure():
    cell = ZCell(("v",), 0, 0, ("v",), (Fraction(1),))
    z = ZComplex(0, 1, 1, {("v",): cell})
    rep = pseudomanifold_check(z, 1)
    assert not rep.pure and rep.impure == [(("v",), 0)]
