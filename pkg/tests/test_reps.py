"""Dimension formulas, duality, twists, and the Pieri/Cauchy decompositions."""

from math import comb

import pytest

from detcomplex.partitions import pad, partitions, ssyt_count
from detcomplex.reps import (
    BiIrrep,
    RepSum,
    bi_dim,
    cauchy_ext,
    cauchy_sym,
    det_twist,
    dim_weight,
    dual_weight,
    pieri_ext,
    pieri_sym,
    split_twist,
    sym_dim,
)


def test_dim_weight_basics():
    assert dim_weight((0, 0, 0), 3) == 1
    assert dim_weight((2, 0, 0), 3) == 6
    assert dim_weight((2, 1, 0), 3) == 8
    with pytest.raises(ValueError):
        dim_weight((1, 2), 2)


def test_dim_weight_matches_tableau_count():
    for p in partitions(6, 4):
        for n in range(len(p), 5):
            assert dim_weight(pad(p, n), n) == ssyt_count(p, n)


def test_dual_weight():
    assert dual_weight((2, 0, -1)) == (1, 0, -2)
    assert dual_weight((0, 0)) == (0, 0)
    for w in [(3, 1, 0), (2, 2, -5), (0,), (7, -7)]:
        assert dual_weight(dual_weight(w)) == w
        assert dim_weight(dual_weight(w), len(w)) == dim_weight(w, len(w))


def test_det_twist():
    assert det_twist((1, 1, 0), 1) == (2, 2, 1)
    assert det_twist((-1, -1, -4), 4) == (3, 3, 0)
    assert det_twist((5, 2), 0) == (5, 2)
    for m in range(-3, 4):
        w = (4, 2, 1)
        assert dim_weight(det_twist(w, m), 3) == dim_weight(w, 3)


def test_split_twist():
    assert split_twist((3, 3, 0)) == ((3, 3), 0)
    assert split_twist((2, 2, 1)) == ((1, 1), 1)
    assert split_twist((0, 0, -2)) == ((2, 2), -2)


def test_pieri_sym():
    assert pieri_sym((1,), 1, 2) == RepSum([((2,), 1), ((1, 1), 1)])
    assert pieri_sym((2,), 2, 1) == RepSum([((4,), 1)])
    out = pieri_sym((2, 1), 2, 3)
    total = sum(dim_weight(pad(p, 3), 3) for p in out.keys())
    assert total == 8 * 6
    with pytest.raises(ValueError):
        pieri_sym((1, 1, 1), 2, 2)


def test_pieri_ext():
    assert pieri_ext((2, 1), 2, 3) == RepSum(
        [((3, 2), 1), ((3, 1, 1), 1), ((2, 2, 1), 1)]
    )
    assert pieri_ext((), 3, 3) == RepSum([((1, 1, 1), 1)])
    out = pieri_ext((1,), 1, 2)
    assert sum(dim_weight(pad(p, 2), 2) for p in out.keys()) == 2 * 2
    with pytest.raises(ValueError):
        pieri_ext((1,), 4, 3)


def test_pieri_dimension_additivity():
    for p in partitions(5, 4):
        for n in range(max(1, len(p)), 5):
            dp = dim_weight(pad(p, n), n)
            for k in range(0, 5):
                sym_total = sum(
                    dim_weight(pad(q, n), n) for q in pieri_sym(p, k, n).keys()
                )
                assert sym_total == dp * sym_dim(k, n)
                if k <= n:
                    ext_total = sum(
                        dim_weight(pad(q, n), n) for q in pieri_ext(p, k, n).keys()
                    )
                    assert ext_total == dp * comb(n, k)


def test_cauchy_sym():
    assert cauchy_sym(1, 2, 3) == RepSum([(BiIrrep((1,), (1, 0, 0), 1), 1)])
    assert cauchy_sym(2, 2, 2) == RepSum(
        [(BiIrrep((2,), (2, 0), 2), 1), (BiIrrep((1, 1), (1, 1), 2), 1)]
    )
    for f in range(1, 5):
        for g in range(1, 5):
            for d in range(0, 9):
                total = sum(bi_dim(b, f, g) for b in cauchy_sym(d, f, g).keys())
                assert total == comb(f * g + d - 1, d)


def test_cauchy_ext():
    assert cauchy_ext(1, 2, 2) == RepSum([(BiIrrep((1,), (1, 0), 1), 1)])
    assert cauchy_ext(2, 2, 2) == RepSum(
        [(BiIrrep((2,), (1, 1), 2), 1), (BiIrrep((1, 1), (2, 0), 2), 1)]
    )
    for f in range(1, 4):
        for g in range(1, 4):
            for j in range(0, f * g + 1):
                total = sum(bi_dim(b, f, g) for b in cauchy_ext(j, f, g).keys())
                assert total == comb(f * g, j)
