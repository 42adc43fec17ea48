"""Graded cohomology, support predictions, Euler balance, lift obstruction."""

import pytest

from detcomplex.bbw import lands_in_q
from detcomplex.cohomology import (
    admissible_partitions,
    euler_check,
    graded_cohomology,
    indexed_cohomology,
    lift_obstruction,
    nonvanishing_range,
    p1_series,
    predicted_support,
    twisted_family_support,
    unit_series,
)
from detcomplex.partitions import partitions
from detcomplex.reps import BiIrrep


def test_one_dimensional_socle_case():
    # the unique finite-dimensional cohomology module: twist -g, top index
    for g in range(2, 6):
        for f in range(g, g + 3):
            rep = graded_cohomology(-g, g - 1, f, g, 4)
            assert rep.hilbert == (1, 0, 0, 0, 0)
            assert rep.lowest_degree == 0


def test_projective_line_dimensions():
    rep = graded_cohomology(-2, 0, 2, 2, 5)
    assert rep.hilbert == (0, 0, 3, 8, 15, 24)  # (d-1)(d+1) from degree 2 on
    assert rep.hilbert[3] == 8
    rep1 = graded_cohomology(-2, 1, 2, 2, 5)
    assert rep1.hilbert == (1, 0, 0, 0, 0, 0)


def test_nonnegative_twist_sweep():
    rep = graded_cohomology(3, 0, 2, 2, 2)
    assert all(d in rep.decomposition.degrees() for d in (0, 1, 2))
    assert graded_cohomology(3, 1, 2, 2, 4).hilbert == (0, 0, 0, 0, 0)


def test_admissible_partitions_examples():
    assert admissible_partitions(1, 1, 3, 4) == [(2,), (3,), (2, 1), (4,), (3, 1)]
    assert admissible_partitions(0, 0, 3, 5) == [()]
    for k, l, g in [(1, 1, 3), (2, 1, 4), (1, 3, 3), (2, 2, 5)]:
        members = admissible_partitions(k, l, g, k * (l + 1) + 3)
        assert members[0] == ((l + 1),) * k


def test_indexed_matches_graded():
    for g in range(2, 6):
        for i in range(-8, 0):
            f = g
            lo, hi = nonvanishing_range(i, g)
            for q in range(lo, hi + 1):
                swept = graded_cohomology(i, q, f, g, 10)
                indexed = indexed_cohomology(i, q, f, g, 10)
                assert swept.decomposition == indexed.decomposition
                assert swept.hilbert == indexed.hilbert


def test_lowest_degree_class_is_the_rectangle_generator():
    for g in range(2, 6):
        for i in range(-5, 0):
            lo, hi = nonvanishing_range(i, g)
            for q in range(lo, hi + 1):
                k, l = g - 1 - q, -i - q - 1
                rep = indexed_cohomology(i, q, g + 1, g, k * (l + 1) + 1)
                assert rep.lowest_degree == k * (l + 1)
                bottom = rep.decomposition.at(k * (l + 1))
                assert len(bottom) == 1
                generator = bottom.keys()[0]
                assert generator.v == ((l + 1,) * k if k else ())
                assert generator.w == (l + 1,) * (k + 1) + (1,) * q


def test_nonvanishing_range():
    assert nonvanishing_range(-6, 6) == (0, 5)
    assert nonvanishing_range(-1, 6) == (0, 0)
    assert nonvanishing_range(-2, 6) == (0, 1)
    with pytest.raises(ValueError):
        nonvanishing_range(0, 6)


def test_predicted_support():
    res = predicted_support(3, 12, 6)
    assert res.kind == "resolution"
    assert res.intersections == ()
    assert res.augmentation == (0, 0)

    two = predicted_support(-2, 12, 6)
    assert two.kind == "cohomology"
    assert [j for j, _ in two.entries] == [-5, -4]
    assert two.intersections == ((-5, 5), (-4, 5))

    assert [j for j, _ in predicted_support(-6, 12, 6).entries] == list(range(-5, 1))


def test_p1_series():
    assert p1_series(-2, 1, 4) == [1, 0, 0, 0, 0]
    assert p1_series(-2, 0, 4)[3] == 8
    assert p1_series(0, 1, 6) == [0] * 7
    for i in range(-6, 0):
        for q in (0, 1):
            assert p1_series(i, q, 8) == list(graded_cohomology(i, q, 2, 2, 8).hilbert)


def test_euler_closed_form_on_smallest_dual_case():
    rep = euler_check(-2, 2, 2, 10)
    assert rep.balanced
    assert rep.numerator_coeffs(2) == [1, -4, 3]
    assert list(rep.lhs_series) == [(d + 1) * (1 - d) for d in range(11)]
    assert rep.lhs_series[3] == -8


def test_euler_resolution_case_reproduces_minors_quotient():
    rep = euler_check(0, 3, 2, 10)
    assert rep.balanced
    assert rep.resolution_numerator == ((0, 1), (2, -3), (3, 2))
    series = list(rep.lhs_series)
    # the quotient by 2x2 minors of a generic 2x3 matrix
    expected = unit_series(6, 10)
    minus = unit_series(6, 10)
    quotient = [
        expected[d] - 3 * (minus[d - 2] if d >= 2 else 0) + 2 * (minus[d - 3] if d >= 3 else 0)
        for d in range(11)
    ]
    assert [-x for x in series] == quotient


def test_euler_koszul_point():
    rep = euler_check(0, 1, 1, 6)
    assert rep.balanced
    assert rep.resolution_numerator == ((0, 1), (1, -1))


def test_euler_sweep():
    for f in range(1, 7):
        for g in range(1, f + 1):
            for i in range(-6, f - g + 4):
                rep = euler_check(i, f, g, 10)
                assert rep.balanced, (f, g, i, rep.first_mismatch)


def test_lift_obstruction_matches_fast_path_at_k_zero():
    g = 4
    for i in range(-5, 0):
        witnesses = lift_obstruction(0, i, g, 6)
        direct = [
            (q, lam)
            for lam in partitions(6, g - 1)
            for q in range(g)
            if lands_in_q(i, lam, g, q)
        ]
        assert {(w.q, w.lam) for w in witnesses} == set(direct)
        for w in witnesses:
            assert w.strip == w.lam


def test_lift_obstruction_nonnegative_effective_twist_is_clean():
    for g in (3, 4):
        for k in range(0, g):
            for d in range(0, 4):
                for q in range(1, g):
                    assert not lands_in_q(d + k - k, (), g, q)
                empty = [
                    w for w in lift_obstruction(k, d + k, g, 4) if w.lam == () == w.strip
                ]
                assert empty == []


def test_lift_obstruction_negative_effective_twist_finds_witnesses():
    for g in (3, 4):
        for k in range(0, g):
            for d in range(-4, 0):
                witnesses = lift_obstruction(k, d + k, g, 8)
                assert witnesses, (g, k, d)


def test_twisted_family_support():
    acyclic = twisted_family_support(6, 3, 12, 6)
    assert acyclic.kind == "acyclic"
    assert acyclic.intersections == ()

    ob = twisted_family_support(0, 1, 4, 3)  # effective twist -1
    assert ob.kind == "cohomology"
    assert len(ob.diagonals) >= 1
    assert (0, 1) in ob.intersections  # the middle term spot

    for i in range(-6, 8):
        plain = twisted_family_support(i, 0, 12, 6)
        if i >= 0:
            assert plain.kind == "acyclic"
        else:
            assert plain.intersections == predicted_support(i, 12, 6).intersections
