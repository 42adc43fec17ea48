"""Equivariant lattices and the projective-dimension bound machinery."""

import pytest

from detcomplex.cohomology import indexed_cohomology, nonvanishing_range
from detcomplex.lattices import (
    cohomology_lattice,
    ideal_lattice,
    projdim_lower_bound,
    projdim_witness,
    quotient_lattice,
)
from detcomplex.partitions import contains, partitions_of
from detcomplex.reps import det_twist


def test_ideal_lattice_of_the_square():
    lat = ideal_lattice((2, 2), 5, 5, 5)
    layer = lat.nodes_at(5)
    assert sorted(n.v for n in layer) == [(2, 2, 1), (3, 2)]
    assert all(n.v == n.w for n in lat.nodes)


def test_ideal_lattice_of_the_whole_ring():
    lat = ideal_lattice((), 3, 3, 3)
    assert [n.v for n in lat.nodes_at(0)] == [()]
    assert len(lat.nodes_at(1)) == 1
    assert len(lat.nodes_at(2)) == 2
    assert len(lat.nodes_at(3)) == 3
    assert lat.roots() == [0]


def test_ideal_lattice_height_bound():
    lat = ideal_lattice((1,), 2, 5, 3)
    assert sorted(n.v for n in lat.nodes_at(3)) == [(2, 1), (3,)]


def test_ideal_lattice_node_oracle():
    for lam in [(), (1,), (2, 1), (2, 2)]:
        for bound in (2, 3):
            lat = ideal_lattice(lam, bound, 5, 8)
            for deg in range(sum(lam), 9):
                expected = sorted(
                    mu for mu in partitions_of(deg, min(bound, 5)) if contains(mu, lam)
                )
                assert sorted(n.v for n in lat.nodes_at(deg)) == expected


def test_quotient_lattice_examples():
    lat = quotient_lattice(1, 1, 4, 4, 3)
    assert [n.v for n in lat.nodes_at(1)] == [(1,)]
    assert sorted(n.v for n in lat.nodes_at(2)) == [(1, 1), (2,)]
    assert sorted(n.v for n in lat.nodes_at(3)) == [(1, 1, 1), (2, 1), (3,)]
    # the square first leaves the quotient at degree 4
    assert (2, 2) not in [n.v for n in lat.nodes_at(4)]

    trivial = quotient_lattice(0, 0, 3, 3, 4)
    assert [n.v for n in trivial.nodes] == [()]


def test_quotient_lattice_base_node():
    for l in range(0, 3):
        for k in range(0, 3):
            lat = quotient_lattice(l, k, 4, 4, k * l + 2)
            assert lat.nodes[0].v == ((l,) * k if l else ())
            assert lat.nodes[0].degree == k * l


def test_lattices_are_graded_connected():
    lats = [
        ideal_lattice((2, 1), 4, 4, 7),
        quotient_lattice(2, 1, 4, 4, 7),
        cohomology_lattice(-3, 1, 4, 4, 8),
    ]
    for lat in lats:
        assert len(lat.roots()) == 1
        for a, b in lat.edges:
            assert lat.nodes[b].degree == lat.nodes[a].degree + 1


def test_cohomology_lattice_base_is_the_generator():
    for g in range(2, 6):
        for i in range(-5, 0):
            lo, hi = nonvanishing_range(i, g)
            for q in range(lo, hi + 1):
                k = g - 1 - q
                l = -i - q - 1
                lat = cohomology_lattice(i, q, g, g, k * (l + 1) + 2)
                root = lat.nodes[0]
                assert root.v == ((l + 1,) * k if k else ())
                assert root.w == ((l,) * (k + 1) if l else ())
                assert root.degree == k * (l + 1)


def test_cohomology_lattice_matches_indexed_decomposition():
    maxdeg = 10
    for g in range(2, 6):
        for i in range(-6, 0):
            lo, hi = nonvanishing_range(i, g)
            for q in range(lo, hi + 1):
                lat = cohomology_lattice(i, q, g, g, maxdeg)
                rep = indexed_cohomology(i, q, g, g, maxdeg)
                got = sorted((n.degree, n.v, det_twist(n.w + (0,) * (g - len(n.w)), 1))
                             for n in lat.nodes)
                expected = sorted(
                    (b.degree, b.v, b.w) for b, _ in rep.decomposition.all_terms()
                )
                assert got == expected, (g, i, q)


def test_small_twist_cohomology_lattice_example():
    lat = cohomology_lattice(-2, 0, 2, 2, 4)
    assert lat.nodes[0].v == (2,)
    assert lat.nodes[0].w == (1, 1)
    assert lat.nodes[0].degree == 2
    assert lat.det_twisted


def test_projdim_lower_bound_values():
    assert projdim_lower_bound(-2, 0, 12, 6) == 7
    assert projdim_lower_bound(-2, 1, 12, 6) == 0
    for g in range(2, 6):
        assert projdim_lower_bound(-g, 0, g, g) == g - 1
    with pytest.raises(ValueError):
        projdim_lower_bound(-2, 3, 12, 6)


def test_projdim_witness_examples():
    assert projdim_witness(0, -2, 0, 12, 6) == ()
    w = projdim_witness(7, -2, 0, 12, 6)
    assert w is not None and sum(w) == 7
    assert w[0] <= 2 and len(w) <= 7  # fits the below-the-rectangle region
    assert projdim_witness(50, -2, 0, 12, 6) is None


def test_projdim_witness_exists_up_to_the_bound():
    for f in range(2, 9):
        for g in range(2, min(f, 5) + 1):
            for i in range(-6, 0):
                lo, hi = nonvanishing_range(i, g)
                for q in range(lo, hi + 1):
                    bound = projdim_lower_bound(i, q, f, g)
                    for j in range(bound + 1):
                        w = projdim_witness(j, i, q, f, g)
                        assert w is not None, (f, g, i, q, j)
                        assert sum(w) == j
