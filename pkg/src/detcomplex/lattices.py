"""Lattices of equivariant modules over the coordinate ring of matrices.

A lattice is the degree-stratified graph of irreducible bimodule
constituents with edges recording one-step generation under multiplication
by V tensor W*.  At multiplicity level that multiplication is the one-box
rule, so edges connect nodes whose underlying shapes differ by a single box.

W*-parts are stored untwisted; ``det_twisted`` flags that every node of a
cohomology lattice implicitly carries the top exterior power of W*.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import nonvanishing_range
from .partitions import (
    Partition,
    add_to_columns,
    add_to_rows,
    contains,
    partitions_of,
    sort_key,
    vertical_strips,
)


@dataclass(frozen=True)
class LatticeNode:
    v: Partition
    w: Partition
    degree: int


@dataclass(frozen=True)
class Lattice:
    nodes: tuple[LatticeNode, ...]
    edges: tuple[tuple[int, int], ...]  # index pairs into nodes
    det_twisted: bool = False

    def nodes_at(self, degree: int) -> list[LatticeNode]:
        return [n for n in self.nodes if n.degree == degree]

    def degrees(self) -> list[int]:
        return sorted({n.degree for n in self.nodes})

    def roots(self) -> list[int]:
        targets = {b for _, b in self.edges}
        return [t for t in range(len(self.nodes)) if t not in targets]


def _node_key(n: LatticeNode) -> tuple:
    return (n.degree, sort_key(n.v), sort_key(n.w))


def _diagonal_lattice(shapes: set[Partition], max_rows: int, twisted: bool) -> Lattice:
    """Lattice with nodes (mu, mu) over a box-closed family of shapes."""
    nodes = sorted((LatticeNode(mu, mu, sum(mu)) for mu in shapes), key=_node_key)
    index = {n.v: t for t, n in enumerate(nodes)}
    edges = []
    for t, n in enumerate(nodes):
        for nu in vertical_strips(n.v, 1, max_rows):
            if nu in index:
                edges.append((t, index[nu]))
    return Lattice(tuple(nodes), tuple(sorted(edges)), twisted)


def ideal_lattice(lam: Partition, f: int, g: int, maxdeg: int) -> Lattice:
    """Lattice of the equivariant ideal generated by the paired Schur
    bimodule of shape ``lam``: all shapes containing it, paired with
    themselves."""
    bound = min(f, g)
    if len(lam) > bound:
        raise ValueError(f"shape {lam!r} does not fit in min(f, g) = {bound} rows")
    shapes = {
        mu
        for n in range(sum(lam), maxdeg + 1)
        for mu in partitions_of(n, bound)
        if contains(mu, lam)
    }
    return _diagonal_lattice(shapes, bound, twisted=False)


def quotient_lattice(l: int, k: int, f: int, g: int, maxdeg: int) -> Lattice:
    """Lattice of the quotient of the ideal of the k-by-l rectangle by the
    ideal of the (k+1)-by-(l+1) rectangle: shapes containing the first
    rectangle whose (k+1)-st row is at most l."""
    if l < 0 or k < 0:
        raise ValueError("rectangle parameters must be nonnegative")
    bound = min(f, g)
    if k > bound:
        raise ValueError(f"rectangle height {k} exceeds min(f, g) = {bound}")
    base = (l,) * k if l else ()
    shapes = {
        mu
        for n in range(k * l, maxdeg + 1)
        for mu in partitions_of(n, bound)
        if contains(mu, base) and (len(mu) <= k or mu[k] <= l)
    }
    return _diagonal_lattice(shapes, bound, twisted=False)


def cohomology_lattice(i: int, q: int, f: int, g: int, maxdeg: int) -> Lattice:
    """Lattice of the cohomology module at twist ``i`` and index ``q``.

    Obtained from the rectangle quotient lattice by adding one box to each
    of the first k rows on the V side and one box to each of the first l
    columns on the W* side; nodes whose W*-part grows past g rows vanish
    and are dropped, edges are transported.
    """
    lo, hi = nonvanishing_range(i, g)
    if not lo <= q <= hi:
        raise ValueError(f"index {q} outside the nonvanishing interval [{lo}, {hi}]")
    k = g - 1 - q
    l = -i - q - 1
    base = quotient_lattice(l, k, f, g, maxdeg - k)
    keep: dict[int, int] = {}
    nodes: list[LatticeNode] = []
    for t, n in enumerate(base.nodes):
        w = add_to_columns(n.w, l)
        if len(w) > g:
            continue
        keep[t] = len(nodes)
        nodes.append(LatticeNode(add_to_rows(n.v, k), w, n.degree + k))
    edges = tuple(
        sorted((keep[a], keep[b]) for a, b in base.edges if a in keep and b in keep)
    )
    return Lattice(tuple(nodes), edges, det_twisted=True)


def projdim_lower_bound(i: int, q: int, f: int, g: int) -> int:
    """Lower bound for the projective dimension of the cohomology module
    at twist ``i`` and index ``q``, clamped at zero."""
    lo, hi = nonvanishing_range(i, g)
    if not lo <= q <= hi:
        raise ValueError(f"index {q} outside the nonvanishing interval [{lo}, {hi}]")
    return max(0, (q + f - g + 1) * (min(-i, g) - q - 1))


def projdim_witness(j: int, i: int, q: int, f: int, g: int) -> Partition | None:
    """A shape of size ``j`` witnessing a nonzero syzygy contribution in
    homological degree ``j``, or None if the search space is empty.

    Two box regions can absorb the new shape: to the right of the V-side
    rectangle (height and column bounds from the W* side), or below it
    (width bounds from both sides).  Guaranteed to succeed whenever ``j``
    is at most the projective-dimension lower bound.
    """
    if j < 0:
        raise ValueError("homological degree must be nonnegative")
    k = g - 1 - q
    l = -i - q - 1
    candidates = set(partitions_of(j, min(k, l), g - 1 - k))
    candidates.update(partitions_of(j, f - k, min(l + 1, k + 1)))
    if not candidates:
        return None
    return min(candidates, key=sort_key)
