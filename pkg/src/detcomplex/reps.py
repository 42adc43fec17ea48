"""Irreducible representations of GL(V), GL(W*), and their product.

Dimensions come from the Weyl product formula in exact integer arithmetic.
Weights on the W*-side are stored with any determinant twist folded into
the entries; ``split_twist`` recovers the partition-plus-twist reading for
display.  Tensor decompositions are the multiplicity-free Pieri and Cauchy
formulas, which is all the family of complexes needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .partitions import (
    Partition,
    Weight,
    check_weight,
    conjugate,
    horizontal_strips,
    pad,
    partitions_of,
    sort_key,
    vertical_strips,
)


def dim_weight(w: Weight, n: int) -> int:
    """Dimension of the irreducible GL_n representation with highest
    weight ``w`` (Weyl product formula, exact)."""
    check_weight(w, n)
    num = 1
    den = 1
    for a in range(n):
        for b in range(a + 1, n):
            num *= w[a] - w[b] + b - a
            den *= b - a
    return num // den


def dual_weight(w: Weight) -> Weight:
    """Highest weight of the dual representation: reverse and negate."""
    return tuple(-x for x in reversed(w))


def det_twist(w: Weight, m: int) -> Weight:
    """Tensor by the m-th power of the determinant character."""
    return tuple(x + m for x in w)


def split_twist(w: Weight) -> tuple[Partition, int]:
    """Write ``w`` as partition plus ``m * (1, ..., 1)`` with the partition
    part ending in zero."""
    if not w:
        return (), 0
    m = w[-1]
    from .partitions import trim

    return trim(x - m for x in w), m


@dataclass(frozen=True, order=True)
class BiIrrep:
    """An irreducible GL(V) x GL(W*) bimodule.

    ``v`` is a partition (trimmed); ``w`` is a full-length weight on the
    W*-side with determinant twists folded in; ``degree`` is the V-box
    count, the internal grading every report uses.
    """

    v: Partition
    w: Weight
    degree: int


def _canon_key(key) -> tuple:
    if isinstance(key, BiIrrep):
        return (key.degree, sort_key(key.v), key.w)
    return (sum(key), tuple(-x for x in key))


class RepSum:
    """Formal sum of irreducibles with positive integer multiplicities.

    Keys are either ``BiIrrep`` values or bare weight/partition tuples for
    single-group sums.  Iteration order is canonical.
    """

    def __init__(self, terms: Iterable[tuple[object, int]] = ()):
        acc: dict = {}
        for key, mult in terms:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                acc[key] = acc.get(key, 0) + mult
        self._terms = acc

    def items(self) -> list[tuple[object, int]]:
        return sorted(self._terms.items(), key=lambda kv: _canon_key(kv[0]))

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def __getitem__(self, key) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, RepSum) and self._terms == other._terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {m}" for k, m in self.items())
        return f"RepSum({{{inner}}})"


class GradedRepSum:
    """A RepSum of BiIrreps organized by internal degree."""

    def __init__(self, terms: Iterable[tuple[BiIrrep, int]] = ()):
        by_degree: dict[int, list[tuple[BiIrrep, int]]] = {}
        for key, mult in terms:
            by_degree.setdefault(key.degree, []).append((key, mult))
        self._by_degree = {d: RepSum(pairs) for d, pairs in by_degree.items() if RepSum(pairs)}

    def degrees(self) -> list[int]:
        return sorted(self._by_degree)

    def at(self, degree: int) -> RepSum:
        return self._by_degree.get(degree, RepSum())

    def items(self) -> Iterator[tuple[int, RepSum]]:
        for d in self.degrees():
            yield d, self._by_degree[d]

    def all_terms(self) -> list[tuple[BiIrrep, int]]:
        out = []
        for _, rep in self.items():
            out.extend(rep.items())
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedRepSum) and dict(self.items()) == dict(other.items())

    def __bool__(self) -> bool:
        return bool(self._by_degree)


def bi_dim(b: BiIrrep, f: int, g: int) -> int:
    """Dimension of a bimodule term as a GL(V) x GL(W*) representation."""
    return dim_weight(pad(b.v, f), f) * dim_weight(b.w, g)


def pieri_sym(p: Partition, k: int, n: int) -> RepSum:
    """Decompose S_p tensor Sym_k of an n-dimensional space: one term per
    horizontal strip."""
    if len(p) > n:
        raise ValueError(f"shape {p!r} does not fit in rank {n}")
    return RepSum((eta, 1) for eta in horizontal_strips(p, k, n))


def pieri_ext(p: Partition, k: int, n: int) -> RepSum:
    """Decompose S_p tensor the k-th exterior power: one term per vertical
    strip."""
    if len(p) > n:
        raise ValueError(f"shape {p!r} does not fit in rank {n}")
    if not 0 <= k <= n:
        raise ValueError(f"exterior degree {k} out of range for rank {n}")
    return RepSum((eta, 1) for eta in vertical_strips(p, k, n))


def cauchy_sym(d: int, f: int, g: int) -> RepSum:
    """Sym_d(V tensor W*) as a sum of paired Schur bimodules."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    terms = []
    for lam in partitions_of(d, min(f, g)):
        terms.append((BiIrrep(lam, pad(lam, g), d), 1))
    return RepSum(terms)


def cauchy_ext(j: int, f: int, g: int) -> RepSum:
    """The j-th exterior power of V tensor W*: shapes paired with their
    conjugates."""
    if not 0 <= j <= f * g:
        raise ValueError(f"exterior degree {j} out of range for {f}x{g}")
    terms = []
    for mu in partitions_of(j, f):
        tmu = conjugate(mu)
        if len(tmu) <= g:
            terms.append((BiIrrep(mu, pad(tmu, g), j), 1))
    return RepSum(terms)


def sym_dim(m: int, n: int) -> int:
    """Dimension of Sym_m of an n-dimensional space."""
    if m < 0:
        return 0
    return comb(n + m - 1, m)
