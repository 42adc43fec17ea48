"""Term-level descriptions of the complexes attached to a generic f x g matrix.

The family splices a strip of symmetric powers (tag ``K``, the row the
Eagon-Northcott and Buchsbaum-Rim complexes live on) with a strip of dual
symmetric powers twisted by the top exterior power (tag ``C``).  The
two-parameter variant adds a single middle term (tag ``MID``).  Differentials
are never materialized: a complex is its per-position rank, generator
representation, and generator degree, plus splice markers.

Positions come in two flavors and every report shows both: the native
cohomological position of the strip a term belongs to, and a normalized
contiguous index that places the leftmost term of a spliced complex at -f.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .partitions import Partition, Weight
from .reps import dim_weight, dual_weight, sym_dim
from .bbw import bbw


class InternalCheckError(AssertionError):
    """A structural cross-check failed; callers must treat this as fatal."""


@dataclass(frozen=True)
class ComplexTerm:
    position: int  # native cohomological position p
    norm_position: int  # contiguous index, leftmost spliced term at -f
    row: int  # height of the strip the term sits on (0 for K, g-1 for C)
    part: str  # "K", "C", or "MID"
    rank: int
    v_weight: Partition  # generator shape on the V side, always a column
    w_weight: Weight  # generator weight on the W* side, twist folded in
    gen_degree: int  # V-box count of the generators


@dataclass(frozen=True)
class Splice:
    from_position: int
    to_position: int
    page: int  # spectral page carrying the splice differential


@dataclass(frozen=True)
class ComplexDescription:
    kind: str  # "K", "C", "D", or "D_ik"
    i: int
    f: int
    g: int
    terms: tuple[ComplexTerm, ...]
    splices: tuple[Splice, ...] = ()
    k: int | None = None  # form degree, two-parameter family only

    @property
    def splice(self) -> Splice | None:
        return self.splices[0] if self.splices else None

    def ranks(self) -> list[int]:
        return [t.rank for t in self.terms]

    def positions(self) -> list[int]:
        return [t.position for t in self.terms]

    def gen_degrees(self) -> list[int]:
        return [t.gen_degree for t in self.terms]


def _check_shape(f: int, g: int) -> None:
    if not f >= g >= 1:
        raise ValueError(f"need f >= g >= 1, got f={f}, g={g}")


def _k_term(p: int, i: int, f: int, g: int, norm: int | None = None) -> ComplexTerm:
    rank = comb(f, -p) * sym_dim(i + p, g)
    w = (0,) * (g - 1) + (-(i + p),)
    return ComplexTerm(p, p if norm is None else norm, 0, "K", rank, (1,) * (-p), w, -p)


def _c_term(p: int, i: int, f: int, g: int) -> ComplexTerm:
    rank = comb(f, -p) * sym_dim(-i - p, g)
    w = (-i - p + 1,) + (1,) * (g - 1)
    return ComplexTerm(p, p, g - 1, "C", rank, (1,) * (-p), w, -p)


def build_k(i: int, f: int, g: int) -> ComplexDescription:
    """The symmetric-power strip: position p carries the -p-th exterior
    power of F tensored with Sym_{i+p} G.  Empty for i < 0."""
    _check_shape(f, g)
    lo = max(-i, -f)
    terms = tuple(_k_term(p, i, f, g) for p in range(lo, 1)) if lo <= 0 else ()
    return ComplexDescription("K", i, f, g, terms)


def build_c(i: int, f: int, g: int) -> ComplexDescription:
    """The dual strip: position p carries the -p-th exterior power of F
    tensored with the dual of Sym_{-i-p} G and the top exterior power of
    the dual of G."""
    _check_shape(f, g)
    hi = min(0, -i)
    terms = tuple(_c_term(p, i, f, g) for p in range(-f, hi + 1)) if hi >= -f else ()
    return ComplexDescription("C", i, f, g, terms)


def build_d(i: int, f: int, g: int) -> ComplexDescription:
    """The member of the spliced family at twist ``i``.

    Negative twists give the pure dual strip, twists past f-g give the pure
    symmetric strip, and in between the two strips are joined by a splice
    marker from position -i-g to position -i.
    """
    _check_shape(f, g)
    if i <= -1:
        inner = build_c(i + g, f, g)
        return ComplexDescription("D", i, f, g, inner.terms)
    if i >= f - g + 1:
        inner = build_k(i, f, g)
        return ComplexDescription("D", i, f, g, inner.terms)
    c_terms = tuple(_c_term(p, i + g, f, g) for p in range(-f, -i - g + 1))
    k_terms = tuple(_k_term(p, i, f, g, norm=p - (g - 1)) for p in range(-i, 1))
    splice = Splice(-i - g, -i, g)
    return ComplexDescription("D", i, f, g, c_terms + k_terms, (splice,))


def build_d_ik(i: int, k: int, f: int, g: int) -> ComplexDescription:
    """The two-parameter family member at twist ``i`` and form degree ``k``.

    Three strips, each an exterior power of F against the pushforward of
    the k-th exterior power of the twisted cotangent bundle: a strip at
    height zero, a single middle term at height k, and a strip at height
    g-1.  Every W-side factor is cross-checked against the Borel-Weil-Bott
    algorithm; disagreement is a hard error.
    """
    _check_shape(f, g)
    if not 0 <= k <= g - 1:
        raise ValueError(f"form degree {k} out of range [0, {g - 1}]")
    d = i - k
    lam = (1,) * k
    terms: list[ComplexTerm] = []

    def norm(p: int, row: int) -> int:
        return p + row - (g - 1)

    for p in range(-f, min(-d - g, 0) + 1):
        w_dual = (-d - p - g + 1,) + (1,) * (g - 1 - k) + (0,) * k
        rank = comb(f, -p) * dim_weight(w_dual, g)
        _cross_check(i, k, p, g, g - 1, dual_weight(w_dual))
        terms.append(
            ComplexTerm(p, norm(p, g - 1), g - 1, "C", rank, (1,) * (-p), w_dual, -p)
        )
    if 0 <= k + d <= f:
        p = -k - d
        _cross_check(i, k, p, g, k, (0,) * g)
        terms.append(
            ComplexTerm(p, norm(p, k), k, "MID", comb(f, k + d), (1,) * (-p), (0,) * g, -p)
        )
    for p in range(max(-d + 1, -f), 1):
        w_form = (d + p,) + (1,) * k + (0,) * (g - 1 - k)
        rank = comb(f, -p) * dim_weight(w_form, g)
        _cross_check(i, k, p, g, 0, w_form)
        terms.append(
            ComplexTerm(p, norm(p, 0), 0, "K", rank, (1,) * (-p), dual_weight(w_form), -p)
        )

    terms.sort(key=lambda t: t.position)
    splices = []
    rows = [t.row for t in terms]
    if g - 1 in rows and k in rows and g - 1 != k:
        splices.append(Splice(min(0, -d - g), -k - d, g - k))
    if k in rows and 0 in rows and k != 0:
        splices.append(Splice(-k - d, max(-d + 1, -f), k + 1))
    return ComplexDescription("D_ik", i, f, g, tuple(terms), tuple(splices), k=k)


def _cross_check(i: int, k: int, p: int, g: int, row: int, w_form: Weight) -> None:
    result = bbw(i + p - k, (1,) * k + (0,) * (g - 1 - k), g)
    if result.q != row or result.w_weight != w_form:
        raise InternalCheckError(
            f"strip term at p={p} disagrees with Borel-Weil-Bott for "
            f"i={i}, k={k}, g={g}: expected (q={row}, {w_form}), "
            f"got (q={result.q}, {result.w_weight})"
        )


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    i: int
    dual_i: int
    ranks: tuple[int, ...]
    dual_ranks: tuple[int, ...]
    degrees: tuple[int, ...]
    dual_degrees: tuple[int, ...]


def duality_check(i: int, f: int, g: int) -> DualityReport:
    """Rank-level duality: reversing the family member at twist ``i`` must
    reproduce the member at twist f-g-i, with generator degrees matched by
    d -> f-d."""
    left = build_d(i, f, g)
    right = build_d(f - g - i, f, g)
    ranks = tuple(left.ranks())
    dual_ranks = tuple(right.ranks())
    degrees = tuple(left.gen_degrees())
    dual_degrees = tuple(right.gen_degrees())
    ok = dual_ranks == ranks[::-1] and dual_degrees == tuple(
        f - d for d in degrees[::-1]
    )
    return DualityReport(ok, i, f - g - i, ranks, dual_ranks, degrees, dual_degrees)


def hilbert_numerator(c: ComplexDescription, maxdeg: int) -> list[int]:
    """Alternating rank generating polynomial, sign by native position:
    coefficient of u^d is the signed rank of the terms generated in degree
    d.  The full Hilbert series is this over (1-u)^(f*g)."""
    coeffs = [0] * (maxdeg + 1)
    for t in c.terms:
        if t.gen_degree <= maxdeg:
            coeffs[t.gen_degree] += (-1 if t.position % 2 else 1) * t.rank
    return coeffs


def euler_numerator(c: ComplexDescription) -> dict[int, int]:
    """Alternating rank polynomial with the sign read off the strip rows:
    exponent is position + (g-1) - row.  This is the convention under which
    one Euler identity covers pure, spliced, and two-parameter members."""
    coeffs: dict[int, int] = {}
    for t in c.terms:
        sign = -1 if (t.position + (c.g - 1) - t.row) % 2 else 1
        coeffs[t.gen_degree] = coeffs.get(t.gen_degree, 0) + sign * t.rank
    return {d: v for d, v in sorted(coeffs.items()) if v}
