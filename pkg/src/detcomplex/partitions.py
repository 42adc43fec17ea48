"""Partitions, dominant weights, and Young-diagram combinatorics.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros trimmed; the empty tuple is the empty partition.  Dominant
weights are tuples of weakly decreasing integers (negative entries allowed)
whose length is part of the data, so they are never trimmed.

All enumeration here is deterministic: partitions are listed by size first
and then in descending lexicographic order of their parts, so (3) comes
before (2,1) and (2) before (1,1).
"""

from __future__ import annotations

from typing import Iterable, Iterator

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def trim(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of row lengths into a partition tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(p[t] < p[t + 1] for t in range(len(p) - 1)) or (p and p[-1] < 0):
        raise ValueError(f"not a partition: {tuple(parts)!r}")
    return p


def check_weight(entries: Iterable[int], n: int | None = None) -> Weight:
    """Validate a dominant weight; ``n`` pins the expected length."""
    w = tuple(int(x) for x in entries)
    if n is not None and len(w) != n:
        raise ValueError(f"weight {w!r} does not have length {n}")
    if any(w[t] < w[t + 1] for t in range(len(w) - 1)):
        raise ValueError(f"weight {w!r} is not weakly decreasing")
    return w


def size(p: Partition) -> int:
    return sum(p)


def height(p: Partition) -> int:
    return len(p)


def pad(p: Partition, n: int) -> Weight:
    """Extend a partition by zeros to a weight of length ``n``."""
    if len(p) > n:
        raise ValueError(f"partition {p!r} has more than {n} parts")
    return p + (0,) * (n - len(p))


def part(p: Partition, t: int) -> int:
    """Row length at 1-based index ``t``, reading missing rows as zero."""
    if t < 1:
        raise IndexError("rows are indexed from 1")
    return p[t - 1] if t <= len(p) else 0


def sort_key(p: Partition) -> tuple[int, tuple[int, ...]]:
    """Canonical (size, descending-lex) ordering key."""
    return (sum(p), tuple(-x for x in p))


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: column lengths become row lengths."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c + 1) for c in range(p[0]))


def contains(big: Partition, small: Partition) -> bool:
    """Diagram containment: every row of ``small`` fits inside ``big``."""
    if len(small) > len(big):
        return False
    return all(big[t] >= small[t] for t in range(len(small)))


def vertical_strips(p: Partition, k: int, max_rows: int) -> list[Partition]:
    """All ways of adding ``k`` boxes to ``p``, no two in the same row.

    Results are partitions of height at most ``max_rows`` containing ``p``,
    each row grown by at most one box, listed in canonical order.
    """
    if k < 0:
        raise ValueError("box count must be nonnegative")
    if max_rows < len(p):
        raise ValueError("row bound is below the height of the base shape")
    out: list[Partition] = []

    def grow(row: int, left: int, acc: list[int]) -> None:
        if left == 0 and row >= len(p):
            out.append(trim(acc + list(p[row:])))
            return
        if row >= max_rows or left > max_rows - row:
            return
        base = p[row] if row < len(p) else 0
        prev = acc[-1] if acc else None
        if left > 0 and (prev is None or base + 1 <= prev):
            grow(row + 1, left - 1, acc + [base + 1])
        if prev is None or base <= prev:
            grow(row + 1, left, acc + [base])

    grow(0, k, [])
    return sorted(set(out), key=sort_key)


def horizontal_strips(p: Partition, k: int, max_rows: int) -> list[Partition]:
    """All ways of adding ``k`` boxes to ``p``, no two in the same column.

    Equivalent to vertical strips of the conjugate shape; listed in
    canonical order and clipped to height at most ``max_rows``.
    """
    if k < 0:
        raise ValueError("box count must be nonnegative")
    if max_rows < len(p):
        return []
    out: list[Partition] = []
    rows = min(max_rows, len(p) + 1)

    def grow(row: int, left: int, acc: list[int]) -> None:
        if row == rows:
            if left == 0:
                out.append(trim(acc))
            return
        base = p[row] if row < len(p) else 0
        # no two added boxes share a column: row may grow at most to the
        # length of the previous row of the base shape
        cap = p[row - 1] if row > 0 else base + left
        hi = min(cap, base + left)
        for val in range(hi, base - 1, -1):
            grow(row + 1, left - (val - base), acc + [val])

    grow(0, k, [])
    return sorted(set(out), key=sort_key)


def partitions_of(n: int, max_rows: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of exactly ``n`` with bounded height and part size."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_rows <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_rows < n:
            break
        for rest in partitions_of(n - first, max_rows - 1, first):
            yield (first,) + rest


def partitions(max_size: int, max_rows: int) -> Iterator[Partition]:
    """All partitions of size up to ``max_size`` and height up to
    ``max_rows``, each exactly once, in canonical order."""
    if max_size < 0 or max_rows < 0:
        raise ValueError("bounds must be nonnegative")
    for n in range(max_size + 1):
        yield from partitions_of(n, max_rows)


def ssyt_count(p: Partition, n: int) -> int:
    """Count semistandard tableaux of shape ``p`` with entries in 1..n.

    Rows weakly increase, columns strictly increase.  Brute force; serves
    as an independent oracle for Weyl-formula dimensions.
    """
    if not p:
        return 1
    if len(p) > n:
        return 0
    rows = [[0] * r for r in p]

    def fill(r: int, c: int) -> int:
        if r == len(p):
            return 1
        nr, nc = (r, c + 1) if c + 1 < p[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        total = 0
        for v in range(lo, n + 1):
            rows[r][c] = v
            total += fill(nr, nc)
        return total

    return fill(0, 0)


def add_to_rows(p: Partition, k: int) -> Partition:
    """Add one box at the end of each of the first ``k`` rows."""
    if k < 0:
        raise ValueError("row count must be nonnegative")
    grown = [part(p, t) + 1 for t in range(1, k + 1)]
    return trim(grown + list(p[k:]))


def add_to_columns(p: Partition, l: int) -> Partition:
    """Add one box at the bottom of each of the first ``l`` columns."""
    if l < 0:
        raise ValueError("column count must be nonnegative")
    if l == 0:
        return p
    # appending one box to columns 1..l inserts a row of length l at the
    # unique position keeping the shape a partition
    pos = len(p)
    while pos > 0 and p[pos - 1] < l:
        pos -= 1
    return trim(p[:pos] + (l,) + p[pos:])
