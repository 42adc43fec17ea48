"""Region diagrams: the two strips, the grey region, and cohomology marks.

The renderer never recomputes any mathematics: marked intersections come
verbatim from the support predictors, terms and splices from the complex
builders.  Text output is a fixed-width ASCII grid suitable for golden
tests; the matplotlib figure is presentation-only.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .cohomology import predicted_support, twisted_family_support
from .complexes import ComplexDescription, build_d, build_d_ik


@dataclass(frozen=True)
class RegionDiagram:
    f: int
    g: int
    i: int
    k: int | None
    complex: ComplexDescription
    kind: str
    marks: tuple[tuple[int, int], ...]
    diagonals: tuple[int, ...]
    augmentation: tuple[int, int] | None
    caption: str


def region_data(f: int, g: int, i: int, k: int | None = None) -> RegionDiagram:
    """Assemble everything one diagram shows, marks taken from the support
    predictor so the picture and the engine can never disagree."""
    if k is None:
        cx = build_d(i, f, g)
        sup = predicted_support(i, f, g)
        marks = sup.intersections
        diagonals = tuple(sorted({p + row for p, row in marks}))
        caption = f"f={f}, g={g}, i={i}"
        if sup.kind == "resolution":
            caption += f" (resolution of {sup.module})"
        return RegionDiagram(
            f, g, i, None, cx, sup.kind, marks, diagonals, sup.augmentation, caption
        )
    cx = build_d_ik(i, k, f, g)
    tsup = twisted_family_support(i, k, f, g)
    caption = f"f={f}, g={g}, i={i}, k={k} (effective twist d={i - k})"
    if tsup.kind == "acyclic":
        caption += " (acyclic)"
    return RegionDiagram(
        f, g, i, k, cx, tsup.kind, tsup.intersections, tsup.diagonals, None, caption
    )


def _cells(d: RegionDiagram) -> dict[tuple[int, int], str]:
    cells: dict[tuple[int, int], str] = {}
    for t in d.complex.terms:
        cells[(t.position, t.row)] = {"K": "K", "C": "C", "MID": "M"}[t.part]
    for p, row in d.marks:
        cells[(p, row)] = "X"
    return cells


def render_text(d: RegionDiagram) -> str:
    """ASCII grid, one row per strip height, grey region shown as ':'."""
    top = d.g - 1
    cells = _cells(d)
    width = max(4, len(str(-d.f)) + 1)
    lines = [f"region diagram  {d.caption}"]
    lines.append("")
    for row in range(top, -1, -1):
        out = [f"q={row} |"]
        for p in range(-d.f, 1):
            mark = cells.get((p, row))
            if mark is None:
                mark = ":" if p + row >= 0 else "."
            out.append(mark.rjust(width))
        lines.append("".join(out))
    header = ["     "] + [str(p).rjust(width) for p in range(-d.f, 1)]
    lines.append("".join(header))
    lines.append("")
    for s in d.complex.splices:
        lines.append(
            f"splice: position {s.from_position} -> {s.to_position} (page {s.page})"
        )
    if d.augmentation is not None:
        lines.append(f"augmentation target at {d.augmentation} (not a cohomology mark)")
    if d.marks:
        spots = " ".join(f"({p},{q})" for p, q in d.marks)
        lines.append(f"marks ({len(d.marks)}): {spots}")
        lines.append("diagonals: " + " ".join(str(n) for n in d.diagonals))
    else:
        lines.append("marks (0): none")
    lines.append(f"verdict: {d.kind}")
    return "\n".join(lines) + "\n"


def render_terms_csv(d: RegionDiagram) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["part", "p", "q", "norm_p", "rank", "gen_degree", "v", "w"])
    for t in d.complex.terms:
        writer.writerow(
            [
                t.part,
                t.position,
                t.row,
                t.norm_position,
                t.rank,
                t.gen_degree,
                " ".join(map(str, t.v_weight)),
                " ".join(map(str, t.w_weight)),
            ]
        )
    return buf.getvalue()


def render_marks_csv(d: RegionDiagram) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["p", "q", "diagonal"])
    for p, q in d.marks:
        writer.writerow([p, q, p + q])
    return buf.getvalue()


def render_figure(d: RegionDiagram, path: str) -> None:
    """Draw the diagram with matplotlib and write it to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    top = d.g - 1
    fig, ax = plt.subplots(figsize=(8, 5))
    lid = top + 1.5
    ax.fill([0, -lid, 0], [0, lid, lid], color="0.8", zorder=0)
    for n in range(0, d.g):
        ax.plot([-(lid - n), 0], [lid, n], color="0.55", lw=0.6, zorder=1)

    by_row: dict[int, list[int]] = {}
    for t in d.complex.terms:
        by_row.setdefault(t.row, []).append(t.position)
    style = {0: "tab:blue", top: "tab:green"}
    for row, ps in sorted(by_row.items()):
        color = style.get(row, "tab:orange")
        ax.plot([min(ps), max(ps)], [row, row], lw=3, color=color, zorder=2)
        ax.plot(ps, [row] * len(ps), "o", ms=4, color=color, zorder=3)
    for s in d.complex.splices:
        rows = {t.position: t.row for t in d.complex.terms}
        y0 = rows.get(s.from_position, top)
        y1 = rows.get(s.to_position, 0)
        ax.annotate(
            "",
            xy=(s.to_position, y1),
            xytext=(s.from_position, y0),
            arrowprops=dict(arrowstyle="->", color="0.2", lw=1.0),
            zorder=4,
        )
    if d.marks:
        xs = [p for p, _ in d.marks]
        ys = [q for _, q in d.marks]
        ax.plot(xs, ys, "x", color="tab:red", ms=10, mew=2, zorder=5)
    if d.augmentation is not None:
        ax.plot(*d.augmentation, "s", color="0.2", ms=6, zorder=5)

    ax.set_xlim(-d.f - 0.8, 2.5)
    ax.set_ylim(-0.8, lid)
    ax.set_xlabel("p")
    ax.set_ylabel("q")
    ax.set_title(d.caption)
    ax.axhline(0, color="0.3", lw=0.8)
    ax.axvline(0, color="0.3", lw=0.8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
