"""Command-line surface.

Every command validates its parameters against the documented safe ranges,
dispatches to one engine call, and prints a canonical JSON report (or a
small text rendering with ``--format text``).  Exit codes: 0 success, 2
usage error, 3 violated internal cross-check.  Errors are emitted to
stderr as a JSON object naming the violated constraint.

The report path can also write files: ``--outdir`` (or the environment
variable ``DETCPLX_OUTDIR``) makes ``region-diagram`` save the JSON, text,
delimited CSV, and matplotlib SVG renderings side by side.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import serialize
from .bbw import bbw, bbw_tangent
from .cohomology import (
    euler_check,
    graded_cohomology,
    indexed_cohomology,
    lift_obstruction,
)
from .complexes import (
    InternalCheckError,
    build_c,
    build_d,
    build_d_ik,
    build_k,
)
from .lattices import (
    cohomology_lattice,
    ideal_lattice,
    projdim_lower_bound,
    projdim_witness,
    quotient_lattice,
)
from .partitions import pad, trim
from .regions import (
    region_data,
    render_figure,
    render_marks_csv,
    render_terms_csv,
    render_text,
)
from .reps import bi_dim, cauchy_ext, cauchy_sym, dim_weight, pieri_ext, pieri_sym

MAX_F = 40
MAX_ABS_TWIST = 200
MAX_DEG = 64


class UsageError(ValueError):
    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


def _parse_parts(text: str):
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}", "comma-separated integers")


def _check(cond: bool, message: str, constraint: str) -> None:
    if not cond:
        raise UsageError(message, constraint)


def _check_shape(f: int, g: int) -> None:
    _check(1 <= g <= f, f"need f >= g >= 1, got f={f}, g={g}", "f >= g >= 1")
    _check(f <= MAX_F, f"f={f} exceeds the supported bound {MAX_F}", f"f <= {MAX_F}")


def _check_twist(i: int) -> None:
    _check(abs(i) <= MAX_ABS_TWIST, f"|i|={abs(i)} too large", f"|i| <= {MAX_ABS_TWIST}")


def _check_maxdeg(maxdeg: int) -> None:
    _check(0 <= maxdeg <= MAX_DEG, f"maxdeg={maxdeg} out of range", f"0 <= maxdeg <= {MAX_DEG}")


def _check_index(q: int, g: int) -> None:
    _check(0 <= q <= g - 1, f"q={q} outside [0, {g - 1}]", "0 <= q <= g-1")


def _check_form_degree(k: int, g: int) -> None:
    _check(0 <= k <= g - 1, f"k={k} outside [0, {g - 1}]", "0 <= k <= g-1")


def cmd_bbw(args) -> tuple[dict, str]:
    g = args.g
    _check(1 <= g <= MAX_F, f"g={g} out of range", f"1 <= g <= {MAX_F}")
    _check_twist(args.i)
    lam = _parse_parts(args.lam)
    if args.tangent:
        res = bbw_tangent(args.i, trim(lam), g)
    else:
        full = lam + (0,) * (g - 1 - len(lam))
        _check(len(full) == g - 1, f"weight {lam!r} longer than {g - 1}", "len(lam) <= g-1")
        res = bbw(args.i, full, g)
    data = serialize.bbw_json(res, g)
    if res.is_zero:
        text = "no cohomology\n"
    else:
        text = f"q={res.q}  weight {res.w_weight} on W  (dual {res.w_dual})  dim {res.dim(g)}\n"
    return data, text


def cmd_pieri(args) -> tuple[dict, str]:
    lam = trim(_parse_parts(args.lam))
    _check(args.k >= 0, "box count must be nonnegative", "k >= 0")
    _check(1 <= args.n <= MAX_F, f"rank {args.n} out of range", f"1 <= n <= {MAX_F}")
    rep = (pieri_sym if args.kind == "sym" else pieri_ext)(lam, args.k, args.n)
    shapes = rep.keys()
    data = {
        "kind": args.kind,
        "lam": serialize.partition_json(lam),
        "k": args.k,
        "n": args.n,
        "terms": [serialize.partition_json(s) for s in shapes],
        "dims": [serialize.decimal(dim_weight(pad(s, args.n), args.n)) for s in shapes],
    }
    text = "\n".join(str(s) for s in shapes) + "\n"
    return data, text


def cmd_cauchy(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check(args.deg >= 0, "degree must be nonnegative", "d >= 0")
    if args.kind == "sym":
        rep = cauchy_sym(args.deg, args.f, args.g)
    else:
        _check(args.deg <= args.f * args.g, "degree exceeds f*g", "j <= f*g")
        rep = cauchy_ext(args.deg, args.f, args.g)
    data = {
        "kind": args.kind,
        "deg": args.deg,
        "f": args.f,
        "g": args.g,
        "terms": serialize.repsum_json(rep),
        "dims": [serialize.decimal(bi_dim(b, args.f, args.g)) for b in rep.keys()],
    }
    text = "\n".join(f"{b.v} x {b.w}" for b in rep.keys()) + "\n"
    return data, text


def cmd_complex(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    builder = {"k": build_k, "c": build_c, "d": build_d}[args.family]
    cx = builder(args.i, args.f, args.g)
    data = serialize.complex_json(cx)
    lines = [
        f"{t.part}  p={t.position}  norm={t.norm_position}  rank={t.rank}  "
        f"gen_deg={t.gen_degree}" for t in cx.terms
    ]
    if cx.splice:
        lines.append(f"splice {cx.splice.from_position} -> {cx.splice.to_position}")
    return data, "\n".join(lines) + "\n"


def cmd_d_ik(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    _check_form_degree(args.k, args.g)
    cx = build_d_ik(args.i, args.k, args.f, args.g)
    data = serialize.complex_json(cx)
    lines = [
        f"{t.part}  p={t.position}  q={t.row}  rank={t.rank}" for t in cx.terms
    ]
    return data, "\n".join(lines) + "\n"


def cmd_cohom(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    _check_index(args.q, args.g)
    _check_maxdeg(args.maxdeg)
    if args.route == "indexed":
        _check(args.i < 0, "the indexed route needs a negative twist", "i < 0")
        rep = indexed_cohomology(args.i, args.q, args.f, args.g, args.maxdeg)
    else:
        rep = graded_cohomology(args.i, args.q, args.f, args.g, args.maxdeg)
    data = serialize.cohomology_json(rep)
    data["route"] = args.route
    text = (
        f"lowest degree: {rep.lowest_degree}\n"
        f"dims by degree: {list(rep.hilbert)}\n"
    )
    return data, text


def cmd_euler(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    _check_maxdeg(args.maxdeg)
    rep = euler_check(args.i, args.f, args.g, args.maxdeg)
    data = serialize.euler_json(rep)
    verdict = "balanced" if rep.balanced else f"MISMATCH at degree {rep.first_mismatch}"
    text = f"{verdict}\nseries: {list(rep.lhs_series)}\n"
    return data, text, (0 if rep.balanced else 3)


def cmd_lattice(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_maxdeg(args.maxdeg)
    if args.kind == "ideal":
        lat = ideal_lattice(trim(_parse_parts(args.lam)), args.f, args.g, args.maxdeg)
    elif args.kind == "quotient":
        _check(args.l is not None and args.k is not None, "quotient needs --l and --k", "--l/--k")
        lat = quotient_lattice(args.l, args.k, args.f, args.g, args.maxdeg)
    else:
        _check(args.i is not None and args.q is not None, "cohomology needs --i and --q", "--i/--q")
        _check_twist(args.i)
        _check(args.i < 0, "cohomology lattices need a negative twist", "i < 0")
        _check_index(args.q, args.g)
        lat = cohomology_lattice(args.i, args.q, args.f, args.g, args.maxdeg)
    data = serialize.lattice_json(lat)
    lines = []
    for deg in lat.degrees():
        row = "  ".join(f"{n.v}|{n.w}" for n in lat.nodes_at(deg))
        lines.append(f"deg {deg}: {row}")
    return data, "\n".join(lines) + "\n"


def cmd_projdim(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    _check(args.i < 0, "the bound is stated for negative twists", "i < 0")
    _check_index(args.q, args.g)
    bound = projdim_lower_bound(args.i, args.q, args.f, args.g)
    degrees = [args.j] if args.j is not None else list(range(bound + 1))
    witnesses = {}
    for j in degrees:
        _check(j >= 0, "homological degree must be nonnegative", "j >= 0")
        w = projdim_witness(j, args.i, args.q, args.f, args.g)
        witnesses[str(j)] = serialize.partition_json(w) if w is not None else None
    data = {
        "i": args.i, "q": args.q, "f": args.f, "g": args.g,
        "bound": bound, "witnesses": witnesses,
    }
    text = f"projective dimension >= {bound}\n"
    return data, text


def cmd_lift(args) -> tuple[dict, str]:
    _check(1 <= args.g <= MAX_F, f"g={args.g} out of range", f"1 <= g <= {MAX_F}")
    _check_twist(args.i)
    _check_form_degree(args.k, args.g)
    _check_maxdeg(args.maxdeg)
    found = lift_obstruction(args.k, args.i, args.g, args.maxdeg)
    data = serialize.witnesses_json(found)
    data.update({"g": args.g, "k": args.k, "i": args.i, "maxdeg": args.maxdeg,
                 "obstructed": bool(found)})
    text = f"{len(found)} witnesses up to degree {args.maxdeg}\n"
    return data, text


def cmd_region(args) -> tuple[dict, str]:
    _check_shape(args.f, args.g)
    _check_twist(args.i)
    if args.k is not None:
        _check_form_degree(args.k, args.g)
    diagram = region_data(args.f, args.g, args.i, args.k)
    cx_data = serialize.complex_json(diagram.complex)
    data = {
        "caption": diagram.caption,
        "kind": diagram.kind,
        "marks": [list(m) for m in diagram.marks],
        "diagonals": list(diagram.diagonals),
        "augmentation": list(diagram.augmentation) if diagram.augmentation else None,
        "complex": cx_data,
    }
    text = render_text(diagram)

    outdir = args.outdir or os.environ.get("DETCPLX_OUTDIR")
    if outdir or args.format == "svg":
        outdir = outdir or "."
        os.makedirs(outdir, exist_ok=True)
        stem = f"region_f{args.f}_g{args.g}_i{args.i}"
        if args.k is not None:
            stem += f"_k{args.k}"
        base = os.path.join(outdir, stem)
        with open(base + ".json", "w") as handle:
            handle.write(serialize.dumps(data) + "\n")
        with open(base + ".txt", "w") as handle:
            handle.write(text)
        with open(base + "_terms.csv", "w") as handle:
            handle.write(render_terms_csv(diagram))
        with open(base + "_marks.csv", "w") as handle:
            handle.write(render_marks_csv(diagram))
        render_figure(diagram, base + ".svg")
        data["files"] = [base + ext for ext in
                         (".json", ".txt", "_terms.csv", "_marks.csv", ".svg")]
    if args.format == "csv":
        text = render_terms_csv(diagram)
    return data, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detcomplex",
        description="Exact combinatorics of the complex family of a generic matrix",
    )
    parser.add_argument("--format", choices=["json", "text", "svg", "csv"],
                        default="json", help="output rendering (svg/csv: region-diagram only)")
    parser.add_argument("--outdir", default=None,
                        help="directory for report files (env DETCPLX_OUTDIR)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bbw", help="cohomology of a twisted Schur bundle")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--lam", default="")
    p.add_argument("--tangent", action="store_true",
                   help="read --lam as a partition on the twisted tangent bundle")
    p.set_defaults(handler=cmd_bbw)

    p = sub.add_parser("pieri", help="tensor with a symmetric or exterior power")
    p.add_argument("--kind", choices=["sym", "ext"], required=True)
    p.add_argument("--lam", default="")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_pieri)

    p = sub.add_parser("cauchy", help="decompose a power of V tensor W*")
    p.add_argument("--kind", choices=["sym", "ext"], required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=cmd_cauchy)

    p = sub.add_parser("complex", help="terms of a family member")
    p.add_argument("--family", choices=["k", "c", "d"], default="d")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=cmd_complex)

    p = sub.add_parser("d-ik", help="terms of a two-parameter family member")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(handler=cmd_d_ik)

    p = sub.add_parser("cohom", help="graded cohomology report")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=10)
    p.add_argument("--route", choices=["sweep", "indexed"], default="sweep")
    p.set_defaults(handler=cmd_cohom)

    p = sub.add_parser("euler-check", help="Euler-characteristic balance")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=10)
    p.set_defaults(handler=cmd_euler)

    p = sub.add_parser("lattice", help="equivariant module lattice")
    p.add_argument("--kind", choices=["ideal", "quotient", "cohomology"], required=True)
    p.add_argument("--lam", default="")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=10)
    p.set_defaults(handler=cmd_lattice)

    p = sub.add_parser("projdim", help="projective-dimension bound and witnesses")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--j", type=int, default=None)
    p.set_defaults(handler=cmd_projdim)

    p = sub.add_parser("lift-check", help="exceptional-sequence lift obstruction")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=10)
    p.set_defaults(handler=cmd_lift)

    p = sub.add_parser("region-diagram", help="grey-region diagram of a member")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(handler=cmd_region)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except UsageError as err:
        sys.stderr.write(serialize.dumps(
            {"error": {"message": str(err), "constraint": err.constraint}}) + "\n")
        return 2
    except InternalCheckError as err:
        sys.stderr.write(serialize.dumps(
            {"error": {"message": str(err), "kind": "internal-invariant"}}) + "\n")
        return 3
    except ValueError as err:
        sys.stderr.write(serialize.dumps({"error": {"message": str(err)}}) + "\n")
        return 2
    data, text = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    if args.format in ("text", "csv", "svg"):
        sys.stdout.write(text)
    else:
        sys.stdout.write(serialize.dumps(data) + "\n")
    if code:
        sys.stderr.write(serialize.dumps(
            {"error": {"message": "a cross-check failed; see report",
                       "kind": "internal-invariant"}}) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
