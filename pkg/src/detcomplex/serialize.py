"""Canonical JSON views of every report type.

Output is deterministic: keys sorted, compact separators, and every value
that can outgrow 53 bits (dimensions, series coefficients) rendered as a
decimal string.  Partitions serialize as plain arrays, weights as
``{"n": ..., "entries": [...]}``.
"""

from __future__ import annotations

import json

from .bbw import BBWResult
from .cohomology import (
    CohomologyReport,
    EulerReport,
    LiftWitness,
    SupportReport,
    TwistedSupportReport,
)
from .complexes import ComplexDescription, DualityReport
from .lattices import Lattice
from .reps import RepSum, BiIrrep


def decimal(x: int) -> str:
    return str(int(x))


def weight_json(w) -> dict:
    return {"n": len(w), "entries": [int(x) for x in w]}


def partition_json(p) -> list[int]:
    return [int(x) for x in p]


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def bbw_json(res: BBWResult, g: int) -> dict:
    if res.is_zero:
        return {"zero": True}
    return {
        "q": res.q,
        "w_weight": list(res.w_weight),
        "w_dual": list(res.w_dual),
        "dim": decimal(res.dim(g)),
    }


def repsum_json(rep: RepSum) -> list[dict]:
    out = []
    for key, mult in rep.items():
        if isinstance(key, BiIrrep):
            out.append(
                {
                    "v": partition_json(key.v),
                    "w": list(key.w),
                    "mult": mult,
                    "deg": key.degree,
                }
            )
        else:
            out.append({"w": list(key), "mult": mult})
    return out


def complex_json(c: ComplexDescription) -> dict:
    data = {
        "kind": c.kind,
        "i": c.i,
        "f": c.f,
        "g": c.g,
        "terms": [
            {
                "pos": t.position,
                "norm_pos": t.norm_position,
                "row": t.row,
                "part": t.part,
                "rank": decimal(t.rank),
                "gen_deg": t.gen_degree,
                "v": partition_json(t.v_weight),
                "w": list(t.w_weight),
            }
            for t in c.terms
        ],
        "splice": None,
        "splices": [
            {"from": s.from_position, "to": s.to_position, "page": s.page}
            for s in c.splices
        ],
    }
    if c.splice is not None:
        data["splice"] = {"from": c.splice.from_position, "to": c.splice.to_position}
    if c.k is not None:
        data["k"] = c.k
    return data


def cohomology_json(rep: CohomologyReport) -> dict:
    return {
        "i": rep.i,
        "q": rep.q,
        "f": rep.f,
        "g": rep.g,
        "maxdeg": rep.maxdeg,
        "lowest_degree": rep.lowest_degree,
        "sound_maxdeg": rep.sound_maxdeg,
        "hilbert": [decimal(x) for x in rep.hilbert],
        "decomposition": {
            str(d): repsum_json(s) for d, s in rep.decomposition.items()
        },
    }


def euler_json(rep: EulerReport) -> dict:
    data = {
        "i": rep.i,
        "f": rep.f,
        "g": rep.g,
        "maxdeg": rep.maxdeg,
        "balanced": rep.balanced,
        "first_mismatch": rep.first_mismatch,
        "numerator": {str(e): decimal(c) for e, c in rep.numerator},
        "lhs_series": [decimal(x) for x in rep.lhs_series],
        "rhs_series": [decimal(x) for x in rep.rhs_series],
    }
    if rep.resolution_numerator is not None:
        data["resolution_numerator"] = {
            str(e): decimal(c) for e, c in rep.resolution_numerator
        }
    return data


def support_json(rep: SupportReport | TwistedSupportReport) -> dict:
    if isinstance(rep, SupportReport):
        return {
            "kind": rep.kind,
            "i": rep.i,
            "f": rep.f,
            "g": rep.g,
            "entries": [{"j": j, "q": q} for j, q in rep.entries],
            "intersections": [list(s) for s in rep.intersections],
            "augmentation": list(rep.augmentation) if rep.augmentation else None,
            "module": rep.module,
        }
    return {
        "kind": rep.kind,
        "i": rep.i,
        "k": rep.k,
        "f": rep.f,
        "g": rep.g,
        "diagonals": list(rep.diagonals),
        "intersections": [list(s) for s in rep.intersections],
    }


def duality_json(rep: DualityReport) -> dict:
    return {
        "ok": rep.ok,
        "i": rep.i,
        "dual_i": rep.dual_i,
        "ranks": [decimal(r) for r in rep.ranks],
        "dual_ranks": [decimal(r) for r in rep.dual_ranks],
        "degrees": list(rep.degrees),
        "dual_degrees": list(rep.dual_degrees),
    }


def lattice_json(lat: Lattice) -> dict:
    return {
        "det_twisted": lat.det_twisted,
        "nodes": [
            {"v": partition_json(n.v), "w": partition_json(n.w), "deg": n.degree}
            for n in lat.nodes
        ],
        "edges": [list(e) for e in lat.edges],
    }


def witnesses_json(found: list[LiftWitness]) -> dict:
    return {
        "count": len(found),
        "witnesses": [
            {"q": w.q, "lam": partition_json(w.lam), "strip": partition_json(w.strip)}
            for w in found
        ],
    }
