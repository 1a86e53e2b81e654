"""Catalog records: every invariant of one family instance, as plain JSON data."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Sequence

from .families import (
    FamilyInstance,
    betti_numbers,
    canonical_self_intersection,
    delta_closed_form,
    instance_flags,
    kollar_weight_system,
    milnor_number_V,
    milnor_number_W,
    phi,
    v_singularity_weights,
    w_singularity_weights,
)
from .lambda_ring import LambdaProduct, lp_order_at_one, lp_value_at_one
from .milnor_orlik import NonIntegralError, WeightSystem, milnor_number, monodromy_char_poly


def _value_at_one(p: LambdaProduct) -> str | None:
    return str(lp_value_at_one(p)) if lp_order_at_one(p) == 0 else None


def _homotopy(inst: FamilyInstance) -> dict | None:
    if inst.family in ("H", "V"):
        return {"rational_type": f"P^{inst.n}", "real_class": None, "rational_class": None}
    if inst.homotopy_quadric:
        k = inst.n // 2
        return {
            "rational_type": None,
            "real_type": f"{(-1) ** k}-twisted quadric",
            "real_class": (-1) ** k,
            # the twist a itself is not determined by the available data
            "rational_class": None,
        }
    return None


def build_record(inst: FamilyInstance) -> dict:
    flags = instance_flags(inst)
    record: dict = {"instance": inst.to_json()}
    if inst.family == "H":
        sol = kollar_weight_system(inst.a)
        record["kollar"] = sol.to_json()
        record["weights"] = [str(w) for w in sol.weights]
        record["canonical_self_intersection"] = None
        # the affine cone z0^a0 z1 + ... has local weights d / w_i
        try:
            cone = WeightSystem(Fraction(sol.d) / w for w in sol.weights)
            char_poly = monodromy_char_poly(cone)
            record["cone_weights"] = cone.to_json()
            record["milnor_number"] = milnor_number(cone)
            flags.append("char_poly: affine cone singularity")
        except (ValueError, ZeroDivisionError, NonIntegralError) as exc:
            char_poly = None
            record["cone_weights"] = None
            record["milnor_number"] = None
            flags.append(f"char_poly unavailable: {exc}")
    else:
        n, d = inst.n, inst.d
        if inst.family == "V":
            ws = v_singularity_weights(n, d)
            char_poly = delta_closed_form(n, d)
            record["milnor_number"] = milnor_number_V(n, d)
        else:
            ws = w_singularity_weights(n, d)
            char_poly = phi(n, d)
            record["milnor_number"] = milnor_number_W(n, d)
        record["weights"] = ws.to_json()
        record["canonical_self_intersection"] = canonical_self_intersection(n, d).to_json()
    record["char_poly"] = char_poly.to_json() if char_poly is not None else None
    record["char_poly_degree"] = char_poly.degree if char_poly is not None else None
    record["value_at_one"] = _value_at_one(char_poly) if char_poly is not None else None
    record["betti"] = betti_numbers(inst)
    record["homotopy"] = _homotopy(inst)
    record["flags"] = flags
    return record


def audit_record(record: dict) -> list[str]:
    """Re-validate a record against fresh module-level recomputation."""
    problems = []
    inst = FamilyInstance.from_json(record["instance"])
    fresh = build_record(inst)
    for key in sorted(set(record) | set(fresh)):
        if record.get(key) != fresh.get(key):
            problems.append(f"{key}: stored {record.get(key)!r} != recomputed {fresh.get(key)!r}")
    if record.get("char_poly") is not None and inst.family in ("V", "W"):
        cp = LambdaProduct.from_json(record["char_poly"])
        oracle = monodromy_char_poly(WeightSystem(Fraction(w) for w in record["weights"]))
        if cp != oracle:
            problems.append("char_poly disagrees with the divisor oracle on the stored weights")
        if cp.degree != record["milnor_number"]:
            problems.append("char_poly degree != milnor_number")
    betti = record["betti"]
    if betti != betti[::-1]:
        problems.append("betti numbers not symmetric")
    return problems


def iter_instances(family: str, ns: Iterable[int] = (), ds: Iterable[int] = (), a: Sequence[int] | None = None):
    if family == "H":
        yield FamilyInstance.H(a)
        return
    for n in sorted(set(ns)):
        for d in sorted(set(ds)):
            yield FamilyInstance(family, n, d)


def build_catalog(instances: Sequence[FamilyInstance], jobs: int = 1) -> list[dict]:
    """Records in input order regardless of completion order."""
    if jobs <= 1:
        return [build_record(i) for i in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(build_record, instances))


def dumps_catalog(records: Sequence[dict], pretty: bool = False) -> str:
    if pretty:
        return json.dumps(records, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in records)
