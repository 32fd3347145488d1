"""JSON serialization: braces, catalog entries, YBE solutions, reports.

The brace format is "braceforge-v1".  Element indices follow the carrier
encoding (CYCLIC: n + p^2*m; MIXED: a + p*b + p^2*c) and automorphisms are
stored as descriptors -- CYCLIC ``{"i": ..., "j": ...}``, MIXED
``{"m": [[..,..],[..,..]], "alpha": ...}`` -- so files are readable and
independent of any internal numbering.  ``lambda`` holds, per element index,
an index into the file's own ``auts`` list.

All dumps go through :func:`canonical_dumps` (sorted keys, fixed indent,
trailing newline) so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .algebra import GroupSpec, HolSubgroup, Kind, group_spec
from .brace import G_K, BraceInvariants, MultClass, SkewBrace
from .regular import EnumerationReport
from .ybe import Solution

__all__ = [
    "SCHEMA_FORMAT",
    "SchemaError",
    "canonical_dumps",
    "load_json_file",
    "descriptor_to_json",
    "descriptor_from_json",
    "mult_class_to_str",
    "mult_class_from_str",
    "invariants_to_json",
    "invariants_from_json",
    "brace_to_json",
    "brace_from_json",
    "catalog_entry_to_json",
    "solution_to_json",
    "solution_from_json",
    "subgroup_to_json",
    "report_to_json",
]

SCHEMA_FORMAT = "braceforge-v1"

_LABELS = {
    "ZP2Q",
    "ZP2_RTIMES_ZQ",
    "ZP2xZQ",
    "G_K",
    "G_F",
    "ZP_x_ZQ_RTIMES_ZP",
    "ZQ_RTIMES_ZP2_rp",
    "ZQ_RTIMES_ZP2_h",
}


class SchemaError(ValueError):
    """A JSON document does not match the expected schema."""


def canonical_dumps(obj: Any) -> str:
    """Byte-deterministic JSON text (sorted keys, indent 2, newline)."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def _expect(obj: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing key {key!r}")
    val = obj[key]
    if kind is int and isinstance(val, bool):
        raise SchemaError(f"{where}: key {key!r} must be an integer")
    if not isinstance(val, kind):
        raise SchemaError(f"{where}: key {key!r} must be {kind.__name__}")
    return val


# ---------------- automorphism descriptors ----------------


def descriptor_to_json(kind: Kind | str, desc) -> dict:
    if Kind(kind) is Kind.CYCLIC:
        i, j = desc
        return {"i": int(i), "j": int(j)}
    (m00, m01, m10, m11), alpha = desc
    return {"m": [[int(m00), int(m01)], [int(m10), int(m11)]], "alpha": int(alpha)}


def descriptor_from_json(kind: Kind | str, obj: Any):
    where = "automorphism descriptor"
    if Kind(kind) is Kind.CYCLIC:
        i = _expect(obj, "i", int, where)
        j = _expect(obj, "j", int, where)
        return (i, j)
    m = _expect(obj, "m", list, where)
    alpha = _expect(obj, "alpha", int, where)
    if (
        len(m) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in m)
        or any(isinstance(x, bool) or not isinstance(x, int) for row in m for x in row)
    ):
        raise SchemaError(f"{where}: 'm' must be a 2x2 integer matrix")
    return ((m[0][0], m[0][1], m[1][0], m[1][1]), alpha)


# ---------------- invariants ----------------


def mult_class_to_str(mc: MultClass) -> str:
    return str(mc)


def mult_class_from_str(s: str) -> MultClass:
    if s.endswith(")") and "(" in s:
        base, _, rest = s.partition("(")
        try:
            k = int(rest[:-1])
        except ValueError:
            raise SchemaError(f"bad multiplicative class {s!r}") from None
        if base != G_K:
            raise SchemaError(f"bad multiplicative class {s!r}")
        return MultClass(base, k)
    if s not in _LABELS:
        raise SchemaError(f"unknown multiplicative class {s!r}")
    if s == G_K:
        raise SchemaError("G_K requires a parameter, e.g. 'G_K(2)'")
    return MultClass(s)


def invariants_to_json(inv: BraceInvariants) -> dict:
    return {
        "ker": inv.ker_size,
        "fix": inv.fix_size,
        "mult_class": str(inv.mult_class),
        "bi_skew": inv.bi_skew,
    }


def invariants_from_json(obj: Any) -> BraceInvariants:
    where = "invariants"
    ker = _expect(obj, "ker", int, where)
    fix = _expect(obj, "fix", int, where)
    mc = mult_class_from_str(_expect(obj, "mult_class", str, where))
    bi = _expect(obj, "bi_skew", bool, where)
    return BraceInvariants(ker, fix, mc, bi)


# ---------------- braces ----------------


def brace_to_json(B: SkewBrace, invariants: BraceInvariants | None = None) -> dict:
    """Serialize a brace; invariants are computed when not supplied."""
    if invariants is None:
        from .brace import brace_invariants

        invariants = brace_invariants(B)
    spec = B.spec
    used = sorted(set(B.lam))
    local = {g: i for i, g in enumerate(used)}
    return {
        "format": SCHEMA_FORMAT,
        "p": spec.p,
        "q": spec.q,
        "additive": spec.kind.value,
        "order": spec.n,
        "auts": [descriptor_to_json(spec.kind, spec.aut_descriptors[g]) for g in used],
        "lambda": [local[g] for g in B.lam],
        "invariants": invariants_to_json(invariants),
    }


def brace_from_json(obj: Any) -> SkewBrace:
    """Parse and validate a braceforge-v1 brace document.

    Raises SchemaError for anything malformed: wrong format tag, composite
    p or q, descriptors that are not automorphisms of the stated carrier,
    or a lambda table of the wrong shape.  Brace axioms are *not* checked
    here; run verify_left_brace on the result.
    """
    where = "brace"
    fmt = _expect(obj, "format", str, where)
    if fmt != SCHEMA_FORMAT:
        raise SchemaError(f"{where}: unsupported format {fmt!r}")
    p = _expect(obj, "p", int, where)
    q = _expect(obj, "q", int, where)
    additive = _expect(obj, "additive", str, where)
    if additive not in (Kind.CYCLIC.value, Kind.MIXED.value):
        raise SchemaError(f"{where}: additive must be 'cyclic' or 'mixed'")
    try:
        spec = group_spec(p, q, additive)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    order = _expect(obj, "order", int, where)
    if order != spec.n:
        raise SchemaError(f"{where}: order {order} != p^2*q = {spec.n}")
    auts = _expect(obj, "auts", list, where)
    aut_ids: list[int] = []
    for k, desc_obj in enumerate(auts):
        desc = descriptor_from_json(spec.kind, desc_obj)
        canon = spec.compose_desc(desc, spec.aut_descriptors[spec.identity_aut])
        try:
            aut_ids.append(spec.aut_index[canon])
        except KeyError:
            raise SchemaError(
                f"{where}: auts[{k}] = {desc_obj!r} is not an automorphism of "
                f"the {additive} carrier for ({p}, {q})"
            ) from None
    lam_local = _expect(obj, "lambda", list, where)
    if len(lam_local) != spec.n:
        raise SchemaError(
            f"{where}: lambda has {len(lam_local)} entries, expected {spec.n}"
        )
    lam: list[int] = []
    for x, k in enumerate(lam_local):
        if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k < len(aut_ids):
            raise SchemaError(f"{where}: lambda[{x}] = {k!r} is not an auts index")
        lam.append(aut_ids[k])
    if "invariants" in obj:
        invariants_from_json(obj["invariants"])
    return SkewBrace(spec, lam)


def catalog_entry_to_json(entry) -> dict:
    """Brace JSON extended with the family name and its parameters."""
    doc = brace_to_json(entry.brace, entry.expected)
    doc["family"] = entry.family
    doc["params"] = dict(entry.parameters)
    doc["case"] = entry.case.value
    return doc


# ---------------- YBE solutions ----------------


def solution_to_json(sol: Solution, checks: dict[str, bool]) -> dict:
    return {
        "n": sol.n,
        "sigma": sol.sigma.tolist(),
        "tau": sol.tau.tolist(),
        "checks": {
            "ybe": bool(checks["ybe"]),
            "involutive": bool(checks["involutive"]),
            "nondegenerate": bool(checks["nondegenerate"]),
        },
    }


def solution_from_json(obj: Any) -> tuple[Solution, dict[str, bool]]:
    where = "solution"
    n = _expect(obj, "n", int, where)
    sigma = _expect(obj, "sigma", list, where)
    tau = _expect(obj, "tau", list, where)
    checks = _expect(obj, "checks", dict, where)
    try:
        sol = Solution(np.asarray(sigma), np.asarray(tau))
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    if sol.n != n:
        raise SchemaError(f"{where}: n = {n} does not match the tables")
    out = {}
    for key in ("ybe", "involutive", "nondegenerate"):
        out[key] = _expect(checks, key, bool, f"{where}.checks")
    return sol, out


# ---------------- enumeration reports ----------------


def subgroup_to_json(H: HolSubgroup) -> list:
    """Generator list of (element index, automorphism descriptor) pairs."""
    spec = H.spec
    gens = H.generator_pairs
    if not gens and H.order > 1:
        from .brace import _small_generating_set

        gens = [spec.hol_decode(h) for h in _small_generating_set(spec, H.elements)]
    return [[spec.encode(a), descriptor_to_json(spec.kind, f)] for a, f in gens]


def report_to_json(report: EnumerationReport) -> dict:
    spec = report.spec
    return {
        "p": spec.p,
        "q": spec.q,
        "additive": spec.kind.value,
        "case": report.case.value,
        "total": report.total,
        "expected_total": report.expected_total,
        "matches": report.matches,
        "warnings": list(report.warnings),
        "cells": [
            {"ker": ker, "class": label, "computed": got, "expected": want}
            for ker, label, got, want in report.cell_rows()
        ],
        "classes": [
            {
                "pi2_order": oc.pi2_order,
                "ker": oc.ker_order,
                "orbit_size": oc.orbit_size,
                "invariants": invariants_to_json(oc.invariants),
                "generators": subgroup_to_json(oc.representative),
            }
            for oc in report.orbits
        ],
    }
