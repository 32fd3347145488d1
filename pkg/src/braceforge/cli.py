"""Command-line front end: enumerate, catalog, verify, ybe, compare.

Exit codes: 0 = success (including the one documented count discrepancy,
which is reported as a warning); 1 = a comparison mismatched or a
verification failed; 2 = bad usage, malformed input, or a refused pair.

Output is byte-deterministic for a fixed configuration regardless of
--jobs.  The environment variable BRACEFORGE_SEED is reserved but unused:
nothing here is randomized.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import GroupSpec, Kind, group_spec
from .brace import brace_invariants, verify_left_brace
from .cases import ExcludedPairError, PrimePair, classify_case, ensure_in_scope
from .catalog import catalog_for_case
from .io import (
    SchemaError,
    brace_from_json,
    canonical_dumps,
    catalog_entry_to_json,
    invariants_from_json,
    invariants_to_json,
    load_json_file,
    report_to_json,
    solution_to_json,
)
from .reference import headline_total, per_family_total
from .regular import (
    OracleBoundError,
    _subgroup_key,
    orbit_min_key,
    orbit_partition,
    regular_subgroups_oracle,
    regular_subgroups_structured,
    tabulate,
)
from .brace import regular_from_brace
from .ybe import solution_from_brace, solution_properties, verify_ybe

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation's settings."""

    p: int
    q: int
    additive: str = "both"
    method: str = "structured"
    oracle_bound: int = 100_000
    fmt: str = "table"
    out: str | None = None
    jobs: int = 1

    def kinds(self) -> list[Kind]:
        if self.additive == "cyclic":
            return [Kind.CYCLIC]
        if self.additive == "mixed":
            return [Kind.MIXED]
        return [Kind.CYCLIC, Kind.MIXED]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _enumerate_kind(
    spec: GroupSpec, cfg: RunConfig
) -> tuple[list, bool | None]:
    """Run the configured enumerator(s); returns (orbits, methods_agree)."""
    structured = oracle = None
    if cfg.method in ("structured", "both"):
        structured = regular_subgroups_structured(spec, jobs=cfg.jobs)
    if cfg.method in ("oracle", "both"):
        oracle = regular_subgroups_oracle(spec, bound=cfg.oracle_bound)
    agree: bool | None = None
    if structured is not None and oracle is not None:
        keys_s = {orbit_min_key(spec, G.elements)[0] for G in structured}
        keys_o = {orbit_min_key(spec, G.elements)[0] for G in oracle}
        agree = keys_s == keys_o
    subgroups = structured if structured is not None else oracle
    return orbit_partition(subgroups, spec=spec), agree


def _format_report_table(report, agree: bool | None) -> list[str]:
    spec = report.spec
    lines = [
        f"pair ({spec.p}, {spec.q})  case {report.case.value}  "
        f"carrier {spec.kind.value}  |Hol| {spec.hol_order}"
    ]
    rows = report.cell_rows()
    labels = sorted({label for _, label, _, _ in rows})
    kers = sorted({ker for ker, _, _, _ in rows})
    by_cell = {(ker, label): (got, want) for ker, label, got, want in rows}
    widths = [max(len(lab), 6) for lab in labels]
    head = "  ker\\class".ljust(12) + "".join(
        f"  {lab:>{w}}" for lab, w in zip(labels, widths)
    )
    lines.append(head)
    for ker in kers:
        cells = []
        for lab, w in zip(labels, widths):
            got, want = by_cell.get((ker, lab), (0, 0))
            cell = str(got) if got == want else f"{got}!={want}"
            cells.append(f"  {cell:>{w}}")
        lines.append(f"  {ker}".ljust(12) + "".join(cells))
    verdict = "all cells match" if report.matches else "CELL MISMATCH"
    lines.append(
        f"  total {report.total}  expected {report.expected_total}  {verdict}"
    )
    if agree is not None:
        lines.append(
            "  structured and oracle enumerations agree"
            if agree
            else "  STRUCTURED/ORACLE DISAGREEMENT"
        )
    for w in report.warnings:
        lines.append(f"  warning: {w}")
    return lines


def cmd_enumerate(cfg: RunConfig) -> int:
    reports = []
    agrees = []
    for kind in cfg.kinds():
        spec = group_spec(cfg.p, cfg.q, kind)
        orbits, agree = _enumerate_kind(spec, cfg)
        reports.append(tabulate(orbits, spec=spec))
        agrees.append(agree)
    ok = all(r.matches for r in reports) and all(a is not False for a in agrees)
    case = reports[0].case
    lines: list[str] = []
    docs = []
    diag: list[str] = []
    if cfg.additive == "both":
        combined = sum(r.total for r in reports)
        head = headline_total(case, cfg.p, cfg.q)
        per_family = per_family_total(case, cfg.p, cfg.q)
        diag.append(f"combined classes across both carriers: {combined}")
        diag.append(
            f"stored per-family total: {per_family} "
            + ("(match)" if combined == per_family else "(MISMATCH)")
        )
        if head == per_family:
            diag.append(f"stored headline total: {head} (match)")
        else:
            diag.append(
                f"warning: stored headline total {head} != per-family total "
                f"{per_family}; the computed count is authoritative"
            )
        if combined != per_family:
            ok = False
    for report, agree in zip(reports, agrees):
        if cfg.fmt == "table":
            lines.extend(_format_report_table(report, agree))
            lines.append("")
        else:
            doc = report_to_json(report)
            if agree is not None:
                doc["methods_agree"] = agree
            docs.append(doc)
    if cfg.fmt == "table":
        lines.extend(diag)
        _emit("\n".join(lines).rstrip("\n") + "\n", cfg.out)
    else:
        _emit(
            canonical_dumps(
                {"p": cfg.p, "q": cfg.q, "reports": docs, "diagnostics": diag}
            ),
            cfg.out,
        )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_catalog(cfg: RunConfig) -> int:
    entries = [
        e
        for e in catalog_for_case(cfg.p, cfg.q)
        if e.brace.spec.kind in cfg.kinds()
    ]
    ok = True
    lines = []
    docs = []
    for e in entries:
        res = verify_left_brace(e.brace)
        good = bool(res) and brace_invariants(e.brace) == e.expected
        ok = ok and good
        if cfg.fmt == "table":
            inv = e.expected
            params = ",".join(f"{k}={v}" for k, v in sorted(e.parameters.items()))
            lines.append(
                f"{'ok ' if good else 'BAD'} {e.brace.spec.kind.value:<6} "
                f"{e.family}({params})  ker={inv.ker_size} fix={inv.fix_size} "
                f"class={inv.mult_class} bi_skew={inv.bi_skew}"
            )
            if not res:
                lines.extend(f"    problem: {p}" for p in res.problems)
        else:
            doc = catalog_entry_to_json(e)
            doc["verified"] = good
            docs.append(doc)
    if cfg.fmt == "table":
        lines.append(
            f"{len(entries)} entries, all verified"
            if ok
            else f"{len(entries)} entries, VERIFICATION FAILURES"
        )
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(canonical_dumps({"p": cfg.p, "q": cfg.q, "entries": docs}), cfg.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(path: str, fmt: str, out: str | None) -> int:
    obj = load_json_file(path)
    B = brace_from_json(obj)
    res = verify_left_brace(B)
    inv = brace_invariants(B) if res.ok else None
    stored = invariants_from_json(obj["invariants"]) if "invariants" in obj else None
    inv_match = None
    if inv is not None and stored is not None:
        inv_match = inv == stored
    ok = res.ok and inv_match is not False
    if fmt == "table":
        lines = [f"{path}: {'ok' if res.ok else 'FAILED'}"]
        lines.extend(f"  problem: {p}" for p in res.problems)
        if inv is not None:
            lines.append(
                f"  invariants: ker={inv.ker_size} fix={inv.fix_size} "
                f"class={inv.mult_class} bi_skew={inv.bi_skew}"
            )
        if inv_match is not None:
            lines.append(
                "  stored invariants match"
                if inv_match
                else "  STORED INVARIANTS DIFFER"
            )
        _emit("\n".join(lines) + "\n", out)
    else:
        _emit(
            canonical_dumps(
                {
                    "path": path,
                    "ok": ok,
                    "problems": list(res.problems),
                    "invariants": invariants_to_json(inv) if inv else None,
                    "invariants_match": inv_match,
                }
            ),
            out,
        )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_ybe(cfg: RunConfig) -> int:
    entries = [
        e
        for e in catalog_for_case(cfg.p, cfg.q)
        if e.brace.spec.kind in cfg.kinds()
    ]
    ok = True
    lines = []
    docs = []
    for e in entries:
        sol = solution_from_brace(e.brace)
        checks = solution_properties(sol)
        checks["ybe"] = verify_ybe(sol).ok
        good = all(checks.values())
        ok = ok and good
        if cfg.fmt == "table":
            params = ",".join(f"{k}={v}" for k, v in sorted(e.parameters.items()))
            lines.append(
                f"{'ok ' if good else 'BAD'} {e.brace.spec.kind.value:<6} "
                f"{e.family}({params})  n={sol.n} ybe={checks['ybe']} "
                f"involutive={checks['involutive']} "
                f"nondegenerate={checks['nondegenerate']}"
            )
        else:
            docs.append(
                {
                    "family": e.family,
                    "params": dict(e.parameters),
                    "additive": e.brace.spec.kind.value,
                    "solution": solution_to_json(sol, checks),
                }
            )
    if cfg.fmt == "table":
        lines.append(
            f"{len(entries)} solutions, all checks pass"
            if ok
            else f"{len(entries)} solutions, CHECK FAILURES"
        )
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(canonical_dumps({"p": cfg.p, "q": cfg.q, "solutions": docs}), cfg.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_compare(cfg: RunConfig) -> int:
    entries = catalog_for_case(cfg.p, cfg.q)
    lines = []
    docs = []
    total = 0
    perfect = True
    for kind in cfg.kinds():
        spec = group_spec(cfg.p, cfg.q, kind)
        orbits, agree = _enumerate_kind(spec, cfg)
        if agree is False:
            perfect = False
        kind_entries = [e for e in entries if e.brace.spec.kind is kind]
        by_key = {_subgroup_key(oc.representative.elements): i for i, oc in enumerate(orbits)}
        claimed: dict[int, str] = {}
        unmatched_entries = []
        for e in kind_entries:
            G = regular_from_brace(e.brace)
            key = orbit_min_key(spec, G.elements)[0]
            name = f"{e.family}{dict(sorted(e.parameters.items()))}"
            idx = by_key.get(key)
            if idx is None or idx in claimed:
                unmatched_entries.append(name)
                perfect = False
            else:
                claimed[idx] = name
        missing = [i for i in range(len(orbits)) if i not in claimed]
        if missing:
            perfect = False
        total += len(orbits)
        if cfg.fmt == "table":
            lines.append(f"carrier {kind.value}: {len(orbits)} classes")
            for i, oc in enumerate(orbits):
                name = claimed.get(i, "UNMATCHED")
                inv = oc.invariants
                lines.append(
                    f"  class {i}: ker={inv.ker_size} mult={inv.mult_class} "
                    f"<- {name}"
                )
            lines.extend(
                f"  catalog entry without an orbit: {name}"
                for name in unmatched_entries
            )
        else:
            docs.append(
                {
                    "additive": kind.value,
                    "classes": [
                        {
                            "ker": oc.invariants.ker_size,
                            "mult_class": str(oc.invariants.mult_class),
                            "catalog": claimed.get(i),
                        }
                        for i, oc in enumerate(orbits)
                    ],
                    "unmatched_catalog": unmatched_entries,
                }
            )
    verdict = (
        f"perfect bijection, {total} classes"
        if perfect
        else "MISMATCH between enumeration and catalog"
    )
    if cfg.fmt == "table":
        lines.append(verdict)
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(
            canonical_dumps(
                {
                    "p": cfg.p,
                    "q": cfg.q,
                    "perfect_bijection": perfect,
                    "classes": total,
                    "carriers": docs,
                }
            ),
            cfg.out,
        )
    return EXIT_OK if perfect else EXIT_MISMATCH


def _add_pair_args(sub: argparse.ArgumentParser, with_method: bool) -> None:
    sub.add_argument("--p", type=int, required=True, help="the squared prime")
    sub.add_argument("--q", type=int, required=True, help="the other prime")
    sub.add_argument(
        "--additive",
        choices=["cyclic", "mixed", "both"],
        default="both",
        help="which additive carrier(s) to use",
    )
    if with_method:
        sub.add_argument(
            "--method",
            choices=["structured", "oracle", "both"],
            default="structured",
            help="enumeration strategy; 'both' cross-checks the two",
        )
        sub.add_argument(
            "--oracle-bound",
            type=int,
            default=100_000,
            help="refuse the naive oracle above this |Hol(A)|",
        )
    sub.add_argument("--format", choices=["table", "json"], default="table")
    sub.add_argument("--out", default=None, help="write output here instead of stdout")
    sub.add_argument("--jobs", type=int, default=1, help="parallel search workers")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braceforge",
        description=(
            "Enumerate, classify, and verify the skew braces of order p^2*q "
            "with abelian additive group, and export their Yang-Baxter "
            "solutions."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)
    enum_p = sub.add_parser(
        "enumerate",
        help="count conjugacy classes of regular subgroups / braces per carrier",
    )
    _add_pair_args(enum_p, with_method=True)
    cat_p = sub.add_parser("catalog", help="emit and verify the named brace families")
    _add_pair_args(cat_p, with_method=False)
    ver_p = sub.add_parser("verify", help="re-verify a stored brace file")
    ver_p.add_argument("path", help="a braceforge-v1 JSON file")
    ver_p.add_argument("--format", choices=["table", "json"], default="table")
    ver_p.add_argument("--out", default=None)
    ybe_p = sub.add_parser(
        "ybe", help="export checked Yang-Baxter solutions for the catalog braces"
    )
    _add_pair_args(ybe_p, with_method=False)
    cmp_p = sub.add_parser(
        "compare", help="match enumerated classes against the catalog, one by one"
    )
    _add_pair_args(cmp_p, with_method=True)
    return ap


def _config(args: argparse.Namespace) -> RunConfig:
    ensure_in_scope(classify_case(PrimePair(args.p, args.q)))
    return RunConfig(
        p=args.p,
        q=args.q,
        additive=args.additive,
        method=getattr(args, "method", "structured"),
        oracle_bound=getattr(args, "oracle_bound", 100_000),
        fmt=args.format,
        out=args.out,
        jobs=args.jobs,
    )


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.path, args.format, args.out)
        cfg = _config(args)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "catalog":
            return cmd_catalog(cfg)
        if args.command == "ybe":
            return cmd_ybe(cfg)
        if args.command == "compare":
            return cmd_compare(cfg)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (ExcludedPairError, SchemaError, OracleBoundError, ValueError) as exc:
        print(f"braceforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
