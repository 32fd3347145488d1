"""Stored classification tables: expected class counts per congruence case,
keyed by (|ker lambda|, multiplicative class), plus the coarse headline
totals per case.

For exactly one case (p = 1 mod q, q odd) the headline total 2q + 5 does not
match the per-family tables, whose pair total is (q + 15) / 2; tabulate()
reports both and treats the computed enumeration as authoritative.
"""

from __future__ import annotations

from .algebra import Kind
from .brace import (
    G_F,
    G_K,
    MultClass,
    ZP2Q,
    ZP2_RTIMES_ZQ,
    ZP2xZQ,
    ZP_x_ZQ_RTIMES_ZP,
    ZQ_RTIMES_ZP2_h,
    ZQ_RTIMES_ZP2_rp,
)
from .cases import CongruenceCase, bset_for

__all__ = ["expected_cells", "headline_total", "per_family_total"]

Cells = dict[tuple[int, str], int]


def _gk(k: int) -> str:
    return str(MultClass(G_K, k))


def expected_cells(
    case: CongruenceCase, kind: Kind | str, p: int, q: int
) -> Cells:
    """Expected (|ker lambda|, class) -> count for one carrier."""
    kind = Kind(kind)
    n = p * p * q
    if kind is Kind.CYCLIC:
        if case in (CongruenceCase.P1Q_ODD, CongruenceCase.P1Q_Q2):
            return {
                (p * q, ZP2Q): 1,
                (p * p, ZP2_RTIMES_ZQ): 1,
                (n, ZP2Q): 1,
            }
        if case in (CongruenceCase.PM1Q, CongruenceCase.ALG_IND):
            return {(p * q, ZP2Q): 1, (n, ZP2Q): 1}
        if case is CongruenceCase.Q1P:
            return {
                (p * q, ZP2Q): 1,
                (p * q, ZQ_RTIMES_ZP2_rp): p,
                (n, ZP2Q): 1,
            }
        if case is CongruenceCase.Q1P2:
            return {
                (q, ZQ_RTIMES_ZP2_h): p,
                (p * q, ZP2Q): 1,
                (p * q, ZQ_RTIMES_ZP2_rp): p,
                (n, ZP2Q): 1,
            }
        if case is CongruenceCase.FOURQ_PLAIN:
            return {
                (q, ZP_x_ZQ_RTIMES_ZP): 1,
                (2 * q, ZP2xZQ): 1,
                (2 * q, ZP_x_ZQ_RTIMES_ZP): 1,
                (2 * q, ZQ_RTIMES_ZP2_rp): 1,
                (n, ZP2Q): 1,
            }
        if case is CongruenceCase.FOURQ_1MOD4:
            cells = expected_cells(CongruenceCase.FOURQ_PLAIN, kind, p, q)
            cells[(q, ZQ_RTIMES_ZP2_h)] = 1
            return cells
        raise ValueError(f"no stored table for case {case}")
    # mixed carrier
    if case is CongruenceCase.P1Q_ODD:
        cells: Cells = {
            (p, _gk(2)): 1,
            (p * q, ZP2xZQ): 1,
            (n, ZP2xZQ): 1,
        }
        for s in bset_for(q):
            cells[(p * p, _gk(s))] = 1
        return cells
    if case is CongruenceCase.P1Q_Q2:
        return {
            (p, _gk(0)): 1,
            (2 * p, ZP2xZQ): 1,
            (p * p, _gk(0)): 1,
            (p * p, _gk(1)): 1,
            (n, ZP2xZQ): 1,
        }
    if case is CongruenceCase.PM1Q:
        return {
            (p * q, ZP2xZQ): 1,
            (p * p, G_F): 1,
            (n, ZP2xZQ): 1,
        }
    if case in (CongruenceCase.Q1P, CongruenceCase.Q1P2):
        return {
            (q, ZP_x_ZQ_RTIMES_ZP): 2,
            (p * q, ZP2xZQ): 1,
            (p * q, ZP_x_ZQ_RTIMES_ZP): 2,
            (n, ZP2xZQ): 1,
        }
    if case is CongruenceCase.FOURQ_PLAIN:
        return {
            (2 * q, ZP2Q): 1,
            (2 * q, ZP_x_ZQ_RTIMES_ZP): 1,
            (2 * q, ZQ_RTIMES_ZP2_rp): 1,
            (n, ZP2xZQ): 1,
        }
    if case is CongruenceCase.FOURQ_1MOD4:
        cells = expected_cells(CongruenceCase.FOURQ_PLAIN, kind, p, q)
        cells[(q, ZQ_RTIMES_ZP2_h)] = 1
        return cells
    if case is CongruenceCase.ALG_IND:
        return {(p * q, ZP2xZQ): 1, (n, ZP2xZQ): 1}
    raise ValueError(f"no stored table for case {case}")


def headline_total(case: CongruenceCase, p: int, q: int) -> int:
    """Coarse total count of classes for the pair (both carriers together)."""
    if case is CongruenceCase.P1Q_ODD:
        return 2 * q + 5
    if case is CongruenceCase.P1Q_Q2:
        return 8
    if case is CongruenceCase.PM1Q:
        return 5
    if case is CongruenceCase.Q1P:
        return p + 8
    if case is CongruenceCase.Q1P2:
        return 2 * p + 8
    if case is CongruenceCase.FOURQ_PLAIN:
        return 9
    if case is CongruenceCase.FOURQ_1MOD4:
        return 11
    if case is CongruenceCase.ALG_IND:
        return 4
    raise ValueError(f"no headline total for case {case}")


def per_family_total(case: CongruenceCase, p: int, q: int) -> int:
    """Pair total implied by the per-family tables (both carriers)."""
    return sum(
        sum(expected_cells(case, kind, p, q).values())
        for kind in (Kind.CYCLIC, Kind.MIXED)
    )
