"""Skew braces over the two carriers: construction from regular subgroups,
axiom verification, lambda/kernel/fix machinery, ideal checks, bi-skew
detection, multiplicative-group classification, and brace isomorphism.

A brace is stored as its lambda table (one automorphism index per element);
the circle table a o b = a + lambda_a(b) is derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .arith import dlog, legendre, unit_of_order
from .algebra import GroupSpec, HolSubgroup, Kind, _hol_closure

__all__ = [
    "MultClass",
    "ZP2Q",
    "ZP2_RTIMES_ZQ",
    "ZP2xZQ",
    "G_K",
    "G_F",
    "ZP_x_ZQ_RTIMES_ZP",
    "ZQ_RTIMES_ZP2_rp",
    "ZQ_RTIMES_ZP2_h",
    "SkewBrace",
    "BraceInvariants",
    "VerifyResult",
    "brace_from_regular",
    "regular_from_brace",
    "verify_left_brace",
    "ker_lambda",
    "fix_set",
    "lambda_identities_check",
    "is_bi_skew",
    "lambda_is_additive",
    "ideal_checks",
    "mult_group_class",
    "brace_invariants",
    "braces_isomorphic",
    "cayley_isomorphic",
]

# Multiplicative-class labels.  "rp" = the order-p action on Z_q, "h" = the
# order-p^2 action; G_K(k) are the diagonal-action semidirect products indexed
# by the canonical set B, G_F the irreducible-action one.
ZP2Q = "ZP2Q"
ZP2_RTIMES_ZQ = "ZP2_RTIMES_ZQ"
ZP2xZQ = "ZP2xZQ"
G_K = "G_K"
G_F = "G_F"
ZP_x_ZQ_RTIMES_ZP = "ZP_x_ZQ_RTIMES_ZP"
ZQ_RTIMES_ZP2_rp = "ZQ_RTIMES_ZP2_rp"
ZQ_RTIMES_ZP2_h = "ZQ_RTIMES_ZP2_h"


@dataclass(frozen=True)
class MultClass:
    """Isomorphism type of the multiplicative group (A, o)."""

    label: str
    k: int | None = None

    def __str__(self) -> str:
        return self.label if self.k is None else f"{self.label}({self.k})"


@dataclass(frozen=True)
class BraceInvariants:
    ker_size: int
    fix_size: int
    mult_class: MultClass
    bi_skew: bool


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class SkewBrace:
    """A skew (left) brace whose additive group is the given carrier."""

    __slots__ = ("spec", "lam", "__dict__")

    def __init__(self, spec: GroupSpec, lam: Sequence[int]):
        lam = tuple(lam)
        if len(lam) != spec.n:
            raise ValueError(f"lambda table has {len(lam)} entries, expected {spec.n}")
        if any(not 0 <= f < spec.n_aut for f in lam):
            raise ValueError("lambda table contains an invalid automorphism index")
        self.spec = spec
        self.lam = lam

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewBrace)
            and self.spec == other.spec
            and self.lam == other.lam
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.lam))

    def __repr__(self) -> str:
        return f"SkewBrace({self.spec!r}, |ker|={len(ker_lambda(self))})"

    @cached_property
    def circle_np(self) -> np.ndarray:
        """Circle Cayley table on indices: circle_np[a, b] = a o b."""
        spec = self.spec
        lam_rows = spec.apply_np[np.asarray(self.lam, dtype=np.intp)]
        return spec.add_np[np.arange(spec.n)[:, None], lam_rows]

    @cached_property
    def circle_flat(self) -> list[int]:
        return self.circle_np.ravel().tolist()

    @cached_property
    def circle_inv_np(self) -> np.ndarray:
        """Circle inverses: a o inv[a] = 0."""
        inv = np.argmax(self.circle_np == 0, axis=1).astype(np.int32)
        return inv

    def circle_idx(self, a: int, b: int) -> int:
        return int(self.circle_np[a, b])

    def circle(self, x, y):
        """Circle product on element tuples."""
        spec = self.spec
        return spec.decode(self.circle_idx(spec.encode(x), spec.encode(y)))

    def lambda_desc(self, x):
        """The automorphism lambda_x as a descriptor."""
        return self.spec.aut_descriptors[self.lam[self.spec.encode(x)]]

    @cached_property
    def lambda_image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.lam)))

    @cached_property
    def circle_orders(self) -> list[int]:
        flat = self.circle_flat
        n = self.spec.n
        out = []
        for a in range(n):
            o, x = 1, a
            while x != 0:
                x = flat[x * n + a]
                o += 1
            out.append(o)
        return out


def brace_from_regular(G: HolSubgroup) -> SkewBrace:
    """Brace with lambda_a = the unique f such that (a, f) lies in G."""
    spec = G.spec
    n, n_aut = spec.n, spec.n_aut
    if G.order != n:
        raise ValueError(f"subgroup of order {G.order} is not regular on {n} points")
    lam = [-1] * n
    for h in G.elements:
        a, f = divmod(h, n_aut)
        if lam[a] != -1:
            raise ValueError("subgroup is not regular: repeated first projection")
        lam[a] = f
    return SkewBrace(spec, lam)


def regular_from_brace(B: SkewBrace) -> HolSubgroup:
    """The graph {(a, lambda_a)} of the lambda map, a regular subgroup."""
    spec = B.spec
    n_aut = spec.n_aut
    elems = frozenset(a * n_aut + f for a, f in enumerate(B.lam))
    return HolSubgroup(spec, elems, _small_generating_set(spec, elems))


def _small_generating_set(spec: GroupSpec, elements: frozenset[int]) -> tuple[int, ...]:
    """Greedy deterministic generating set (smallest indices first)."""
    ident = spec.identity_aut
    have: frozenset[int] = frozenset({ident})
    gens: list[int] = []
    for h in sorted(elements):
        if h not in have:
            gens.append(h)
            got = _hol_closure(spec, gens, cap=len(elements))
            assert got is not None
            have = got
            if len(have) == len(elements):
                break
    return tuple(gens)


def verify_left_brace(B: SkewBrace) -> VerifyResult:
    """Exhaustively check that B is a skew brace over its carrier.

    Checks: lambda(0) = id, every circle row is a permutation, circle
    associativity, the brace axiom a o (b+c) = a o b - a + a o c, and that
    lambda is a homomorphism (A, o) -> Aut(A, +).  All checks run over the
    whole carrier; the first few violations are reported as witnesses.
    """
    spec = B.spec
    n = spec.n
    problems: list[str] = []
    if B.lam[0] != spec.identity_aut:
        problems.append(f"lambda(0) is not the identity automorphism (index {B.lam[0]})")
    Z = B.circle_np
    rows_sorted = np.sort(Z, axis=1)
    bad_rows = np.nonzero((rows_sorted != np.arange(n)[None, :]).any(axis=1))[0]
    for a in bad_rows[:3]:
        problems.append(f"circle row of {spec.decode(int(a))} is not a permutation")
    add = spec.add_np
    neg = spec.neg_np
    for a in range(n):
        za = Z[a]
        lhs_assoc = za[Z]
        rhs_assoc = Z[za]
        if not np.array_equal(lhs_assoc, rhs_assoc):
            b, c = map(int, np.argwhere(lhs_assoc != rhs_assoc)[0])
            problems.append(
                "associativity fails at "
                f"{spec.decode(a)}, {spec.decode(b)}, {spec.decode(c)}"
            )
            break
    for a in range(n):
        lhs_brace = Z[a][add]
        rhs_brace = add[add[Z[a], int(neg[a])][:, None], Z[a][None, :]]
        if not np.array_equal(lhs_brace, rhs_brace):
            b, c = map(int, np.argwhere(lhs_brace != rhs_brace)[0])
            problems.append(
                "brace axiom fails at "
                f"{spec.decode(a)}, {spec.decode(b)}, {spec.decode(c)}"
            )
            break
    image = B.lambda_image
    pos = {f: i for i, f in enumerate(image)}
    comp = np.empty((len(image), len(image)), dtype=np.int32)
    for i, f in enumerate(image):
        for j, g in enumerate(image):
            comp[i, j] = spec.compose_idx(f, g)
    lam_np = np.asarray(B.lam, dtype=np.int32)
    lam_pos = np.asarray([pos[f] for f in B.lam], dtype=np.intp)
    lhs_hom = lam_np[Z]
    rhs_hom = comp[lam_pos[:, None], lam_pos[None, :]]
    if not np.array_equal(lhs_hom, rhs_hom):
        a, b = map(int, np.argwhere(lhs_hom != rhs_hom)[0])
        problems.append(
            f"lambda is not multiplicative at {spec.decode(a)}, {spec.decode(b)}"
        )
    return VerifyResult(ok=not problems, problems=tuple(problems))


def ker_lambda(B: SkewBrace) -> frozenset[int]:
    """Kernel of lambda as a set of element indices."""
    ident = B.spec.identity_aut
    return frozenset(a for a, f in enumerate(B.lam) if f == ident)


def fix_set(B: SkewBrace) -> frozenset[int]:
    """Fix(B): elements fixed by every lambda_x."""
    spec = B.spec
    mask = np.ones(spec.n, dtype=bool)
    idx = np.arange(spec.n)
    for f in B.lambda_image:
        mask &= spec.apply_np[f] == idx
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def lambda_identities_check(B: SkewBrace) -> bool:
    """Power and kernel/fix identities of the lambda map.

    (i) For every b with lambda_b(b) = b and every n >= 1, the n-th circle
    power of b equals nb and lambda_{nb} = lambda_b^n.

    (ii) For a, c in ker(lambda) and b, d in Fix(B):
    (a+b) o (c+d) = a + b + lambda_b(c) + d.  Since lambda_{a+b} is additive
    and fixes d, this reduces to lambda_{a+b} and lambda_b agreeing on
    ker(lambda), which is what gets checked (exactly, but without looping
    over the full fourth power of the carrier).
    """
    spec = B.spec
    n = spec.n
    add = spec.add_flat
    apply_ = spec.apply_flat
    flat = B.circle_flat
    for b in range(n):
        if apply_[B.lam[b] * n + b] != b:
            continue
        nb, power, f = b, b, B.lam[b]
        while nb != 0:
            nb = add[nb * n + b]
            power = flat[b * n + power]
            f = spec.compose_idx(B.lam[b], f)
            if power != nb or B.lam[nb] != f:
                return False
    ker = sorted(ker_lambda(B))
    fix = sorted(fix_set(B))
    ker_np = np.asarray(ker, dtype=np.intp)
    for b in fix:
        fb = B.lam[b]
        for a in ker:
            fab = B.lam[add[a * n + b]]
            if fab != fb and not np.array_equal(
                spec.apply_np[fab][ker_np], spec.apply_np[fb][ker_np]
            ):
                return False
    return True


def is_bi_skew(B: SkewBrace) -> bool:
    """True iff x + (y o z) = (x+y) o x' o (x+z) holds for all x, y, z."""
    spec = B.spec
    n = spec.n
    Z = B.circle_np
    add = spec.add_np
    inv = B.circle_inv_np
    for x in range(n):
        ax = add[x]
        lhs = ax[Z]
        left = Z[ax, int(inv[x])]
        rhs = Z[np.ix_(left, ax)]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def lambda_is_additive(B: SkewBrace) -> bool:
    """True iff lambda_{x+y} = lambda_x o lambda_y for all x, y.

    Expanding (x+y) o x' o (x+z) with lambda_{x'} = lambda_x^{-1} and
    x' = -lambda_x^{-1}(x) collapses the bi-skew identity to exactly this
    condition, so it must always agree with is_bi_skew (cheaper: no triple
    loop).
    """
    spec = B.spec
    image = B.lambda_image
    pos = {f: i for i, f in enumerate(image)}
    comp = np.empty((len(image), len(image)), dtype=np.int32)
    for i, f in enumerate(image):
        for j, g in enumerate(image):
            comp[i, j] = spec.compose_idx(f, g)
    lam_np = np.asarray(B.lam, dtype=np.int32)
    lam_pos = np.asarray([pos[f] for f in B.lam], dtype=np.intp)
    lhs = lam_np[spec.add_np]
    rhs = comp[lam_pos[:, None], lam_pos[None, :]]
    return bool(np.array_equal(lhs, rhs))


def ideal_checks(B: SkewBrace, I: Iterable[int]) -> dict[str, bool]:
    """Left-ideal and ideal flags for an additive subgroup I (element indices).

    left_ideal: I is lambda-invariant; ideal: additionally normal in (A, o).
    Raises if I is not a subgroup of the additive group.
    """
    spec = B.spec
    n = spec.n
    I = frozenset(I)
    add = spec.add_flat
    if 0 not in I or any(add[a * n + b] not in I for a in I for b in I):
        raise ValueError("I is not an additive subgroup")
    apply_ = spec.apply_flat
    left = all(apply_[f * n + a] in I for f in B.lambda_image for a in I)
    flat = B.circle_flat
    inv = B.circle_inv_np.tolist()
    normal = left and all(
        flat[flat[a * n + i] * n + inv[a]] in I for a in range(n) for i in I
    )
    return {"left_ideal": left, "ideal": normal}


def mult_group_class(B: SkewBrace) -> MultClass:
    """Isomorphism type of (A, o) among the groups of order p^2 q.

    Fingerprint: abelian/exponent, the count of p-power-order elements
    (p-Sylow normality), cyclic vs elementary p-Sylow, and the center size;
    the diagonal semidirect families are separated further by the eigenvalue
    pair of the conjugation action of an order-q element on the p-Sylow,
    reduced to its canonical representative (k and 1/k give the same group).
    """
    spec = B.spec
    p, q, n = spec.p, spec.q, spec.n
    orders = B.circle_orders
    Z = B.circle_np
    if bool((Z == Z.T).all()):
        return MultClass(ZP2Q) if max(orders) == n else MultClass(ZP2xZQ)
    p2 = p * p
    n_p_elements = sum(1 for o in orders if p2 % o == 0)
    if any(o == p2 for o in orders):
        if n_p_elements == p2:
            return MultClass(ZP2_RTIMES_ZQ)
        center = sum(1 for a in range(n) if np.array_equal(Z[a], Z[:, a]))
        return MultClass(ZQ_RTIMES_ZP2_rp if center == p else ZQ_RTIMES_ZP2_h)
    if n_p_elements != p2:
        return MultClass(ZP_x_ZQ_RTIMES_ZP)
    return _diagonal_class(B, orders)


def _diagonal_class(B: SkewBrace, orders: list[int]) -> MultClass:
    """G_K(k) vs G_F for a normal elementary p-Sylow in a non-abelian circle."""
    spec = B.spec
    p, q, n = spec.p, spec.q, spec.n
    assert p > 2, "elementary normal p-Sylow with non-abelian circle needs q | p-1"
    flat = B.circle_flat

    def powers(e: int) -> list[int]:
        out, x = [0], e
        while x != 0:
            out.append(x)
            x = flat[x * n + e]
        return out

    sylow = [a for a in range(n) if orders[a] in (1, p)]
    e1 = min(a for a in sylow if a != 0)
    e1pows = powers(e1)
    e2 = min(a for a in sylow if a not in set(e1pows))
    e2pows = powers(e2)
    coords: dict[int, tuple[int, int]] = {}
    for i, x in enumerate(e1pows):
        for j, y in enumerate(e2pows):
            coords[flat[x * n + y]] = (i, j)
    assert len(coords) == p * p
    u = min(a for a in range(n) if orders[a] == q)
    uinv = int(B.circle_inv_np[u])
    a11, a21 = coords[flat[flat[u * n + e1] * n + uinv]]
    a12, a22 = coords[flat[flat[u * n + e2] * n + uinv]]
    tr = (a11 + a22) % p
    det = (a11 * a22 - a12 * a21) % p
    disc = (tr * tr - 4 * det) % p
    if legendre(disc, p) == -1:
        return MultClass(G_F)
    root = next(s for s in range(p) if s * s % p == disc)
    inv2 = pow(2, -1, p)
    g = unit_of_order(p, q)
    w1 = dlog((tr + root) * inv2 % p, g, p)
    w2 = dlog((tr - root) * inv2 % p, g, p)
    if w1 == 0 and w2 == 0:
        raise RuntimeError("trivial conjugation action on the p-Sylow; not expected")
    if w1 == 0 or w2 == 0:
        return MultClass(G_K, 0)
    k = w2 * pow(w1, -1, q) % q
    return MultClass(G_K, min(k, pow(k, -1, q)))


def brace_invariants(B: SkewBrace) -> BraceInvariants:
    return BraceInvariants(
        ker_size=len(ker_lambda(B)),
        fix_size=len(fix_set(B)),
        mult_class=mult_group_class(B),
        bi_skew=is_bi_skew(B),
    )


def braces_isomorphic(B1: SkewBrace, B2: SkewBrace) -> bool:
    """True iff the braces' regular subgroups are Aut(A)-conjugate."""
    if B1.spec != B2.spec:
        raise ValueError("braces live over different carriers")
    from .regular import orbit_min_key  # local import to avoid a cycle

    if B1.lam == B2.lam:
        return True
    k1, _ = orbit_min_key(B1.spec, regular_from_brace(B1).elements)
    k2, _ = orbit_min_key(B2.spec, regular_from_brace(B2).elements)
    return k1 == k2


def cayley_isomorphic(t1: Sequence[Sequence[int]], t2: Sequence[Sequence[int]]) -> bool:
    """Generic backtracking isomorphism test on two Cayley tables.

    Debug oracle for the invariant-based classifier; meant for orders <= 200.
    Tables use indices 0..n-1 with 0 the identity.
    """
    n = len(t1)
    if len(t2) != n:
        return False
    if n > 200:
        raise ValueError("cayley_isomorphic is a small-order debug oracle (n <= 200)")
    T1 = [list(r) for r in t1]
    T2 = [list(r) for r in t2]

    def orders(T: list[list[int]]) -> list[int]:
        out = []
        for a in range(n):
            o, x = 1, a
            while x != 0:
                x = T[x][a]
                o += 1
            out.append(o)
        return out

    o1, o2 = orders(T1), orders(T2)
    if sorted(o1) != sorted(o2):
        return False
    # Greedy generating chain of G1 with the subgroup closed at each step.
    gens: list[int] = []
    sub = {0}
    while len(sub) < n:
        g = min(a for a in range(n) if a not in sub)
        gens.append(g)
        frontier = [0]
        sub = {0}
        while frontier:
            new = []
            for x in frontier:
                for h in gens:
                    y = T1[x][h]
                    if y not in sub:
                        sub.add(y)
                        new.append(y)
            frontier = new
    by_order: dict[int, list[int]] = {}
    for a in range(n):
        by_order.setdefault(o2[a], []).append(a)

    def extend(k: int, images: list[int]) -> bool:
        if k == len(gens):
            # Build the full map from the generator images and verify it.
            phi = {0: 0}
            frontier = [0]
            while frontier:
                new = []
                for x in frontier:
                    for g, img in zip(gens, images):
                        y = T1[x][g]
                        fy = T2[phi[x]][img]
                        if y in phi:
                            if phi[y] != fy:
                                return False
                        else:
                            phi[y] = fy
                            new.append(y)
                frontier = new
            if len(set(phi.values())) != n:
                return False
            return all(
                phi[T1[a][b]] == T2[phi[a]][phi[b]] for a in range(n) for b in range(n)
            )
        for cand in by_order[o1[gens[k]]]:
            if extend(k + 1, images + [cand]):
                return True
        return False

    return extend(0, [])
