"""Carriers Z_{p^2 q} and Z_p x Z_p x Z_q, their automorphism groups, and
holomorph arithmetic.

Elements and automorphisms are given small-integer indices; all hot paths run
on flat lookup tables.  Index encoding (stable, used by every serialized
artifact): CYCLIC (n mod p^2, m mod q) -> n + p^2*m; MIXED (a, b, c) ->
a + p*b + p^2*c.  Matrices act on column vectors in the ordered basis of the
two order-p generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .arith import primitive_root
from .cases import PrimePair

__all__ = [
    "Kind",
    "GroupSpec",
    "group_spec",
    "HolSubgroup",
    "AutSubgroupClass",
    "ClosureCapError",
    "aut_group_order",
    "hol_mul",
    "hol_inv",
    "hol_act",
    "hol_identity",
    "closure",
    "aut_closure",
    "carrier_subgroups",
    "aut_subgroups_of_order",
    "subgroup_classes_of_order",
]

Element = tuple  # (n, m) for CYCLIC, (a, b, c) for MIXED
AutDesc = tuple  # (i, j) for CYCLIC, ((m00, m01, m10, m11), alpha) for MIXED

# Full compose tables are cheap below this automorphism-group size; above it
# compositions are memoized on demand.
_COMPOSE_TABLE_MAX = 1024


class Kind(str, Enum):
    """Which abelian carrier of order p^2*q."""

    CYCLIC = "cyclic"  # Z_{p^2} x Z_q, i.e. Z_{p^2 q}
    MIXED = "mixed"    # Z_p x Z_p x Z_q


class ClosureCapError(RuntimeError):
    """A closure exceeded its configured size cap."""


class GroupSpec:
    """One carrier group: prime pair plus kind, with cached operation tables."""

    def __init__(self, p: int, q: int, kind: Kind | str):
        self.pair = PrimePair(p, q)
        self.p = p
        self.q = q
        self.kind = Kind(kind)

    def __repr__(self) -> str:
        return f"GroupSpec({self.p}, {self.q}, {self.kind.value})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupSpec)
            and (self.p, self.q, self.kind) == (other.p, other.q, other.kind)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.kind))

    def __reduce__(self):
        return (group_spec, (self.p, self.q, self.kind.value))

    # ---------------- carrier elements ----------------

    @property
    def n(self) -> int:
        """Carrier order p^2*q."""
        return self.p * self.p * self.q

    def encode(self, x: Element) -> int:
        """Element tuple -> index; components are reduced first."""
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            n, m = x
            return n % (p * p) + p * p * (m % q)
        a, b, c = x
        return a % p + p * (b % p) + p * p * (c % q)

    def decode(self, idx: int) -> Element:
        """Index -> canonical element tuple."""
        p, q = self.p, self.q
        if not 0 <= idx < self.n:
            raise ValueError(f"element index {idx} out of range for {self!r}")
        if self.kind is Kind.CYCLIC:
            return (idx % (p * p), idx // (p * p))
        return (idx % p, (idx // p) % p, idx // (p * p))

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(self.decode(i) for i in range(self.n))

    def add(self, x: Element, y: Element) -> Element:
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            return ((x[0] + y[0]) % (p * p), (x[1] + y[1]) % q)
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % q)

    def neg(self, x: Element) -> Element:
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            return (-x[0] % (p * p), -x[1] % q)
        return (-x[0] % p, -x[1] % p, -x[2] % q)

    def element_order(self, x: Element) -> int:
        """Additive order of x."""
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            on = p * p // gcd(x[0] % (p * p), p * p)
        else:
            on = p // gcd(gcd(x[0] % p, x[1] % p), p)
        return lcm(on, q // gcd(x[-1] % q, q))

    @cached_property
    def add_np(self) -> np.ndarray:
        """Addition table on indices, shape (n, n), int32."""
        p, q, n = self.p, self.q, self.n
        idx = np.arange(n)
        if self.kind is Kind.CYCLIC:
            nn, mm = idx % (p * p), idx // (p * p)
            return (
                (nn[:, None] + nn[None, :]) % (p * p)
                + p * p * ((mm[:, None] + mm[None, :]) % q)
            ).astype(np.int32)
        aa, bb, cc = idx % p, (idx // p) % p, idx // (p * p)
        return (
            (aa[:, None] + aa[None, :]) % p
            + p * ((bb[:, None] + bb[None, :]) % p)
            + p * p * ((cc[:, None] + cc[None, :]) % q)
        ).astype(np.int32)

    @cached_property
    def neg_np(self) -> np.ndarray:
        return np.array([self.encode(self.neg(x)) for x in self.elements], dtype=np.int32)

    @cached_property
    def add_flat(self) -> list[int]:
        return self.add_np.ravel().tolist()

    @cached_property
    def neg_list(self) -> list[int]:
        return self.neg_np.tolist()

    def sylow(self, prime: int) -> frozenset[int]:
        """Indices of the (unique) Sylow subgroup of the carrier at this prime."""
        if prime not in (self.p, self.q):
            raise ValueError(f"{prime} does not divide the carrier order")
        return frozenset(
            i for i, x in enumerate(self.elements)
            if _is_power(self.element_order(x), prime)
        )

    # ---------------- automorphisms ----------------

    @cached_property
    def aut_descriptors(self) -> tuple[AutDesc, ...]:
        """All automorphisms as descriptors, in ascending descriptor order."""
        p, q = self.p, self.q
        out: list[AutDesc] = []
        if self.kind is Kind.CYCLIC:
            for i in range(1, p * p):
                if i % p == 0:
                    continue
                for j in range(1, q):
                    out.append((i, j))
        else:
            for m00 in range(p):
                for m01 in range(p):
                    for m10 in range(p):
                        for m11 in range(p):
                            if (m00 * m11 - m01 * m10) % p == 0:
                                continue
                            for alpha in range(1, q):
                                out.append(((m00, m01, m10, m11), alpha))
        assert len(out) == aut_group_order(self)
        return tuple(out)

    @cached_property
    def aut_index(self) -> dict[AutDesc, int]:
        return {f: k for k, f in enumerate(self.aut_descriptors)}

    @property
    def n_aut(self) -> int:
        return len(self.aut_descriptors)

    @cached_property
    def identity_aut(self) -> int:
        if self.kind is Kind.CYCLIC:
            return self.aut_index[(1, 1)]
        return self.aut_index[((1, 0, 0, 1), 1)]

    def apply_desc(self, f: AutDesc, x: Element) -> Element:
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            i, j = f
            return (i * x[0] % (p * p), j * x[1] % q)
        (m00, m01, m10, m11), alpha = f
        return (
            (m00 * x[0] + m01 * x[1]) % p,
            (m10 * x[0] + m11 * x[1]) % p,
            alpha * x[2] % q,
        )

    def compose_desc(self, f: AutDesc, g: AutDesc) -> AutDesc:
        """Descriptor of f then-after g, i.e. x -> f(g(x))."""
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            return (f[0] * g[0] % (p * p), f[1] * g[1] % q)
        a, b = f[0], g[0]
        return (
            (
                (a[0] * b[0] + a[1] * b[2]) % p,
                (a[0] * b[1] + a[1] * b[3]) % p,
                (a[2] * b[0] + a[3] * b[2]) % p,
                (a[2] * b[1] + a[3] * b[3]) % p,
            ),
            f[1] * g[1] % q,
        )

    def invert_desc(self, f: AutDesc) -> AutDesc:
        p, q = self.p, self.q
        if self.kind is Kind.CYCLIC:
            return (pow(f[0], -1, p * p), pow(f[1], -1, q))
        (m00, m01, m10, m11), alpha = f
        d = pow(m00 * m11 - m01 * m10, -1, p)
        return (
            (m11 * d % p, -m01 * d % p, -m10 * d % p, m00 * d % p),
            pow(alpha, -1, q),
        )

    @cached_property
    def apply_np(self) -> np.ndarray:
        """apply table on indices, shape (n_aut, n), int32."""
        p, q, n = self.p, self.q, self.n
        idx = np.arange(n)
        rows = np.empty((self.n_aut, n), dtype=np.int32)
        if self.kind is Kind.CYCLIC:
            nn, mm = idx % (p * p), idx // (p * p)
            for k, (i, j) in enumerate(self.aut_descriptors):
                rows[k] = (i * nn) % (p * p) + p * p * ((j * mm) % q)
        else:
            aa, bb, cc = idx % p, (idx // p) % p, idx // (p * p)
            for k, ((m00, m01, m10, m11), alpha) in enumerate(self.aut_descriptors):
                rows[k] = (
                    (m00 * aa + m01 * bb) % p
                    + p * ((m10 * aa + m11 * bb) % p)
                    + p * p * ((alpha * cc) % q)
                )
        return rows

    @cached_property
    def apply_flat(self) -> list[int]:
        return self.apply_np.ravel().tolist()

    @cached_property
    def compose_flat(self) -> list[int] | None:
        """Full compose table (f*n_aut + g -> index), or None when too large."""
        if self.n_aut > _COMPOSE_TABLE_MAX:
            return None
        descs, index = self.aut_descriptors, self.aut_index
        out = []
        for f in descs:
            for g in descs:
                out.append(index[self.compose_desc(f, g)])
        return out

    def compose_idx(self, f: int, g: int) -> int:
        table = self.compose_flat
        if table is not None:
            return table[f * self.n_aut + g]
        memo = self._compose_memo
        key = f * self.n_aut + g
        got = memo.get(key)
        if got is None:
            descs = self.aut_descriptors
            got = memo[key] = self.aut_index[self.compose_desc(descs[f], descs[g])]
        return got

    @cached_property
    def _compose_memo(self) -> dict[int, int]:
        return {}

    @cached_property
    def aut_inverse(self) -> list[int]:
        return [self.aut_index[self.invert_desc(f)] for f in self.aut_descriptors]

    @cached_property
    def aut_orders(self) -> list[int]:
        out = []
        for k, f in enumerate(self.aut_descriptors):
            o, g = 1, f
            while g != self.aut_descriptors[self.identity_aut]:
                g = self.compose_desc(g, f)
                o += 1
            out.append(o)
        return out

    @cached_property
    def aut_generators(self) -> tuple[int, ...]:
        """A small generating set of Aut(A), as indices (verified by closure)."""
        p, q = self.p, self.q
        descs: list[AutDesc] = []
        if self.kind is Kind.CYCLIC:
            descs.append((primitive_root(p * p), 1))
            if q > 2:
                descs.append((1, primitive_root(q)))
        else:
            descs.append(((1, 1, 0, 1), 1))
            descs.append(((1, 0, 1, 1), 1))
            if p > 2:
                descs.append(((primitive_root(p), 0, 0, 1), 1))
            if q > 2:
                descs.append(((1, 0, 0, 1), primitive_root(q)))
        gens = tuple(self.aut_index[f] for f in descs)
        assert len(aut_closure(self, gens)) == self.n_aut
        return gens

    @cached_property
    def _conj_maps(self) -> list[list[int]]:
        """Per Aut-generator psi: table f -> psi o f o psi^-1 (on indices)."""
        maps = []
        for g in self.aut_generators:
            psi = self.aut_descriptors[g]
            psi_inv = self.invert_desc(psi)
            table = [
                self.aut_index[self.compose_desc(self.compose_desc(psi, f), psi_inv)]
                for f in self.aut_descriptors
            ]
            maps.append(table)
        return maps

    # ---------------- holomorph ----------------

    @property
    def hol_order(self) -> int:
        return self.n * self.n_aut

    def hol_encode(self, x: tuple[Element, AutDesc]) -> int:
        a, f = x
        return self.encode(a) * self.n_aut + self.aut_index[f]

    def hol_decode(self, h: int) -> tuple[Element, AutDesc]:
        a, f = divmod(h, self.n_aut)
        return (self.decode(a), self.aut_descriptors[f])


_SPEC_CACHE: dict[tuple[int, int, Kind], GroupSpec] = {}


def group_spec(p: int, q: int, kind: Kind | str) -> GroupSpec:
    """Shared, cached GroupSpec instance for (p, q, kind)."""
    key = (p, q, Kind(kind))
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = _SPEC_CACHE[key] = GroupSpec(p, q, kind)
    return spec


def aut_group_order(spec: GroupSpec) -> int:
    """|Aut(A)| in closed form: p(p-1)(q-1) cyclic, p(p-1)^2(p+1)(q-1) mixed."""
    p, q = spec.p, spec.q
    if spec.kind is Kind.CYCLIC:
        return p * (p - 1) * (q - 1)
    return p * (p - 1) * (p - 1) * (p + 1) * (q - 1)


def hol_identity(spec: GroupSpec) -> tuple[Element, AutDesc]:
    return (spec.decode(0), spec.aut_descriptors[spec.identity_aut])


def hol_mul(
    spec: GroupSpec, x: tuple[Element, AutDesc], y: tuple[Element, AutDesc]
) -> tuple[Element, AutDesc]:
    """(a,f)(b,g) = (a + f(b), f o g)."""
    (a, f), (b, g) = x, y
    return (spec.add(a, spec.apply_desc(f, b)), spec.compose_desc(f, g))


def hol_inv(spec: GroupSpec, x: tuple[Element, AutDesc]) -> tuple[Element, AutDesc]:
    """(a,f)^-1 = (-f^-1(a), f^-1)."""
    a, f = x
    finv = spec.invert_desc(f)
    return (spec.neg(spec.apply_desc(finv, a)), finv)


def hol_act(spec: GroupSpec, x: tuple[Element, AutDesc], pt: Element) -> Element:
    """Natural action on the carrier: (a,f) . x = a + f(x)."""
    a, f = x
    return spec.add(a, spec.apply_desc(f, pt))


class HolSubgroup:
    """A subgroup of Hol(A), stored as encoded element indices.

    Encoded index of (a, f) is encode(a) * n_aut + aut_index(f).  Equality and
    hashing use the element set only; generators are kept for reporting.
    """

    __slots__ = ("spec", "elements", "generators", "_key")

    def __init__(
        self, spec: GroupSpec, elements: frozenset[int], generators: tuple[int, ...] = ()
    ):
        self.spec = spec
        self.elements = elements
        self.generators = generators
        self._key: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> tuple[int, ...]:
        if self._key is None:
            self._key = tuple(sorted(self.elements))
        return self._key

    @property
    def pairs(self) -> list[tuple[Element, AutDesc]]:
        """Canonical sorted list of (element, automorphism) pairs."""
        return [self.spec.hol_decode(h) for h in self.key]

    @property
    def generator_pairs(self) -> list[tuple[Element, AutDesc]]:
        return [self.spec.hol_decode(h) for h in self.generators]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, h: int) -> bool:
        return h in self.elements

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HolSubgroup)
            and self.spec == other.spec
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.elements))

    def __repr__(self) -> str:
        return f"HolSubgroup({self.spec!r}, order={self.order})"


def closure(
    spec: GroupSpec,
    generators: Sequence[tuple[Element, AutDesc]],
    cap: int | None = None,
) -> HolSubgroup:
    """Subgroup of Hol(A) generated by the given (element, automorphism) pairs.

    Saturates products breadth-first; a finite group needs no explicit
    inverses.  Aborts with ClosureCapError if the closure exceeds `cap`
    (default: |Hol(A)|, i.e. never).
    """
    if not generators:
        raise ValueError("need at least one generator")
    gens = [spec.hol_encode(x) for x in generators]
    got = _hol_closure(spec, gens, cap if cap is not None else spec.hol_order)
    if got is None:
        raise ClosureCapError(
            f"closure of {len(gens)} generators in Hol({spec!r}) exceeded cap {cap}"
        )
    return HolSubgroup(spec, got, tuple(gens))


def _hol_closure(
    spec: GroupSpec,
    gens: Sequence[int],
    cap: int,
    seed: Iterable[int] = (),
    seed_gens: Sequence[int] = (),
    forbid_pure_aut: bool = False,
    forbid_dup_pi1: bool = False,
) -> frozenset[int] | None:
    """Core closure on encoded indices.

    `seed` may be an already-closed subgroup whose generators are `seed_gens`;
    the result is then its join with `gens`.  Returns None when the size cap is
    exceeded, or when `forbid_pure_aut` is set and a non-identity element fixing
    0 shows up (such a subgroup can never be regular, so callers prune early).
    `forbid_dup_pi1` strengthens that: two elements sharing a first projection
    quotient to a stabilizer element, so any subgroup of a regular group has
    pairwise-distinct projections and a repeat aborts the search immediately.
    """
    n_aut = spec.n_aut
    add = spec.add_flat
    apply_ = spec.apply_flat
    compose_flat = spec.compose_flat
    compose = spec.compose_idx
    n = spec.n
    ident = spec.identity_aut

    all_gens = [(g // n_aut, g % n_aut) for g in (*seed_gens, *gens)]
    seen = set(seed)
    seen.add(ident)  # encoded identity: element 0, identity aut
    seen.update((*seed_gens, *gens))
    if len(seen) > cap:
        return None
    if forbid_pure_aut:
        for h in seen:
            if h < n_aut and h != ident:
                return None
    pi1_seen: set[int] | None = None
    if forbid_dup_pi1:
        pi1_seen = {h // n_aut for h in seen}
        if len(pi1_seen) != len(seen):
            return None
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for h in frontier:
            xa, xf = divmod(h, n_aut)
            xan = xa * n
            xfn = xf * n
            for ga, gf in all_gens:
                if compose_flat is None:
                    y = add[xan + apply_[xfn + ga]] * n_aut + compose(xf, gf)
                else:
                    y = (
                        add[xan + apply_[xfn + ga]] * n_aut
                        + compose_flat[xf * n_aut + gf]
                    )
                if y not in seen:
                    if forbid_pure_aut and y < n_aut and y != ident:
                        return None
                    if pi1_seen is not None:
                        ya = y // n_aut
                        if ya in pi1_seen:
                            return None
                        pi1_seen.add(ya)
                    seen.add(y)
                    if len(seen) > cap:
                        return None
                    next_frontier.append(y)
        frontier = next_frontier
    return frozenset(seen)


def aut_closure(
    spec: GroupSpec, gens: Iterable[int], cap: int | None = None
) -> frozenset[int] | None:
    """Subgroup of Aut(A) generated by the given indices; None if cap exceeded."""
    gens = list(gens)
    seen = {spec.identity_aut, *gens}
    if cap is not None and len(seen) > cap:
        return None
    compose = spec.compose_idx
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for f in frontier:
            for g in gens:
                y = compose(f, g)
                if y not in seen:
                    seen.add(y)
                    if cap is not None and len(seen) > cap:
                        return None
                    next_frontier.append(y)
        frontier = next_frontier
    return frozenset(seen)


@lru_cache(maxsize=None)
def carrier_subgroups(spec: GroupSpec, order: int | None = None) -> list[frozenset[int]]:
    """All subgroups of the additive carrier (as index sets), smallest first.

    Cyclic subgroups are collected from element chains, then saturated under
    pairwise joins (H + C is already a subgroup since A is abelian).
    """
    n = spec.n
    add = spec.add_flat
    cyclics: set[frozenset[int]] = set()
    for x in range(n):
        chain = [0]
        y = x
        while y != 0:
            chain.append(y)
            y = add[y * n + x]
        cyclics.add(frozenset(chain))
    subs = set(cyclics)
    frontier = list(subs)
    while frontier:
        new = []
        for H in frontier:
            for C in cyclics:
                if C <= H:
                    continue
                J = frozenset(add[h * n + c] for h in H for c in C)
                if J not in subs:
                    subs.add(J)
                    new.append(J)
        frontier = new
    out = [S for S in subs if order is None or len(S) == order]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class AutSubgroupClass:
    """One conjugacy class of order-k subgroups of Aut(A)."""

    spec: GroupSpec
    order: int
    elements: frozenset[int]          # the representative subgroup
    generators: tuple[int, ...]       # minimal generators of the representative
    n_conjugates: int                 # size of the conjugacy class

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


@lru_cache(maxsize=None)
def aut_subgroups_of_order(spec: GroupSpec, k: int) -> list[frozenset[int]]:
    """Every subgroup of Aut(A) of order exactly k (k as in the enumeration:
    a divisor of the carrier order, so such subgroups need at most two
    generators).
    """
    if k == 1:
        return [frozenset({spec.identity_aut})]
    if spec.n_aut % k != 0 or spec.n % k != 0:
        raise ValueError(
            f"order {k} must divide both |Aut| = {spec.n_aut} and |A| = {spec.n}"
        )
    orders = spec.aut_orders
    pool = [f for f in range(spec.n_aut) if f != spec.identity_aut and k % orders[f] == 0]
    found: dict[frozenset[int], None] = {}
    cyclic_seeds: list[tuple[frozenset[int], int]] = []
    seen_cyclic: set[frozenset[int]] = set()
    for f in pool:
        S = aut_closure(spec, (f,), cap=k)
        if S is None or S in seen_cyclic:
            continue
        seen_cyclic.add(S)
        cyclic_seeds.append((S, f))
        if len(S) == k:
            found[S] = None
    for S, f in cyclic_seeds:
        if len(S) == k:
            continue
        for g in pool:
            if g in S:
                continue
            T = aut_closure(spec, (f, g), cap=k)
            if T is not None and len(T) == k:
                found.setdefault(T, None)
    return sorted(found, key=lambda s: sorted(s))


@lru_cache(maxsize=None)
def subgroup_classes_of_order(spec: GroupSpec, k: int) -> list[AutSubgroupClass]:
    """Conjugacy-class representatives of the order-k subgroups of Aut(A).

    Representatives are orbit-minimal by sorted element tuple; the class list
    is sorted the same way, so output is deterministic.
    """
    all_subs = {frozenset(s): None for s in aut_subgroups_of_order(spec, k)}
    conj_maps = spec._conj_maps
    classes: list[AutSubgroupClass] = []
    unassigned = dict(all_subs)
    while unassigned:
        start = min(unassigned, key=lambda s: sorted(s))
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for S in frontier:
                for cm in conj_maps:
                    T = frozenset(cm[f] for f in S)
                    if T not in orbit:
                        orbit.add(T)
                        new.append(T)
            frontier = new
        for S in orbit:
            # Conjugates of an order-k subgroup are order-k subgroups, so the
            # exhaustive scan must already know every one of them.
            unassigned.pop(S)
        rep = min(orbit, key=lambda s: sorted(s))
        classes.append(
            AutSubgroupClass(
                spec=spec,
                order=k,
                elements=rep,
                generators=_minimal_generators(spec, rep),
                n_conjugates=len(orbit),
            )
        )
    classes.sort(key=lambda c: c.key)
    return classes


def _is_power(n: int, prime: int) -> bool:
    while n % prime == 0:
        n //= prime
    return n == 1


def _minimal_generators(spec: GroupSpec, S: frozenset[int]) -> tuple[int, ...]:
    members = sorted(S)
    k = len(S)
    if k == 1:
        return ()
    for f in members:
        if f != spec.identity_aut and len(aut_closure(spec, (f,), cap=k)) == k:
            return (f,)
    for f in members:
        if f == spec.identity_aut:
            continue
        for g in members:
            if g <= f or g == spec.identity_aut:
                continue
            T = aut_closure(spec, (f, g), cap=k)
            if T is not None and len(T) == k:
                return (f, g)
    raise RuntimeError(f"subgroup of order {k} is not 2-generated; unexpected here")
