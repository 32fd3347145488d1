"""Carrier groups, automorphisms, holomorph arithmetic, subgroup machinery."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from braceforge.algebra import (
    ClosureCapError,
    GroupSpec,
    Kind,
    aut_closure,
    aut_group_order,
    carrier_subgroups,
    closure,
    group_spec,
    hol_act,
    hol_identity,
    hol_inv,
    hol_mul,
    subgroup_classes_of_order,
)

SMALL_SPECS = [
    group_spec(p, q, kind)
    for (p, q) in [(2, 3), (3, 2), (2, 5), (2, 7)]
    for kind in (Kind.CYCLIC, Kind.MIXED)
]


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=repr)
def test_encode_decode_round_trip(spec):
    for idx in range(spec.n):
        assert spec.encode(spec.decode(idx)) == idx
    with pytest.raises(ValueError):
        spec.decode(spec.n)
    # encode reduces components first
    if spec.kind is Kind.CYCLIC:
        assert spec.encode((spec.p**2, spec.q)) == 0
    else:
        assert spec.encode((spec.p, spec.p, spec.q)) == 0


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=repr)
def test_addition_is_an_abelian_group(spec):
    add = spec.add_np
    n = spec.n
    assert np.array_equal(add[0], np.arange(n))
    assert np.array_equal(add, add.T)
    # associativity, exhaustively: (a+b)+c == a+(b+c)
    for a in range(n):
        assert np.array_equal(add[add[a]], add[a][add])
    neg = spec.neg_np
    assert np.all(add[np.arange(n), neg] == 0)


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=repr)
def test_element_order_brute_force(spec):
    for idx in range(spec.n):
        x = spec.decode(idx)
        k, acc = 1, x
        while spec.encode(acc) != 0:
            acc = spec.add(acc, x)
            k += 1
        assert spec.element_order(x) == k


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=repr)
def test_aut_count_against_exhaustive_hom_scan(spec):
    """Count bijective additive endomorphisms from generator images directly."""
    n = spec.n
    add = spec.add_np
    # multiples[x, k] = k*x
    multiples = np.zeros((n, max(spec.p**2, spec.q) + 1), dtype=np.int64)
    for x in range(n):
        acc = 0
        for k in range(1, multiples.shape[1]):
            acc = int(add[acc, x])
            multiples[x, k] = acc
    idx = np.arange(n)
    if spec.kind is Kind.CYCLIC:
        pp = spec.p**2
        coef1, coef2 = idx % pp, idx // pp
        gens_ok1 = [x for x in range(n) if pp % spec.element_order(spec.decode(x)) == 0]
        gens_ok2 = [x for x in range(n) if spec.q % spec.element_order(spec.decode(x)) == 0]
        count = 0
        for im1 in gens_ok1:
            part1 = multiples[im1][coef1]
            for im2 in gens_ok2:
                image = add[part1, multiples[im2][coef2]]
                count += len(np.unique(image)) == n
    else:
        p = spec.p
        coef1, coef2, coef3 = idx % p, (idx // p) % p, idx // (p * p)
        p_ok = [x for x in range(n) if p % spec.element_order(spec.decode(x)) == 0]
        q_ok = [x for x in range(n) if spec.q % spec.element_order(spec.decode(x)) == 0]
        count = 0
        for im1 in p_ok:
            part1 = multiples[im1][coef1]
            for im2 in p_ok:
                part12 = add[part1, multiples[im2][coef2]]
                for im3 in q_ok:
                    image = add[part12, multiples[im3][coef3]]
                    count += len(np.unique(image)) == n
    assert count == spec.n_aut == aut_group_order(spec)


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=repr)
def test_automorphisms_are_additive_and_compose(spec):
    apply_np = spec.apply_np
    add = spec.add_np
    for f in range(spec.n_aut):
        row = apply_np[f]
        assert row[0] == 0
        assert np.array_equal(row[add], add[row[:, None], row[None, :]])
    # composition table agrees with functional composition; inverses invert
    for f in range(spec.n_aut):
        for g in range(spec.n_aut):
            assert np.array_equal(
                apply_np[spec.compose_idx(f, g)], apply_np[f][apply_np[g]]
            )
        assert spec.compose_idx(spec.aut_inverse[f], f) == spec.identity_aut
    # aut_orders: f^ord == id and ord is minimal
    for f, d in enumerate(spec.aut_orders):
        acc = spec.identity_aut
        for k in range(1, d + 1):
            acc = spec.compose_idx(acc, f)
            assert (acc == spec.identity_aut) == (k == d)


def _hol_elements(spec):
    return [
        (spec.decode(a), spec.aut_descriptors[f])
        for a in range(spec.n)
        for f in range(spec.n_aut)
    ]


@pytest.mark.parametrize("kind", [Kind.CYCLIC, Kind.MIXED])
def test_holomorph_group_laws_and_action(kind):
    spec = group_spec(3, 2, kind)
    els = _hol_elements(spec)
    e = hol_identity(spec)
    rng = np.random.default_rng(7)
    sample = [els[i] for i in rng.integers(0, len(els), size=40)]
    for x in sample:
        assert hol_mul(spec, e, x) == x == hol_mul(spec, x, e)
        assert hol_mul(spec, x, hol_inv(spec, x)) == e
        for y in sample[:12]:
            xy = hol_mul(spec, x, y)
            for z in sample[:6]:
                assert hol_mul(spec, xy, z) == hol_mul(spec, x, hol_mul(spec, y, z))
            # action compatibility: (xy).pt == x.(y.pt)
            for pt_idx in (0, 1, spec.n - 1):
                pt = spec.decode(pt_idx)
                assert hol_act(spec, xy, pt) == hol_act(spec, x, hol_act(spec, y, pt))
    # faithful: only the identity fixes every point
    fixers = [
        h for h in els if all(hol_act(spec, h, spec.decode(i)) == spec.decode(i) for i in range(spec.n))
    ]
    assert fixers == [e]


def test_hol_act_spec_example():
    # ((1,0), phi_{8,1}) applied to (0,1) in the cyclic carrier of (3,2)
    spec = group_spec(3, 2, Kind.CYCLIC)
    assert hol_act(spec, ((1, 0), (8, 1)), (0, 1)) == (1, 1)
    assert hol_mul(spec, ((1, 0), (1, 1)), ((1, 0), (1, 1))) == ((2, 0), (1, 1))


def test_closure_known_orders():
    spec = group_spec(3, 2, Kind.CYCLIC)
    ident = spec.aut_descriptors[spec.identity_aut]
    assert closure(spec, [((1, 0), ident)]).order == 9
    H = closure(spec, [((1, 0), ident), ((0, 1), (8, 1))])
    assert H.order == 18
    spec73 = group_spec(7, 3, Kind.MIXED)
    ident73 = spec73.aut_descriptors[spec73.identity_aut]
    d1 = ((2, 0, 0, 2), 1)  # diag(g, g) with g = 2 of order 3 mod 7
    G = closure(
        spec73,
        [((1, 0, 0), ident73), ((0, 1, 0), ident73), ((0, 0, 1), d1)],
    )
    assert G.order == 147


def test_closure_properties_and_cap():
    spec = group_spec(3, 2, Kind.MIXED)
    H = closure(spec, [((1, 0, 0), (( 1, 1, 0, 1), 1)), ((0, 0, 1), spec.aut_descriptors[spec.identity_aut])])
    ids = H.elements
    for h in list(ids)[:20]:
        pair = spec.hol_decode(h)
        assert spec.hol_encode(hol_inv(spec, pair)) in ids
        for g in list(ids)[:10]:
            assert spec.hol_encode(hol_mul(spec, pair, spec.hol_decode(g))) in ids
    assert spec.hol_encode(hol_identity(spec)) in ids
    with pytest.raises(ClosureCapError):
        closure(spec, [((1, 0, 0), spec.aut_descriptors[spec.identity_aut])], cap=2)
    with pytest.raises(ValueError):
        closure(spec, [])


def test_carrier_subgroup_counts():
    # cyclic carrier: exactly one subgroup per divisor
    spec = group_spec(3, 7, Kind.CYCLIC)
    subs = carrier_subgroups(spec)
    assert sorted(len(S) for S in subs) == [1, 3, 7, 9, 21, 63]
    # mixed carrier: p+1 subgroups of order p (the lines in Z_p x Z_p)
    spec = group_spec(3, 7, Kind.MIXED)
    by_order = {}
    for S in carrier_subgroups(spec):
        by_order[len(S)] = by_order.get(len(S), 0) + 1
    assert by_order == {1: 1, 3: 4, 9: 1, 7: 1, 21: 4, 63: 1}


def _conjugate(spec, S, f):
    finv = spec.aut_inverse[f]
    return frozenset(spec.compose_idx(f, spec.compose_idx(s, finv)) for s in S)


def test_aut_subgroup_classes_known_counts():
    spec = group_spec(7, 3, Kind.MIXED)
    k3 = subgroup_classes_of_order(spec, 3)
    assert len(k3) == 3
    # the diagonal generators diag(2, 2^s), s in {0,1,2}, hit all three classes
    hit = set()
    for s in (0, 1, 2):
        d = ((2, 0, 0, pow(2, s, 7)), 1)
        S = aut_closure(spec, [spec.aut_index[d]])
        for i, cls in enumerate(k3):
            if any(_conjugate(spec, S, f) == cls.elements for f in range(spec.n_aut)):
                hit.add(i)
                break
    assert hit == {0, 1, 2}
    assert len(subgroup_classes_of_order(spec, 7)) == 1
    assert len(subgroup_classes_of_order(group_spec(3, 19, Kind.CYCLIC), 9)) == 4


def test_aut_subgroup_classes_pairwise_nonconjugate():
    spec = group_spec(3, 2, Kind.MIXED)
    with pytest.raises(ValueError):
        subgroup_classes_of_order(spec, 4)  # 4 does not divide |A| = 18
    for k in (2, 3, 6):
        classes = subgroup_classes_of_order(spec, k)
        for i, a in enumerate(classes):
            for b in classes[i + 1 :]:
                assert all(
                    _conjugate(spec, a.elements, f) != b.elements
                    for f in range(spec.n_aut)
                )


@given(st.integers(0, 17), st.integers(0, 17), st.integers(0, 17))
@settings(max_examples=60, deadline=None)
def test_mixed_addition_componentwise(a, b, c):
    spec = group_spec(3, 2, Kind.MIXED)
    x = spec.decode(a % spec.n)
    y = spec.decode(b % spec.n)
    s = spec.add(x, y)
    assert s == ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2]) % 2)
    assert spec.neg(x) == ((-x[0]) % 3, (-x[1]) % 3, (-x[2]) % 2)
