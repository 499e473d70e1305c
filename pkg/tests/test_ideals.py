import pytest
from hypothesis import given
from hypothesis import strategies as st

import zdgraph as z

from oracles import (
    naive_additive_closure,
    naive_ideal_product,
    naive_is_one_sided_ideal,
    subset_scan_ideals,
)

E11 = 8  # corner matrix unit in M2(Z2)


def test_additive_closure_examples(rings):
    assert z.additive_closure(rings["Z6"], [2]).indices() == (0, 2, 4)
    assert z.additive_closure(rings["Z6"], []).indices() == (0,)
    z12 = z.make_cyclic_ring(12)
    assert z.additive_closure(z12, [4, 6]).indices() == (0, 2, 4, 6, 8, 10)


@given(st.sets(st.integers(min_value=0, max_value=11), max_size=5))
def test_additive_closure_matches_naive(seed):
    r = z.make_cyclic_ring(12)
    got = set(z.additive_closure(r, seed).indices())
    assert got == naive_additive_closure(r, seed)


def test_principal_ideals(rings):
    r6 = rings["Z6"]
    assert z.principal_left_ideal(r6, 2).set.indices() == (0, 2, 4)
    assert z.principal_left_ideal(r6, 0).set.indices() == (0,)
    m = rings["M2(Z2)"]
    col = z.principal_left_ideal(m, E11)
    assert len(col.set) == 4  # first column arbitrary, second column zero
    assert col.is_left and not col.is_right
    row = z.principal_right_ideal(m, E11)
    assert len(row.set) == 4
    assert row.is_right and not row.is_left


def test_is_left_ideal_examples(rings):
    r6 = rings["Z6"]
    assert z.is_left_ideal(r6, z.ElementSet.from_indices(r6, [0, 2, 4]))
    assert not z.is_left_ideal(r6, z.ElementSet.from_indices(r6, [0, 2]))
    m = rings["M2(Z2)"]
    s = z.ElementSet.from_indices(m, [0, 4])  # {0, E12}
    assert not z.is_left_ideal(m, s)
    assert not z.is_right_ideal(m, s)


def test_ideal_predicates_match_naive(rings):
    for name in ("Z6", "Z8", "M2(Z2)"):
        ring = rings[name]
        for bits in range(1, 1 << ring.order, 7):  # sampled subsets
            s = z.ElementSet(ring, bits)
            for side, pred in (("left", z.is_left_ideal), ("right", z.is_right_ideal)):
                assert pred(ring, s) == naive_is_one_sided_ideal(ring, s.indices(), side)


def test_enumerate_ideals_examples(rings):
    left6 = z.enumerate_one_sided_ideals(rings["Z6"], "left")
    assert [i.set.indices() for i in left6] == [
        (0,),
        (0, 3),
        (0, 2, 4),
        (0, 1, 2, 3, 4, 5),
    ]
    assert len(z.enumerate_one_sided_ideals(rings["M2(Z2)"], "left")) == 5
    assert len(z.enumerate_one_sided_ideals(rings["Z5"], "left")) == 2


def test_enumerate_matches_subset_scan(rings):
    for name in ("Z6", "Z8", "Z9", "M2(Z2)", "Z2xZ4"):
        ring = rings[name]
        for side in ("left", "right"):
            enumerated = [i.set for i in z.enumerate_one_sided_ideals(ring, side)]
            assert enumerated == subset_scan_ideals(ring, side)


def test_commutative_sides_coincide(rings):
    for name in ("Z6", "Z8", "Z12", "Z2xZ4", "Z2xZ2xZ2"):
        ring = rings[name]
        left = [i.bits for i in z.enumerate_one_sided_ideals(ring, "left")]
        right = [i.bits for i in z.enumerate_one_sided_ideals(ring, "right")]
        assert left == right


def test_ideal_product_examples(rings):
    r6 = rings["Z6"]
    evens = z.ElementSet.from_indices(r6, [0, 2, 4])
    threes = z.ElementSet.from_indices(r6, [0, 3])
    assert z.ideal_product(r6, evens, threes).indices() == (0,)
    r8 = rings["Z8"]
    half = z.ElementSet.from_indices(r8, [0, 2, 4, 6])
    assert z.ideal_product(r8, half, half).indices() == (0, 4)


def test_ideal_product_unital_absorption(rings):
    for name in ("Z6", "Z8", "M2(Z2)"):
        ring = rings[name]
        full = z.ElementSet.full(ring)
        for ideal in z.enumerate_one_sided_ideals(ring, "right"):
            assert z.ideal_product(ring, ideal.set, full) == ideal.set
        for ideal in z.enumerate_one_sided_ideals(ring, "left"):
            assert z.ideal_product(ring, full, ideal.set) == ideal.set


def test_ideal_product_matches_naive(rings):
    for name in ("Z6", "Z8", "M2(Z2)"):
        ring = rings[name]
        ideals = [i.set for i in z.enumerate_one_sided_ideals(ring, "left")]
        ideals += [i.set for i in z.enumerate_one_sided_ideals(ring, "right")]
        for a in ideals:
            for b in ideals:
                assert z.ideal_product(ring, a, b) == naive_ideal_product(ring, a, b)


@given(
    st.sets(st.integers(min_value=0, max_value=11), max_size=3),
    st.sets(st.integers(min_value=0, max_value=11), max_size=3),
)
def test_ideal_product_matches_naive_on_random_subgroups(seed_a, seed_b):
    r = z.make_cyclic_ring(12)
    a = z.additive_closure(r, seed_a)
    b = z.additive_closure(r, seed_b)
    assert z.ideal_product(r, a, b) == naive_ideal_product(r, a, b)


def test_ideal_product_rejects_non_subgroups(rings):
    r6 = rings["Z6"]
    bad = z.ElementSet.from_indices(r6, [0, 2])
    with pytest.raises(ValueError):
        z.ideal_product(r6, bad, bad)


def test_ideal_product_associative_on_ideals(rings):
    for name in ("Z6", "Z8", "M2(Z2)", "Z2xZ4"):
        ring = rings[name]
        pool = {i.bits: i.set for i in z.enumerate_one_sided_ideals(ring, "left")}
        for i in z.enumerate_one_sided_ideals(ring, "right"):
            pool.setdefault(i.bits, i.set)
        ideals = list(pool.values())
        for a in ideals:
            for b in ideals:
                ab = z.ideal_product(ring, a, b)
                for c in ideals:
                    bc = z.ideal_product(ring, b, c)
                    assert z.ideal_product(ring, ab, c) == z.ideal_product(ring, a, bc)


def test_annihilators(rings):
    r6 = rings["Z6"]
    assert z.left_annihilator(r6, z.ElementSet.from_indices(r6, [3])).indices() == (0, 2, 4)
    assert z.left_annihilator(r6, z.ElementSet.zero_set(r6)) == z.ElementSet.full(r6)
    m = rings["M2(Z2)"]
    ann = z.left_annihilator(m, z.ElementSet.from_indices(m, [E11]))
    assert len(ann) == 4  # matrices with zero first column


def test_annihilator_sides(rings):
    m = rings["M2(Z2)"]
    for ideal in z.enumerate_one_sided_ideals(m, "left"):
        assert z.is_left_ideal(m, z.left_annihilator(m, ideal.set))
        assert z.is_right_ideal(m, z.right_annihilator(m, ideal.set))


def test_jacobson_radical(rings):
    assert z.jacobson_radical(rings["Z8"]).indices() == (0, 2, 4, 6)
    assert z.jacobson_radical(rings["Z6"]).indices() == (0,)
    assert z.jacobson_radical(rings["M2(Z2)"]).indices() == (0,)


def test_jacobson_radical_sides_agree(rings):
    for ring in rings.values():
        if ring.is_zero_ring():
            continue
        assert z.jacobson_radical(ring, "right") == z.jacobson_radical(ring, "left")
