"""Relation values, boolean algebra, and the two relative operations.

The relative operations are checked against independent coefficient
oracles: composition by the exists-k rule and relative sum by the
for-all-k rule, both written as plain loops over matrix entries.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relatives.errors import UniverseMismatchError
from relatives.relation import (
    Relation,
    antidiagonal,
    bottom,
    enumerate_relations,
    identity,
    top,
)


def rel(n, *pairs):
    return Relation.from_pairs(n, pairs)


# -- independent oracles -------------------------------------------------


def compose_oracle(a: Relation, b: Relation) -> Relation:
    """(i,j) in a;b iff some k has (i,k) in a and (k,j) in b."""
    n = a.n
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if any((i, k) in a and (k, j) in b for k in range(n))
    ]
    return Relation.from_pairs(n, pairs)


def relsum_oracle(a: Relation, b: Relation) -> Relation:
    """(i,j) in the relative sum iff every k has (i,k) in a or (k,j) in b."""
    n = a.n
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if all((i, k) in a or (k, j) in b for k in range(n))
    ]
    return Relation.from_pairs(n, pairs)


# -- construction and views ----------------------------------------------


def test_from_pairs_and_views():
    a = rel(2, (0, 1), (1, 0))
    assert (0, 1) in a and (1, 0) in a and (0, 0) not in a
    assert (5, 5) not in a
    assert len(a) == 2
    assert a.sorted_pairs() == [(0, 1), (1, 0)]
    assert list(a) == [(0, 1), (1, 0)]
    assert "Relation(2" in repr(a)


def test_mask_is_canonical_index():
    # pair (i,j) sits at bit i*n+j
    assert rel(2, (0, 1)).mask == 2
    assert rel(2, (1, 0)).mask == 4
    assert rel(3, (1, 0)).mask == 1 << 3


def test_construction_errors():
    with pytest.raises(ValueError):
        Relation(0, 0)
    with pytest.raises(ValueError):
        Relation(2, 1 << 4)
    with pytest.raises(ValueError):
        Relation.from_pairs(2, [(0, 2)])
    with pytest.raises(ValueError):
        bottom(-1)


def test_universe_mismatch_is_an_error():
    a, b = bottom(2), bottom(3)
    for op in (Relation.union, Relation.intersect, Relation.includes,
               Relation.equals, Relation.compose, Relation.relative_sum):
        with pytest.raises(UniverseMismatchError):
            op(a, b)


# -- constants -------------------------------------------------------------


def test_constants():
    assert bottom(2).sorted_pairs() == []
    assert bottom(1).sorted_pairs() == []
    assert top(2).sorted_pairs() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert identity(3).sorted_pairs() == [(0, 0), (1, 1), (2, 2)]
    assert antidiagonal(2).sorted_pairs() == [(0, 1), (1, 0)]
    # a one-element universe has no off-diagonal pairs
    assert antidiagonal(1) == bottom(1)
    assert identity(1) == top(1)


def test_constant_algebra():
    for n in (1, 2, 3):
        assert identity(n).union(antidiagonal(n)) == top(n)
        assert identity(n).intersect(antidiagonal(n)) == bottom(n)
        assert top(n).complement() == bottom(n)


# -- boolean operations, exhaustive at n=2 ---------------------------------


def test_boolean_examples():
    assert rel(2, (0, 0)).union(rel(2, (1, 1))) == rel(2, (0, 0), (1, 1))
    assert rel(2, (0, 0), (0, 1)).intersect(rel(2, (0, 1), (1, 0))) == rel(2, (0, 1))
    assert rel(2, (0, 0)).complement() == rel(2, (0, 1), (1, 0), (1, 1))


def test_boolean_laws_exhaustive_n2():
    t = top(2)
    for a in enumerate_relations(2):
        assert bottom(2).union(a) == a
        assert t.intersect(a) == a
        assert a.union(a) == a
        assert a.intersect(a) == a
        assert a.union(a.complement()) == t
        assert a.complement().complement() == a
        assert a.intersect(bottom(2)) == bottom(2)
        assert a.includes(t)
        assert bottom(2).includes(a)
        assert a.equals(a)
        assert (a | a.complement()) == t and (a & a) == a and ~~a == a


def test_includes_and_equals():
    assert not rel(2, (0, 0), (1, 0)).includes(rel(2, (0, 0)))
    assert rel(2, (0, 0)).includes(rel(2, (0, 0), (1, 0)))
    assert rel(2, (0, 0)) <= rel(2, (0, 0), (1, 0))
    assert not rel(2, (0, 1)).equals(rel(2, (1, 0)))


# -- relative operations ----------------------------------------------------


def test_compose_example():
    # hand-computed by the exists-k rule: only k=1 links 0 to 0
    assert rel(2, (0, 1)).compose(rel(2, (1, 0))) == rel(2, (0, 0))


def test_relative_sum_example():
    # hand-computed by the for-all-k rule: only (0,1) is covered at every k
    assert rel(2, (0, 0)).relative_sum(rel(2, (1, 1))) == rel(2, (0, 1))


def test_compose_identity_and_top():
    for n in (1, 2, 3):
        for a in enumerate_relations(n) if n < 3 else [rel(3, (0, 1), (2, 2))]:
            assert a.compose(identity(a.n)) == a
            assert identity(a.n).compose(a) == a
    assert top(2).relative_sum(rel(2, (0, 1))) == top(2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coefficient_oracles_exhaustive(n):
    """compose and relative_sum agree with the independent entry-wise
    oracles, and with each other through De Morgan duality."""
    pool = list(enumerate_relations(n))
    if n == 3:
        # full 512x512 sweep lives in the acceptance suite; spot-check a
        # deterministic slice here to keep this file quick
        pool_a = pool[::7]
        pool_b = pool[::11]
    else:
        pool_a = pool_b = pool
    for a in pool_a:
        for b in pool_b:
            c = a.compose(b)
            assert c == compose_oracle(a, b)
            s = a.relative_sum(b)
            assert s == relsum_oracle(a, b)
            assert s == a.complement().compose(b.complement()).complement()


def test_compose_associativity_exhaustive_n2():
    pool = list(enumerate_relations(2))
    for a in pool:
        for b in pool:
            for c in pool:
                assert a.compose(b).compose(c) == a.compose(b.compose(c))


# -- enumeration -------------------------------------------------------------


def test_enumeration_order_and_count():
    first = list(enumerate_relations(1))
    assert first == [bottom(1), rel(1, (0, 0))]
    two = list(enumerate_relations(2))
    assert len(two) == 16
    assert [r.mask for r in two] == list(range(16))
    assert next(iter(enumerate_relations(3))) == bottom(3)


# -- property tests -----------------------------------------------------------

sizes = st.integers(min_value=1, max_value=3)


@st.composite
def relation_pair(draw):
    n = draw(sizes)
    bits = n * n
    a = Relation(n, draw(st.integers(0, (1 << bits) - 1)))
    b = Relation(n, draw(st.integers(0, (1 << bits) - 1)))
    return a, b


@settings(max_examples=200, deadline=None)
@given(relation_pair())
def test_de_morgan_duality_property(pair):
    a, b = pair
    assert a.relative_sum(b) == (~a).compose(~b).complement()


@settings(max_examples=200, deadline=None)
@given(relation_pair())
def test_monotonicity_property(pair):
    a, b = pair
    u = a.union(b)
    assert a.compose(b).includes(a.compose(u.union(b)))
    assert a.includes(u) and b.includes(u)
