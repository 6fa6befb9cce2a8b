from __future__ import annotations

import threading
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catalan_paths import catalan_core as cc
from catalan_paths.errors import DomainError

# C_0..C_15, OEIS A000108
FIRST_CATALANS = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845]


def test_small_values():
    assert [cc.catalan(n) for n in range(16)] == FIRST_CATALANS
    assert cc.catalan(0) == 1
    assert (cc.catalan(1), cc.catalan(2), cc.catalan(3)) == (1, 2, 5)
    assert cc.catalan(10) == 16796


def test_negative_index_is_an_error():
    with pytest.raises(DomainError):
        cc.catalan(-1)
    with pytest.raises(DomainError):
        cc.catalan_closed(-3)


def test_table_routes_agree_to_200():
    for n in range(201):
        assert cc.catalan(n) == cc.catalan_closed(n)
        if n:
            assert cc.segner_sum(n) == cc.catalan(n)


def test_table_invariants():
    table = cc.CatalanTable()
    table.ensure(60)
    v = table.values
    assert v[0] == 1 and table.max_index == 60
    for n in range(60):
        assert v[n + 1] * (n + 2) == v[n] * (4 * n + 2)


def test_table_only_grows():
    table = cc.CatalanTable()
    table.ensure(30)
    table.ensure(10)
    assert table.max_index == 30


def test_concurrent_growth_is_consistent():
    table = cc.CatalanTable()
    targets = [50, 120, 80, 200, 10, 150]
    threads = [threading.Thread(target=table.ensure, args=(t,)) for t in targets]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert table.max_index == 200
    assert table.values == [cc.catalan_closed(n) for n in range(201)]


def test_segner_examples():
    assert cc.segner_sum(3) == 5
    assert cc.segner_sum(1) == 1
    assert cc.segner_sum(8) == 1430
    with pytest.raises(DomainError):
        cc.segner_sum(0)


def test_r1_r2_examples():
    assert cc.identity_r1(0) == (1, 1)
    assert cc.identity_r1(2) == (15, 15)
    lhs, rhs = cc.identity_r1(6)
    assert lhs == rhs
    assert cc.identity_r2(0) == (1, 1)
    assert cc.identity_r2(1) == (3, 3)
    lhs, rhs = cc.identity_r2(7)
    assert lhs == rhs


def test_r1_r2_to_100():
    for n in range(101):
        a, b = cc.identity_r1(n)
        assert a == b
        a, b = cc.identity_r2(n)
        assert a == b


def test_incomplete_segner_examples():
    for n in range(10):
        assert cc.incomplete_segner(0, n) == cc.catalan(n)
        assert cc.incomplete_segner(n, n) == cc.catalan(n + 1)
    assert cc.incomplete_segner(2, 5) == 42 + 14 + 2 * 5
    with pytest.raises(DomainError):
        cc.incomplete_segner(6, 5)


def test_incomplete_segner_to_50():
    for n in range(51):
        for p in range(n + 1):
            v = cc.incomplete_segner(p, n)
            assert isinstance(v, Fraction) and v.denominator == 1
            assert v == cc.incomplete_segner_direct(p, n)


def test_incomplete_rautu_examples():
    assert cc.incomplete_rautu(1, 3) == 5
    assert cc.incomplete_rautu(2, 4) == 2 * 14 + 5 == 33
    assert cc.incomplete_rautu(5, 9) == cc.incomplete_rautu_direct(5, 9)
    assert cc.incomplete_rautu(0, 4) == 0
    with pytest.raises(DomainError):
        cc.incomplete_rautu(5, 4)


def test_incomplete_rautu_to_50():
    for n in range(1, 51):
        for p in range(1, n + 1):
            assert cc.incomplete_rautu(p, n) == cc.incomplete_rautu_direct(p, n)


@given(st.integers(0, 400), st.integers(0, 400))
def test_catalan_ratio_matches_table(n, k):
    k = min(k, n)
    assert cc.catalan_ratio(n, k) == Fraction(cc.catalan(n - k), cc.catalan(n))


def test_catalan_ratio_product_branch():
    n = 5000
    for k in (1, 2, 7):
        assert cc.catalan_ratio(n, k) == Fraction(cc.catalan_closed(n - k), cc.catalan_closed(n))


@given(st.integers(0, 120).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_incomplete_identities_property(pn):
    n, p = pn
    assert cc.incomplete_segner(p, n) == cc.incomplete_segner_direct(p, n)
    assert cc.incomplete_rautu(p, n) == cc.incomplete_rautu_direct(p, n)


def test_use_table_swaps_and_restores():
    bad = cc.CatalanTable.corrupted(4, delta=1)
    with cc.use_table(bad):
        assert cc.catalan(4) == 15
        assert cc.catalan_closed(4) == 14
    assert cc.catalan(4) == 14


def test_corrupted_table_propagates():
    bad = cc.CatalanTable.corrupted(3, delta=1)
    bad.ensure(6)
    assert bad.values[3] == 6
    assert bad.values[4] != 14
