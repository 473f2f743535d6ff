import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cu_lab import catalog
from cu_lab import series as ser
from cu_lab.core import PROFILES
from cu_lab.errors import EntryMismatch, UsageError
from cu_lab.extrat import INF, ExtRat

from conftest import ALL_IDS, INFINITE_IDS, P

seeds = st.integers(min_value=0, max_value=2 ** 32)


def draw(S, seed, n):
    r = random.Random(seed)
    return [S.sample(r, PROFILES[i % 3]) for i in range(n)]


# ---- worked examples -----------------------------------------------------------


def test_add_examples():
    I = catalog.get("interval01")
    assert I.add(P(I, "3/4"), P(I, "1/2")) == I.top
    R = catalog.get("product_ray")
    assert R.add(P(R, "(1/2, 1)"), P(R, "(3/4, 2)")) == P(R, "(inf, 3)")
    for eid in ALL_IDS:
        S = catalog.get(eid)
        for x in S.landmarks():
            assert S.add(x, S.zero) == x


def test_mixed_entries_rejected():
    I, U = catalog.get("interval01"), catalog.get("uhf")
    with pytest.raises(EntryMismatch):
        I.add(P(I, "1/2"), P(U, "c:1/2"))
    with pytest.raises(UsageError):
        I.leq(P(U, "s:1"), P(I, "1"))


def test_leq_examples():
    S1 = catalog.get("s1")
    assert S1.leq(P(S1, "1"), P(S1, "inf"))
    Q = catalog.get("seqcube")
    assert not Q.leq(P(Q, "[1,0;0]"), P(Q, "[0,1;0]"))
    U = catalog.get("uhf")
    assert not U.leq(P(U, "c:1/2"), P(U, "s:1/2"))
    assert U.leq(P(U, "s:1/2"), P(U, "c:1/2"))
    assert U.leq(P(U, "c:1/2"), P(U, "s:3/4"))


def test_way_below_examples():
    I = catalog.get("interval01")
    assert not I.way_below(P(I, "1/2"), P(I, "1/2"))
    assert I.way_below(P(I, "1/4"), P(I, "1/2"))
    assert I.way_below(I.top, I.top)
    R = catalog.get("product_ray")
    assert R.way_below(P(R, "(1/2, 1)"), P(R, "(3/4, 2)"))
    assert R.way_below(P(R, "(inf, 1)"), P(R, "(inf, 2)"))
    assert not R.way_below(P(R, "(inf, 2)"), P(R, "(inf, 2)"))
    assert R.leq(P(R, "(inf, 5)"), R.top) and R.top == P(R, "(inf, inf)")


def test_s_below_examples():
    S1 = catalog.get("s1")
    assert S1.s_below(P(S1, "1"), P(S1, "1"), 8) == 2
    I = catalog.get("interval01")
    assert I.s_below(P(I, "3/4"), P(I, "1/16"), 32) == 17
    U = catalog.get("uhf")
    assert U.s_below(P(U, "s:1"), P(U, "s:1"), 64) is None


def test_multiple_examples():
    Q = catalog.get("seqcube")
    assert Q.multiple(2, P(Q, "[1;0]")) == Q.top
    S3 = catalog.get("s3")
    assert S3.multiple(4, P(S3, "1")) == S3.top
    assert S3.multiple(3, P(S3, "1")) == P(S3, "3")
    for eid in ALL_IDS:
        S = catalog.get(eid)
        for x in S.landmarks():
            assert S.multiple(1, x) == x
            assert S.multiple(0, x) == S.zero


def test_series_sum_examples():
    I = catalog.get("interval01")
    geo = ser.Geometric(P(I, "1/4"), Fraction(1, 2))
    assert ser.series_sum(I, geo) == P(I, "1/2")
    assert ser.series_sum(I, ser.Constant(P(I, "1/4"))) == I.top
    Q = catalog.get("seqcube")
    ones = ser.series_sum(Q, ser.IndicatorStream(1))
    assert ones == P(Q, "[;1]") and ones != Q.top


def test_properly_infinite_examples():
    for eid in ALL_IDS:
        S = catalog.get(eid)
        assert S.is_properly_infinite(S.top)
    S1 = catalog.get("s1")
    assert not S1.is_properly_infinite(P(S1, "1"))
    U = catalog.get("uhf")
    assert not U.is_properly_infinite(P(U, "s:2"))


def test_pi_multiple_examples():
    I = catalog.get("interval01")
    assert I.has_properly_infinite_multiple(P(I, "3/4"), 8) == 2
    U = catalog.get("uhf")
    assert U.has_properly_infinite_multiple(P(U, "s:1"), 64) is None
    S1 = catalog.get("s1")
    assert S1.has_properly_infinite_multiple(P(S1, "1"), 8) == 2


def test_rapid_term_examples():
    I = catalog.get("interval01")
    for n in range(6):
        assert I.rapid_term(P(I, "1"), n) == I.wrap(ExtRat(1 - Fraction(1, 2 ** (n + 1))))
        assert I.rapid_term(I.top, n) == I.top
    S1 = catalog.get("s1")
    assert all(S1.rapid_term(P(S1, "1"), n) == P(S1, "1") for n in range(5))


# ---- sampled invariants --------------------------------------------------------


@pytest.mark.parametrize("eid", ALL_IDS)
@given(seed=seeds)
def test_monoid_and_order_laws(eid, seed):
    S = catalog.get(eid)
    x, y, z = draw(S, seed, 3)
    assert S.add(x, y) == S.add(y, x)
    assert S.add(S.add(x, y), z) == S.add(x, S.add(y, z))
    assert S.leq(S.zero, x) and S.leq(x, S.top)
    assert S.leq(x, S.add(x, z))
    if S.leq(x, y):
        assert S.leq(S.add(x, z), S.add(y, z))
        if S.leq(y, x):
            assert x == y
        if S.leq(y, z):
            assert S.leq(x, z)


@pytest.mark.parametrize("eid", ALL_IDS)
@given(seed=seeds)
def test_way_below_laws(eid, seed):
    S = catalog.get(eid)
    a, b, c, d = draw(S, seed, 4)
    if S.way_below(a, b):
        assert S.leq(a, b)
        # x' <= x << y <= y'
        lo = S.rapid_term(a, 0)
        assert S.way_below(lo, S.add(b, c))
        # O3
        if S.way_below(c, d):
            assert S.way_below(S.add(a, c), S.add(b, d))


@pytest.mark.parametrize("eid", ALL_IDS)
@given(seed=seeds)
def test_way_below_against_canonical_chain(eid, seed):
    S = catalog.get(eid)
    x, y = draw(S, seed, 2)
    chain = [S.rapid_term(y, n) for n in range(33)]
    assert all(S.way_below(a, b) for a, b in zip(chain, chain[1:]))
    assert all(S.leq(t, y) for t in chain)
    if S.way_below(x, y):
        assert any(S.leq(x, t) for t in chain)
    elif not S.is_compact(y):
        assert not any(S.leq(x, t) for t in chain)


@pytest.mark.parametrize("eid", INFINITE_IDS)
@given(seed=seeds)
def test_parse_format_roundtrip_sampled(eid, seed):
    S = catalog.get(eid)
    for x in draw(S, seed, 3):
        assert S.parse(S.format(x)) == x


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sn_laws_exhaustive(n):
    S = catalog.get(f"s{n}")
    els = S.elements()
    assert [S.format(e) for e in els] == [str(i) for i in range(n + 1)] + ["inf"]
    for x, y, z in product(els, repeat=3):
        assert S.add(S.add(x, y), z) == S.add(x, S.add(y, z))
        assert S.add(x, y) == S.add(y, x)
        if S.leq(x, y):
            assert S.leq(S.add(x, z), S.add(y, z))
        if S.way_below(x, y) and S.way_below(z, z):
            assert S.way_below(S.add(x, z), S.add(y, z))
    for x, y in product(els, repeat=2):
        k = S.s_below(x, y, 16)
        if k is not None:
            from cu_lab.comparison import beta_bounded
            assert beta_bounded(S, x, y, k + 1).upper < 1


def test_sn_saturates_exactly_above_n():
    S = catalog.get("s3")
    assert S.add(P(S, "1"), P(S, "2")) == P(S, "3")
    assert S.add(P(S, "2"), P(S, "2")) == S.top
