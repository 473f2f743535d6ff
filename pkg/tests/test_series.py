import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cu_lab import catalog
from cu_lab import series as ser
from cu_lab.errors import CapabilityError, UsageError

from conftest import P

GEO_IDS = ("interval01", "product_ray", "uhf", "alg_product")


def specs_for(S, rng):
    els = [S.sample(rng, p) for p in ("small", "mixed")]
    out = [ser.Constant(e) for e in els] + [ser.FiniteThenZero(tuple(els))]
    if "geometric" in S.series_kinds:
        out += [ser.Geometric(e, Fraction(1, rng.choice([2, 3, 4]))) for e in els if e != S.zero]
    if "indicator" in S.series_kinds:
        out += [ser.IndicatorStream(rng.randint(1, 4))]
    out += [ser.Scaled(2, out[0]), ser.Tail(3, out[-1])]
    return out


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
@settings(max_examples=40)
@given(seed=st.integers(0, 10 ** 9))
def test_partial_sums_chain_and_supremum(eid, seed):
    S = catalog.get(eid)
    rng = random.Random(seed)
    for spec in specs_for(S, rng):
        total = ser.series_sum(S, spec)
        parts = [ser.partial_sum(S, spec, N) for N in range(0, 12)]
        assert all(S.leq(a, b) for a, b in zip(parts, parts[1:]))
        assert all(S.leq(p, total) for p in parts)
        # least upper bound: the canonical approximants of the sum are eventually covered
        far = ser.partial_sum(S, spec, 64)
        for n in (0, 1, 2):
            t = S.rapid_term(total, n)
            assert S.leq(t, far) or S.leq(t, ser.partial_sum(S, spec, 512)), (S.format(t), spec)


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
@given(seed=st.integers(0, 10 ** 9), m=st.integers(1, 4))
def test_scaled_partials_are_multiples(eid, seed, m):
    S = catalog.get(eid)
    spec = specs_for(S, random.Random(seed))[0]
    for N in (1, 3, 7):
        assert ser.partial_sum(S, ser.Scaled(m, spec), N) == S.multiple(m, ser.partial_sum(S, spec, N))
    assert ser.series_sum(S, ser.Scaled(m, spec)) == S.multiple(m, ser.series_sum(S, spec))


def test_worked_sums():
    I = catalog.get("interval01")
    assert ser.series_sum(I, ser.Geometric(P(I, "1/4"), Fraction(1, 2))) == P(I, "1/2")
    assert ser.partial_sum(I, ser.Geometric(P(I, "1/4"), Fraction(1, 2)), 2) == P(I, "3/8")
    assert ser.series_sum(I, ser.Constant(P(I, "1/4"))) == I.top
    assert ser.series_sum(I, ser.Tail(2, ser.Geometric(P(I, "1/4"), Fraction(1, 2)))) == P(I, "1/4")
    Q = catalog.get("seqcube")
    assert ser.series_sum(Q, ser.IndicatorStream(1)) == P(Q, "[;1]")
    assert ser.series_sum(Q, ser.IndicatorStream(3)) == P(Q, "[0,0;1]")
    assert ser.term(Q, ser.IndicatorStream(1), 2) == P(Q, "[0,1;0]")


def test_tail_predicates():
    Q = catalog.get("seqcube")
    assert ser.tails_scaled_reach_top(Q, ser.IndicatorStream(1), 2)
    assert not ser.tails_scaled_reach_top(Q, ser.IndicatorStream(1), 1)
    I = catalog.get("interval01")
    geo = ser.Geometric(P(I, "1/4"), Fraction(1, 2))
    assert not ser.tails_scaled_reach_top(I, geo, 1000)
    assert ser.tails_scaled_reach_top(I, ser.Constant(P(I, "1/8")), 1)
    assert ser.terms_way_below_top(I, geo)
    assert ser.s_below_all_terms(I, P(I, "1"), geo) is True


def test_capability_errors():
    S1 = catalog.get("s1")
    with pytest.raises(CapabilityError):
        ser.series_sum(S1, ser.IndicatorStream(1))
    Q = catalog.get("seqcube")
    with pytest.raises(CapabilityError):
        ser.series_sum(Q, ser.Geometric(P(Q, "[1;0]"), Fraction(1, 2)))
    with pytest.raises(UsageError):
        ser.Geometric(P(catalog.get("interval01"), "1/4"), Fraction(3, 2))


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_json_roundtrip(eid):
    S = catalog.get(eid)
    for spec in specs_for(S, random.Random(1)):
        assert ser.from_json(S, ser.to_json(S, spec)) == spec
    with pytest.raises(UsageError):
        ser.from_json(S, {"kind": "spiral"})
    with pytest.raises(UsageError):
        ser.from_json(S, {"kind": "constant"})
