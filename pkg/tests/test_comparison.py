import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cu_lab import catalog
from cu_lab.comparison import (BOUND_ONLY, EXACT_ATTAINED, EXACT_LIMIT, UNDEFINED, F0Violation,
                               MonotoneReport, beta, beta_bounded, beta_exact, f0_eval,
                               f0_monotone_check, state_pair)
from cu_lab.errors import BetaUndefined
from cu_lab.extrat import INF, ONE, ZERO, ExtRat, ratio

from conftest import P


def test_bounded_examples():
    S1 = catalog.get("s1")
    r = beta_bounded(S1, P(S1, "1"), P(S1, "1"), 8)
    assert (r.upper, r.witness, r.status) == (ratio(1, 4), (8, 2), BOUND_ONLY)
    I = catalog.get("interval01")
    r = beta_bounded(I, P(I, "3/4"), P(I, "1/2"), 64)
    assert (r.upper, r.witness) == (ratio(3, 64), (64, 3))
    U = catalog.get("uhf")
    r = beta(U, P(U, "s:1/2"), P(U, "s:1"), 64)
    assert (r.upper, r.witness, r.status) == (ratio(1, 2), (2, 1), EXACT_ATTAINED)


def test_exact_examples():
    S1 = catalog.get("s1")
    assert beta_exact(S1, P(S1, "1"), P(S1, "1")) == ZERO
    R = catalog.get("product_ray")
    assert beta_exact(R, P(R, "(1/2, 1)"), P(R, "(3/4, inf)")) == ZERO
    U = catalog.get("uhf")
    assert beta_exact(U, P(U, "s:1/2"), P(U, "s:1")) == ratio(1, 2)
    assert beta_exact(U, P(U, "c:3/4"), P(U, "s:1/2")) == ratio(3, 2)
    for eid in catalog.ENTRY_IDS:
        S = catalog.get(eid)
        for y in S.landmarks():
            if y != S.zero:
                assert beta_exact(S, S.zero, y) == ZERO


def test_undefined_outside_ideal():
    U = catalog.get("uhf")
    with pytest.raises(BetaUndefined):
        beta_exact(U, P(U, "s:1"), U.zero)
    R = catalog.get("product_ray")
    y = P(R, "(1/2, 1)")
    with pytest.raises(BetaUndefined):
        beta_exact(R, R.top, y)
    assert beta(R, R.top, y, 16).status == UNDEFINED


def test_cli_style_limit_status():
    I = catalog.get("interval01")
    r = beta(I, P(I, "3/4"), P(I, "1/2"), 64)
    assert r.status == EXACT_LIMIT and r.exact == ZERO


def _pairs(S, seed, n, yprof="near_top"):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        x, y = S.sample(rng, "mixed"), S.sample(rng, yprof)
        try:
            out.append((x, y, beta_exact(S, x, y)))
        except BetaUndefined:
            continue
    return out


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
@settings(max_examples=25)
@given(seed=st.integers(0, 10 ** 9))
def test_bounded_search_invariants(eid, seed):
    S = catalog.get(eid)
    for x, y, exact in _pairs(S, seed, 4, "mixed"):
        prev = None
        for K in (8, 32, 128):
            r = beta_bounded(S, x, y, K)
            if r.upper is None:
                continue
            k, l = r.witness
            assert S.leq(S.multiple(k, x), S.multiple(l, y))
            assert r.upper == ratio(l, k)
            assert exact <= r.upper
            if prev is not None:
                assert r.upper <= prev
            prev = r.upper


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_bounded_matches_brute_force(eid):
    S = catalog.get(eid)
    K = 12
    for x, y, _ in _pairs(S, 99, 10, "mixed"):
        best = None
        for k in range(1, K + 1):
            for l in range(0, K + 1):
                if S.leq(S.multiple(k, x), S.multiple(l, y)):
                    q = Fraction(l, k)
                    if best is None or q < best[0]:
                        best = (q, (k, l))
                    break
        r = beta_bounded(S, x, y, K)
        if best is None:
            assert r.upper is None
        else:
            assert r.upper == ExtRat(best[0]) and r.witness == best[1]


# ---- f0 -----------------------------------------------------------------------


def test_f0_examples():
    U = catalog.get("uhf")
    sp = state_pair(U, P(U, "s:1/2"), P(U, "s:1"))
    assert f0_eval(sp, 2, 0) == ONE
    assert f0_eval(sp, 0, 1) == ONE
    assert f0_eval(sp, 0, 0) == ZERO
    assert f0_eval(sp, 3, 2) == ratio(7, 2)


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20), st.integers(0, 20))
def test_f0_additive(k1, l1, k2, l2):
    U = catalog.get("uhf")
    sp = state_pair(U, P(U, "c:3/4"), P(U, "s:2"))
    assert f0_eval(sp, k1 + k2, l1 + l2) == f0_eval(sp, k1, l1) + f0_eval(sp, k2, l2)


def test_f0_monotone_uhf():
    U = catalog.get("uhf")
    sp = state_pair(U, P(U, "s:1/2"), P(U, "s:1"))
    rep = f0_monotone_check(U, sp, 1000, random.Random(1))
    assert rep.ok and rep.comparable > 0
    assert rep.buckets["ii"] > 0 and rep.buckets["iii"] > 0


def test_f0_degenerate_x_zero():
    U = catalog.get("uhf")
    sp = state_pair(U, U.zero, P(U, "s:1"))
    assert sp.beta == ZERO
    assert f0_monotone_check(U, sp, 300, random.Random(2)).ok


def test_f0_on_s1_is_not_monotone():
    # with beta(1, 1) = 0 the map k x + l y -> l does not respect 2*1 = 3*1 = inf
    S1 = catalog.get("s1")
    sp = state_pair(S1, P(S1, "1"), P(S1, "1"))
    rep = f0_monotone_check(S1, sp, 1000, random.Random(3))
    assert not rep.ok
    with pytest.raises(F0Violation):
        rep.raise_if_violated()


def test_monotone_report_defaults():
    rep = MonotoneReport()
    assert rep.ok and set(rep.buckets) == {"i", "ii", "iii", "iv"}
    rep.raise_if_violated()
