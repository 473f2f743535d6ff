import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cu_lab import catalog
from cu_lab.errors import EntryMismatch
from cu_lab.extrat import INF, ONE, ZERO, ratio
from cu_lab.functionals import (PROBE_GRID, all_functionals_infinite, axiom_suite,
                                beta_functional_agreement, beta_zero_witness, eval_functional,
                                functionals)

from conftest import P


def families(eid):
    return {f.family for f in functionals(catalog.get(eid))}


def test_registered_families():
    for eid in ("s1", "s3", "interval01", "open12", "seqcube"):
        assert families(eid) == {"Zero", "LambdaInf"}
    for eid, coord in (("product_ray", "second"), ("alg_product", "second"), ("uhf", "value")):
        fs = functionals(catalog.get(eid))
        scales = [f for f in fs if f.family == "Scale"]
        assert [f.c for f in scales] == list(PROBE_GRID)
        assert {f.coordinate for f in scales} == {coord}


def test_interval_has_no_finite_functionals():
    # oracle: n*q = inf as soon as n*q > 1, so a finite functional would vanish
    I = catalog.get("interval01")
    for x in I.landmarks() + [P(I, "1/7"), P(I, "2/5")]:
        if x != I.zero and x != I.top:
            q = I.unwrap(x).fraction
            n = int(1 / q) + 1
            assert I.multiple(n, x) == I.top


def _scale(S, c):
    return next(f for f in functionals(S) if f.family == "Scale" and f.c == c)


def test_eval_examples():
    U = catalog.get("uhf")
    lam = next(f for f in functionals(U) if f.family == "LambdaInf")
    zero = next(f for f in functionals(U) if f.family == "Zero")
    assert eval_functional(lam, U, P(U, "c:1/2")) == INF
    assert eval_functional(lam, U, U.zero) == ZERO
    assert eval_functional(zero, U, P(U, "s:inf")) == ZERO
    assert eval_functional(_scale(U, ONE), U, P(U, "c:3/4")) == ratio(3, 4)
    assert eval_functional(_scale(U, ONE), U, P(U, "s:1")) == ONE
    R = catalog.get("product_ray")
    assert eval_functional(_scale(R, ONE), R, P(R, "(1/2, 3)")) == ratio(3, 1)
    with pytest.raises(EntryMismatch):
        eval_functional(lam, R, P(R, "(1/2, 3)"))


def test_all_functionals_infinite_examples():
    R = catalog.get("product_ray")
    assert all_functionals_infinite(R, P(R, "(3/4, inf)"))
    assert not all_functionals_infinite(R, P(R, "(3/4, 2)"))
    U = catalog.get("uhf")
    assert not all_functionals_infinite(U, P(U, "s:2"))
    I = catalog.get("interval01")
    assert all_functionals_infinite(I, P(I, "1/2"))


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_axiom_suite_small(eid):
    S = catalog.get(eid)
    rep = axiom_suite(S, 60, random.Random(4))
    assert rep.ok, rep.violations[:3]
    assert rep.checked > 0


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
@settings(max_examples=30)
@given(seed=st.integers(0, 10 ** 9))
def test_beta_functional_agreement(eid, seed):
    S = catalog.get(eid)
    y = S.sample_nonzero(random.Random(seed), "mixed")
    assert beta_functional_agreement(S, y)


def test_beta_zero_witness_examples():
    R = catalog.get("product_ray")
    w = beta_zero_witness(R, P(R, "(3/4, inf)"))
    assert w is not None and w != R.zero
    U = catalog.get("uhf")
    assert beta_zero_witness(U, P(U, "s:2")) is None


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_infinite_multiples(eid):
    S = catalog.get(eid)
    rng = random.Random(8)
    pool = [S.sample(rng, p) for p in ("small", "mixed", "near_top") for _ in range(40)]
    for x in pool:
        if x == S.zero or not S.way_below(x, S.top) or not all_functionals_infinite(S, x):
            continue
        for f in functionals(S):
            if f.family == "Zero" or (f.family == "Scale" and f.c.is_zero):
                continue
            assert all(eval_functional(f, S, z) == INF for z in pool if z != S.zero)
        assert all(S.pi_multiple_exact(z) is not None for z in pool if z != S.zero)


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_comparison_via_functionals(eid):
    S = catalog.get(eid)
    rng = random.Random(9)
    finite = [f for f in functionals(S) if f.family == "Scale" and not f.c.is_zero and not f.c.is_inf]
    tested = 0
    for _ in range(150):
        x, y = S.sample(rng, "mixed"), S.sample(rng, "mixed")
        if not finite or x == S.zero:
            continue
        if all(eval_functional(f, S, x) < eval_functional(f, S, y) for f in finite):
            xp = S.rapid_term(x, 1)
            if S.way_below(xp, x):
                tested += 1
                assert S.s_below(xp, y, 4096) is not None, (S.format(xp), S.format(y))
    if finite:
        assert tested > 10
