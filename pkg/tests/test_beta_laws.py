import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cu_lab import catalog
from cu_lab.suites import beta_convergence, beta_law_suite


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS + ("s2", "s3"))
@settings(max_examples=20)
@given(seed=st.integers(0, 2 ** 40))
def test_beta_laws_hold(eid, seed):
    rep = beta_law_suite(catalog.get(eid), 15, random.Random(seed))
    assert rep.ok, rep.violations[:3]


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_every_law_is_exercised(eid):
    rep = beta_law_suite(catalog.get(eid), 300, random.Random(eid))
    laws = {"antitone_in_y", "monotone_in_x", "subadditive", "harmonic", "one_over_k", "bridge",
            "zero_iff_pi_multiple"}
    assert laws <= {k for k, v in rep.checked.items() if v > 10}


@pytest.mark.parametrize("eid", catalog.ENTRY_IDS)
def test_convergence_rows(eid):
    for row in beta_convergence(catalog.get(eid), 5, random.Random(1)):
        assert row.monotone and row.gap is not None and row.gap >= 0
