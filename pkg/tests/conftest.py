import random

import pytest
from hypothesis import HealthCheck, settings

from cu_lab import catalog

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ALL_IDS = catalog.ENTRY_IDS + ("s2", "s3")
INFINITE_IDS = tuple(e for e in catalog.ENTRY_IDS if e != "s1")


@pytest.fixture
def rng():
    return random.Random(20240601)


def P(S, text):
    return S.parse(text)


# one line per acceptance criterion, repeated at the end of the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
