import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from dqspectra.generate import random_dq, random_hermitian

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def hermitian(seed, n):
    return random_hermitian(np.random.default_rng(seed), n)


def general(seed, m, n):
    return random_dq(np.random.default_rng(seed), m, n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "REPORT_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
