import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# Property suites run 1000 derandomized trials; MVWEYL_TRIALS lowers it for quick local runs.
TRIALS = int(os.environ.get("MVWEYL_TRIALS", "1000"))

settings.register_profile(
    "fixed",
    max_examples=TRIALS,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    print_blob=True,
)
settings.load_profile("fixed")


def pytest_configure(config):
    config.addinivalue_line("markers", "property: hypothesis property suite (1000 fixed-seed trials)")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.fixture(scope="session")
def decompositions():
    """Orbital decompositions for every partition of d <= 4, computed once."""
    from mvweyl import orbital, symgrp

    return {lam: orbital.decompose(lam) for d in range(1, 5) for lam in symgrp.partitions(d)}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
