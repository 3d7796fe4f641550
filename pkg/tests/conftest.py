import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from bigjacobi import Params

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def base():
    """alpha = beta = 1, c = 1/2: the point most hand-checked values use."""
    return Params(1, 1, Fraction(1, 2))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
