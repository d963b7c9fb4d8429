import os

import pytest
from hypothesis import HealthCheck, settings

from grobalg import load_fixture
from grobalg.schemefile import FIXTURES

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def schemes():
    """Every bundled fixture as a QuadraticScheme, keyed by name."""
    return {name: load_fixture(name).scheme() for name in FIXTURES}


@pytest.fixture(scope="session")
def ex51(schemes):
    return schemes["example51"]


@pytest.fixture(scope="session")
def ex52(schemes):
    return schemes["example52"]


@pytest.fixture(scope="session")
def ex53(schemes):
    return schemes["example53"]


@pytest.fixture(scope="session")
def ex54(schemes):
    return schemes["example54"]


def renamed_vars(scheme, letters):
    """Map the canonical variables to short names, in canonical order."""
    names = letters.split() if isinstance(letters, str) else list(letters)
    assert len(names) == scheme.D
    return dict(zip(scheme.variables, names))


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
