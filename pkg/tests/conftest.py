import pytest

from frobweight.config import DEFAULT_CAPS, DEFAULT_SEED
from frobweight.scenarios import verify_all


@pytest.fixture(scope="session")
def caps():
    return DEFAULT_CAPS


@pytest.fixture(scope="session")
def verify_report():
    """Every asserting scenario, run once per test session."""
    return verify_all(caps=DEFAULT_CAPS, seed=DEFAULT_SEED, jobs=4)
