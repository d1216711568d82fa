from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))  # test helpers (randstruct)

from paritykit import fixtures
from paritykit.generators import cube, globe, oriental

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> fixtures.Fixture:
    return fixtures.load_path(FIXTURE_DIR / f"{name}.json")


@pytest.fixture(scope="session")
def oriental2():
    return oriental(2)


@pytest.fixture(scope="session")
def oriental3():
    return oriental(3)


@pytest.fixture(scope="session")
def globe1():
    return globe(1)


@pytest.fixture(scope="session")
def globe2():
    return globe(2)


@pytest.fixture(scope="session")
def cube2():
    return cube(2)


@pytest.fixture(scope="session")
def circle():
    return load_fixture("circle").value


@pytest.fixture(scope="session")
def weak_not_strong():
    return load_fixture("weak_not_strong").value
