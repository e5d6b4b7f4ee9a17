import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ksemiring.specfmt import FIXTURES, load_fixture  # noqa: E402


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def fig1(fixtures):
    return fixtures["fig1_example34"]


@pytest.fixture(scope="session")
def fig2(fixtures):
    return fixtures["fig2_example35"]


@pytest.fixture(scope="session")
def r0(fixtures):
    return fixtures["r0"]


@pytest.fixture(scope="session")
def r1(fixtures):
    return fixtures["r1"]


@pytest.fixture(scope="session")
def chain3(fixtures):
    return fixtures["chain3"]


@pytest.fixture(scope="session")
def maxmax2(fixtures):
    return fixtures["maxmax2"]


@pytest.fixture(scope="session")
def trunc3(fixtures):
    return fixtures["trunc3"]
