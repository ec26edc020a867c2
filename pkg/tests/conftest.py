import random
import sys

import pytest

from mst3herm.codec import load_paper_fixtures
from mst3herm.field import make_field
from mst3herm.presets import preset_params

PAPER_MODULUS = (2, 2, 0, 0, 0, 0, 1)


@pytest.fixture(scope="session")
def F27():
    return make_field(3, 3, PAPER_MODULUS)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 1, (2, 2, 1))


@pytest.fixture(scope="session")
def F25():
    return make_field(5, 1, (2, 4, 1))


@pytest.fixture(scope="session")
def paper():
    return load_paper_fixtures()


@pytest.fixture(scope="session")
def paper_keys(paper):
    return paper.keys()


@pytest.fixture(scope="session")
def toy3():
    return preset_params("toy-3")


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
