import json
from pathlib import Path

import pytest

from dimerlab.center import DimerModel, MonomialModel
from dimerlab.contraction import contract
from dimerlab.tiling import tiling_from_dict

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "dimerlab" / "fixtures"


def load(name: str) -> dict:
    return json.loads((FIXTURES / f"{name}.json").read_text())


@pytest.fixture(scope="session")
def conifold():
    return tiling_from_dict(load("conifold"))


@pytest.fixture(scope="session")
def fig1():
    return tiling_from_dict(load("fig1-Q"))


@pytest.fixture(scope="session")
def green(fig1):
    return contract(fig1, fig1.contractions["green"])


@pytest.fixture(scope="session")
def fig1_model(green):
    return DimerModel(green)


@pytest.fixture(scope="session")
def conifold_model(conifold):
    return DimerModel(contract(conifold, []))


@pytest.fixture(scope="session")
def kxs_model():
    return MonomialModel.from_dict(load("k-plus-xS"))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
