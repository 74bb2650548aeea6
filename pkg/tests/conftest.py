import pathlib

import pytest

from pseudobe import catalog

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def bck4():
    return catalog.four_element_bck()


@pytest.fixture
def proper6():
    return catalog.six_element_proper()


@pytest.fixture
def bounded6():
    return catalog.six_element_bounded()


@pytest.fixture
def conda5():
    return catalog.five_element_condition_a()
