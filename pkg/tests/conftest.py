import pytest

from cyarith.arrangement import intersection_poset
from cyarith.registry import load_bundled_arrangement


@pytest.fixture(scope="session")
def ahlgren():
    return load_bundled_arrangement("ahlgren")


@pytest.fixture(scope="session")
def ahlgren_poset(ahlgren):
    return intersection_poset(ahlgren)
