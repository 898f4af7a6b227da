"""
Shared fixtures for the symmetric chain decomposition tests
"""
import pytest

from src.chains.families import FamilyParams
from src.ladders.peeling import assemble_ladders


@pytest.fixture(scope="session")
def ladders_n3():
    """The five ladders of L(5, 3)"""
    return assemble_ladders(3)


@pytest.fixture
def find_ladder():
    """Pick one ladder out of a list by family, params and L(2, k) layer"""
    def find(ladders, family, params=FamilyParams(), layer=None):
        for ladder in ladders:
            key = ladder.key
            if key.family == family and key.params == params and key.layer == layer:
                return ladder
        raise LookupError(f"no ladder {family} {params} layer={layer}")
    return find
