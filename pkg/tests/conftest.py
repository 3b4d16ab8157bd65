import pytest

from conepol import fano, flats_lattice, graphic_matroid, uniform_matroid

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture(scope="session")
def catalog():
    return {
        "u23": uniform_matroid(2, 3),
        "u33": uniform_matroid(3, 3),
        "u34": uniform_matroid(3, 4),
        "k4": graphic_matroid(K4_EDGES),
        "fano": fano(),
    }


@pytest.fixture(scope="session")
def lattices(catalog):
    return {name: flats_lattice(M) for name, M in catalog.items()}
