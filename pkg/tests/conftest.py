import random

import pytest

from meyersig import SymplecticElement, gen_S, gen_T, random_transvection_product


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_sl2(r: random.Random, letters: int = 12) -> SymplecticElement:
    """Random SL(2,Z) element as a product of S, T, T^{-1} letters."""
    gens = (gen_S(), gen_T(), gen_T().inverse())
    m = SymplecticElement.identity(1)
    for _ in range(letters):
        m = m * gens[r.randrange(3)]
    return m


@pytest.fixture
def seeded():
    return rng(20260809)


def sample_symplectic(r: random.Random, g: int, length: int = 8) -> SymplecticElement:
    return random_transvection_product(r, g, length)
