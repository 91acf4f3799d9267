import random

import pytest

from exospringer.census import sp_generators
from exospringer.ffield import FpMatrix


@pytest.fixture
def rng():
    return random.Random(20260809)


def random_matrix(rng, rows, cols, p):
    return FpMatrix([[rng.randrange(p) for _ in range(cols)]
                     for _ in range(rows)], p)


def random_invertible(rng, n, p):
    while True:
        m = random_matrix(rng, n, n, p)
        if m.is_invertible():
            return m


def random_sp_element(rng, space, word_len=8):
    """A pseudorandom symplectic element as a word in the transvection
    generators (seeded, so tests are reproducible)."""
    gens = sp_generators(space)
    g = FpMatrix.identity(space.dim, space.p)
    for _ in range(word_len):
        g = g * rng.choice(gens)
    return g
