import numpy as np
import pytest

from fibcompile.words import BraidWord


def random_word(rng, max_factors=20, max_gen=2):
    k = int(rng.integers(1, max_factors + 1))
    factors = []
    for _ in range(k):
        g = int(rng.integers(1, max_gen + 1))
        p = 0
        while p == 0:
            p = int(rng.integers(-5, 6))
        factors.append((g, p))
    return BraidWord(tuple(factors))


@pytest.fixture
def rng():
    return np.random.default_rng(20260822)
