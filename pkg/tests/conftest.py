import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_sl2c(rng):
    M = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return M / np.sqrt(np.linalg.det(M))


def random_sp2(rng):
    M = rng.normal(size=(2, 2))
    d = np.linalg.det(M)
    if d < 0:
        M[:, 0] *= -1
        d = -d
    return M / math.sqrt(d)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
