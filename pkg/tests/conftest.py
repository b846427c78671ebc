import numpy as np
import pytest

from balltrace import SphereSampler


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(key=np.array([987654321, 0], dtype=np.uint64)))


@pytest.fixture
def sampler2():
    return SphereSampler(2, seed=20240811)
