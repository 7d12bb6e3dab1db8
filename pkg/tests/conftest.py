import numpy as np
import pytest

from src.graph.generators import make_rng
from tests.helpers import random_connected_graphs


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(12345)


@pytest.fixture
def small_graphs():
    return list(random_connected_graphs(40, 12, seed=7))
