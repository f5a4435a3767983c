import numpy as np
import pytest

from oracles import REF_LEFT, REF_RIGHT


@pytest.fixture
def rng():
    return np.random.default_rng(20250809)


@pytest.fixture
def ref_left():
    return REF_LEFT


@pytest.fixture
def ref_right():
    return REF_RIGHT
