import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fintop import enumerate_topologies, example_space


@functools.lru_cache(maxsize=None)
def all_spaces(n):
    return tuple(enumerate_topologies(n))


@pytest.fixture
def sierpinski():
    return example_space("sierpinski")


@pytest.fixture
def indiscrete2():
    return example_space("indiscrete:2")


@pytest.fixture
def discrete2():
    return example_space("discrete:2")
