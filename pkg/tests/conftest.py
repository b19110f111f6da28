import random

import pytest

from legcob.front import FrontDiagram, L, R, X


@pytest.fixture
def oval():
    return FrontDiagram.from_events([L(1), R(1)])


@pytest.fixture
def two_ovals():
    return FrontDiagram.from_events([L(1), R(1), L(1), R(1)])


@pytest.fixture
def trefoil():
    """Max-tb positive trefoil: tb = 1, r = 0."""
    return FrontDiagram.from_events([L(1), L(3), X(2), X(2), X(2), R(1), R(1)])


@pytest.fixture
def rng():
    return random.Random(0xC0B0)
