import pytest

from zgon.core import Gon, Point
from zgon.rep import Interval


def P(n, p=1):
    return Point(p, n)


def I(a, b, h, p=1, q=None):
    """Interval on copy ``p`` (and ``q`` for the right end)."""
    return Interval(Point(p, a), Point(p if q is None else q, b), h)


@pytest.fixture(scope="session")
def gon1():
    return Gon(1)


@pytest.fixture(scope="session")
def gon2():
    return Gon(2)
