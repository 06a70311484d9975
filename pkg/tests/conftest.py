"""Shared helpers for building point sets in tests."""

import pytest

from diskcover import Point
from diskcover.rng import Xoshiro256StarStar


def make_points(coords):
    """Point list from (x, y) tuples, ids in order."""
    return [Point(float(x), float(y), i) for i, (x, y) in enumerate(coords)]


def uniform_points(seed, n, lo, hi):
    """n points uniform in [lo, hi]^2 from the package RNG (x then y)."""
    rng = Xoshiro256StarStar(seed)
    return [Point(rng.uniform(lo, hi), rng.uniform(lo, hi), i) for i in range(n)]


@pytest.fixture
def rng_factory():
    return Xoshiro256StarStar
