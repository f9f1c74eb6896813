"""Shared oracles and samplers for the test suite.

The Euclidean route (Cartesian inversion in the side's orthogonal circle)
serves as the independent oracle for the turn-fraction inversion formula;
test modules keep expected values frozen from it rather than from the code
path under test.
"""

import math

import numpy as np
import pytest

from hypergon.disk_geometry import GeodesicSide, invert_euclidean, side_circle, unit_point


def euclidean_image_fraction(beta: float, side: GeodesicSide) -> float:
    """Image fraction computed via the Cartesian inversion route only."""
    q = invert_euclidean(unit_point(beta), side_circle(side))
    return (math.atan2(q.y, q.x) / (2.0 * math.pi)) % 1.0


def circular_gap(t1, t2):
    """Shortest distance between turn fractions, elementwise."""
    d = np.abs((np.asarray(t1) - np.asarray(t2)) % 1.0)
    return np.minimum(d, 1.0 - d)


def random_angle_vectors(rng: np.random.Generator, n: int, count: int, floor: float = 1e-6):
    """Uniform simplex draws with every angle in (floor, 1/2)."""
    out = []
    while len(out) < count:
        block = rng.standard_exponential((count * 3, n))
        block /= block.sum(axis=1, keepdims=True)
        ok = (block.max(axis=1) < 0.5 - 1e-9) & (block.min(axis=1) > floor)
        out.extend(block[ok][: count - len(out)])
    return np.asarray(out)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
