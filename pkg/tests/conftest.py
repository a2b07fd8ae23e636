"""Shared fixtures and helpers for the test suite."""

from itertools import combinations

import pytest

from convexcount import GeneratorSpec, Placement, generate


def parabola(n: int) -> Placement:
    return Placement.from_points([(i, i * i) for i in range(n)])


def random_disc(n: int, seed: int, bound: int = 1000) -> Placement:
    return generate(GeneratorSpec("random_disc", n, seed=seed, coord_bound=bound))


def point_in_triangle(p, a, b, c) -> bool:
    """Strict interior test; assumes general position."""

    def cross(u, v, w):
        return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])

    d1 = cross(a, b, p) > 0
    d2 = cross(b, c, p) > 0
    d3 = cross(c, a, p) > 0
    return d1 == d2 == d3


def hull_size(points) -> int:
    """Number of extreme points, by exhaustive containment checks."""
    inside = 0
    for p in points:
        others = [q for q in points if q != p]
        if any(point_in_triangle(p, a, b, c) for a, b, c in combinations(others, 3)):
            inside += 1
    return len(points) - inside


@pytest.fixture
def square_center() -> Placement:
    return Placement.from_points([(0, 0), (6, 0), (6, 6), (0, 6), (3, 2)])


@pytest.fixture
def triangle_two_inside() -> Placement:
    return Placement.from_points([(0, 0), (12, 0), (0, 12), (3, 2), (2, 3)])
