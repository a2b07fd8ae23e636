import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcount import (
    CCW,
    COORD_BOUND,
    CW,
    Collinear,
    CollinearError,
    Duplicate,
    InvalidPlacementError,
    ParseError,
    Placement,
    Point,
    ValidationError,
    cross,
    dumps_placement,
    load_placement,
    orientation,
    save_placement,
    validate_placement,
)
from convexcount.geometry import find_violation

coords = st.integers(min_value=-COORD_BOUND, max_value=COORD_BOUND)
points = st.tuples(coords, coords)


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == CCW
    assert orientation((0, 0), (0, 1), (1, 0)) == CW
    with pytest.raises(CollinearError):
        orientation((0, 0), (1, 1), (2, 2))


@given(points, points, points)
def test_orientation_antisymmetry_and_cyclic(a, b, c):
    if cross(a, b, c) == 0:
        with pytest.raises(CollinearError):
            orientation(a, b, c)
        return
    s = orientation(a, b, c)
    assert orientation(a, c, b) == -s
    assert orientation(b, c, a) == s
    assert orientation(c, a, b) == s


@given(points, points, points, st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_orientation_translation_invariance(a, b, c, dx, dy):
    def shift(p):
        return (p[0] + dx, p[1] + dy)

    if cross(a, b, c) == 0:
        return
    if any(abs(v) > COORD_BOUND for p in (a, b, c) for v in shift(p)):
        return
    assert orientation(a, b, c) == orientation(shift(a), shift(b), shift(c))


def test_validate_placement_examples():
    assert validate_placement([(0, 0), (1, 0), (0, 1)]) is None
    v = validate_placement([(0, 0), (1, 1), (2, 2), (5, 0)])
    assert v == Collinear(0, 1, 2)
    v = validate_placement([(0, 0), (0, 0), (1, 2)])
    assert v == Duplicate(0, 1)


def test_find_violation_vectorized_matches_pure():
    # plant one collinear triple in an otherwise generic large placement
    pts = [(i, i * i + (i % 7)) for i in range(70)]
    pts[50] = (200, 300)
    pts[60] = (202, 302)
    pts[65] = (204, 304)
    slow = None
    for i in range(68):
        for j in range(i + 1, 69):
            for k in range(j + 1, 70):
                a, b, c = pts[i], pts[j], pts[k]
                if cross(a, b, c) == 0:
                    slow = Collinear(i, j, k)
                    break
            if slow:
                break
        if slow:
            break
    fast = find_violation(pts)
    assert isinstance(fast, Collinear)
    assert fast == slow


def test_placement_construction_errors():
    with pytest.raises(InvalidPlacementError):
        Placement(((0, 0), (1, 1)))
    with pytest.raises(InvalidPlacementError):
        Placement(((0, 0), (1, 1), (COORD_BOUND + 1, 0)))
    with pytest.raises(InvalidPlacementError):
        Placement((Point(0, 0), Point(1, 1), Point(0, 0)))
    with pytest.raises(ValidationError):
        Placement.from_points([(0, 0), (1, 1), (2, 2)])


def test_placement_basics():
    p = Placement.from_points([(0, 0), (1, 0), (0, 1)])
    assert p.n == 3
    assert len(p) == 3
    assert p[1] == Point(1, 0)
    assert list(p) == [Point(0, 0), Point(1, 0), Point(0, 1)]
    assert p.coords.shape == (3, 2)
    assert not p.coords.flags.writeable


def test_load_placement_examples():
    p = load_placement("3\n0 0\n1 0\n0 1\n")
    assert p.points == (Point(0, 0), Point(1, 0), Point(0, 1))
    with pytest.raises(ParseError):
        load_placement("2\n0 0\n1 1\n9 9\n")
    with pytest.raises(ValidationError):
        load_placement("3\n0 0\n1 1\n2 2\n")


def test_load_placement_comments_and_stream():
    text = "# generated\n# by hand\n3\n0 0\n1 0\n# interlude\n0 1\n"
    p = load_placement(io.StringIO(text))
    assert p.n == 3
    assert load_placement(text.encode("ascii")).points == p.points


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "# only comments\n",
        "three\n0 0\n1 0\n0 1\n",
        "3\n0 0\n1 0\n",
        "3\n0  0\n1 0\n0 1\n",
        "3\n0 0\n01 0\n0 1\n",
        "3\n0 0\n+1 0\n0 1\n",
        "3\n0 0\n1.0 0\n0 1\n",
        "3\n0 0\n-0 0\n0 1\n",
        "3\n0 0\n1 0 7\n0 1\n",
        "3\n0 0\n1\n0 1\n",
        f"3\n0 0\n{COORD_BOUND + 1} 0\n0 1\n",
        "2\n0 0\n1 0\n",
    ],
)
def test_load_placement_rejects_malformed(bad):
    with pytest.raises(ParseError):
        load_placement(bad)


def test_save_round_trip():
    p = Placement.from_points([(0, 0), (1, 0), (0, 1)])
    assert dumps_placement(p) == "3\n0 0\n1 0\n0 1\n"
    sink = io.StringIO()
    save_placement(p, sink, comment="demo")
    text = sink.getvalue()
    assert text.startswith("# demo\n")
    assert load_placement(text).points == p.points


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-40, 40), st.integers(-40, 40)),
                min_size=3, max_size=8, unique=True))
def test_round_trip_is_identity_on_valid_placements(pts):
    if find_violation(pts) is not None:
        return
    p = Placement.from_points(pts)
    assert load_placement(dumps_placement(p)).points == p.points
