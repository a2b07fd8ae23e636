"""Exact integer primitives: points, the orientation predicate, placement
validation and placement file I/O.

All coordinates are signed integers with absolute value at most
``COORD_BOUND`` (10**7).  Under that bound the 3-point orientation
determinant is at most 8 * 10**14 in magnitude, which leaves more than a
factor of two of headroom inside a signed 64-bit integer, so every numpy
fast path in this package is exact.  The pure-Python predicate below is
exact for arbitrary ints regardless.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable, NamedTuple, Optional, Union

import numpy as np

COORD_BOUND = 10_000_000

CCW = 1
CW = -1


class ConvexCountError(Exception):
    """Base class for all errors raised by this package."""


class CollinearError(ConvexCountError):
    """The orientation determinant of three points is exactly zero."""


class ParseError(ConvexCountError):
    """A placement file does not conform to the text format."""


class ValidationError(ConvexCountError):
    """A placement violates general position (duplicate or collinear points)."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


class InvalidPlacementError(ConvexCountError):
    """A placement breaks a structural invariant (too few points, coordinate
    out of bounds, non-integer coordinate)."""


class Point(NamedTuple):
    x: int
    y: int


PointLike = Union[Point, tuple]


@dataclass(frozen=True)
class Duplicate:
    """Indices of two equal points."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"duplicate points at indices {self.i} and {self.j}"


@dataclass(frozen=True)
class Collinear:
    """Indices of three collinear points."""

    i: int
    j: int
    k: int

    def __str__(self) -> str:
        return f"collinear points at indices {self.i}, {self.j}, {self.k}"


Violation = Union[Duplicate, Collinear]


def cross(a: PointLike, b: PointLike, c: PointLike) -> int:
    """Signed doubled area of triangle abc: (b - a) x (c - a).  Exact."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a: PointLike, b: PointLike, c: PointLike) -> int:
    """Return CCW (+1) or CW (-1) for the ordered triple (a, b, c).

    Raises CollinearError when the determinant is exactly zero; a zero is
    never rounded away or represented as a sign.
    """
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return CCW
    if d < 0:
        return CW
    raise CollinearError(f"collinear points {a}, {b}, {c}")


def _check_coord(v, index: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidPlacementError(f"point {index}: coordinate {v!r} is not an int")
    if abs(v) > COORD_BOUND:
        raise InvalidPlacementError(
            f"point {index}: |{v}| exceeds the coordinate bound {COORD_BOUND}"
        )
    return v


def find_violation(points) -> Optional[Violation]:
    """Scan for the first duplicate pair or collinear triple, in index order.

    Returns None when the points are in general position.  Duplicates are
    reported before collinear triples.  The collinear scan covers all
    C(n, 3) triples; for larger inputs it runs on a vectorized kernel,
    which is exact because coordinates are bounded.
    """
    pts = [(p[0], p[1]) for p in points]
    n = len(pts)
    seen: dict = {}
    for i, p in enumerate(pts):
        if p in seen:
            return Duplicate(seen[p], i)
        seen[p] = i
    if n < 3:
        return None
    if n <= 60:
        for i in range(n - 2):
            ax, ay = pts[i]
            for j in range(i + 1, n - 1):
                dx = pts[j][0] - ax
                dy = pts[j][1] - ay
                for k in range(j + 1, n):
                    if dx * (pts[k][1] - ay) - dy * (pts[k][0] - ax) == 0:
                        return Collinear(i, j, k)
        return None
    # Vectorized scan, one anchor point at a time, preserving index order.
    coords = np.asarray(pts, dtype=np.int64)
    x, y = coords[:, 0], coords[:, 1]
    for i in range(n - 2):
        dx = x[i + 1 :] - x[i]
        dy = y[i + 1 :] - y[i]
        det = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        ut = np.triu_indices(n - 1 - i, k=1)
        zero = det[ut] == 0
        if zero.any():
            first = int(np.flatnonzero(zero)[0])
            j = int(ut[0][first]) + i + 1
            k = int(ut[1][first]) + i + 1
            return Collinear(i, j, k)
    return None


@dataclass(frozen=True)
class Placement:
    """An ordered sequence of integer points, assumed in general position.

    Construction checks the cheap structural invariants (n >= 3, integer
    coordinates within bounds, no duplicates).  The O(n^3) general-position
    scan runs in ``from_points``/``load_placement``; code that builds
    placements incrementally and proves validity along the way may call the
    constructor directly.
    """

    points: tuple

    def __post_init__(self):
        if len(self.points) < 3:
            raise InvalidPlacementError(
                f"a placement needs at least 3 points, got {len(self.points)}"
            )
        seen = set()
        for idx, p in enumerate(self.points):
            _check_coord(p[0], idx)
            _check_coord(p[1], idx)
            if p in seen:
                raise InvalidPlacementError(f"duplicate point {p} at index {idx}")
            seen.add(p)

    @classmethod
    def from_points(cls, points: Iterable[PointLike], validate: bool = True) -> "Placement":
        pts = tuple(Point(p[0], p[1]) for p in points)
        if validate:
            violation = find_violation(pts)
            if violation is not None:
                raise ValidationError(violation)
        return cls(pts)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def coords(self) -> np.ndarray:
        """(n, 2) int64 coordinate array (read-only view of the placement)."""
        arr = np.asarray(self.points, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]


def validate_placement(placement) -> Optional[Violation]:
    """Return None when valid, else the first duplicate pair or collinear
    triple.  Violations are data, not exceptions."""
    points = placement.points if isinstance(placement, Placement) else placement
    return find_violation(points)


_INT_TOKEN = re.compile(r"0|-?[1-9][0-9]*")


def _parse_int(token: str, where: str) -> int:
    if _INT_TOKEN.fullmatch(token) is None:
        raise ParseError(f"{where}: {token!r} is not a canonical decimal integer")
    return int(token)


def load_placement(source: Union[IO, str, bytes]) -> Placement:
    """Parse and validate a placement from the text format.

    Format: optional comment lines starting with '#', then a line holding n,
    then exactly n lines "x y" (single space, canonical decimal integers).
    Raises ParseError on malformed input and ValidationError when the points
    are not in general position.
    """
    if hasattr(source, "read"):
        data = source.read()
    else:
        data = source
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"placement file is not ASCII: {exc}") from None

    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    content = [ln for ln in lines if not ln.startswith("#")]
    if not content:
        raise ParseError("empty placement file")

    n = _parse_int(content[0], "header line")
    if n < 3:
        raise ParseError(f"placement size {n} is below the minimum of 3")
    body = content[1:]
    if len(body) != n:
        raise ParseError(f"count mismatch: header says {n}, found {len(body)} point lines")

    points = []
    for lineno, line in enumerate(body):
        parts = line.split(" ")
        if len(parts) != 2:
            raise ParseError(f"point line {lineno}: expected 'x y', got {line!r}")
        x = _parse_int(parts[0], f"point line {lineno}")
        y = _parse_int(parts[1], f"point line {lineno}")
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            raise ParseError(
                f"point line {lineno}: coordinate exceeds bound {COORD_BOUND}"
            )
        points.append(Point(x, y))

    return Placement.from_points(points)


def dumps_placement(placement: Placement) -> str:
    """Serialize to the canonical text format (no comments)."""
    if len(placement.points) < 3:
        raise InvalidPlacementError("cannot save a placement with fewer than 3 points")
    out = [str(placement.n)]
    out.extend(f"{p[0]} {p[1]}" for p in placement.points)
    return "\n".join(out) + "\n"


def save_placement(placement: Placement, sink: IO, comment: Optional[str] = None) -> None:
    """Write the placement; round-trips with load_placement byte-for-byte
    modulo comment lines."""
    text = dumps_placement(placement)
    if comment:
        text = "".join(f"# {ln}\n" for ln in comment.splitlines()) + text
    try:
        sink.write(text)
    except TypeError:
        sink.write(text.encode("ascii"))
