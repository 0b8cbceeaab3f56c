"""Exact 2D kernel: rational scalars, points, segments and predicates.

Every coordinate is a ``gmpy2.mpq``; no predicate in this module uses a
tolerance.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional

from gmpy2 import mpq

from .errors import InvalidInput, ZeroLengthSegment

Scalar = mpq
ZERO = mpq(0)


def scalar(value) -> mpq:
    """Convert an int, rational, or decimal/fraction string to an exact scalar.

    Floats are converted through their shortest ``repr`` so that ``0.1``
    becomes exactly 1/10.
    """
    if isinstance(value, bool):
        raise InvalidInput(f"not a coordinate: {value!r}")
    if isinstance(value, type(ZERO)):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, (Fraction, Rational)):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            f = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"not a coordinate: {value!r}") from None
        return mpq(f.numerator, f.denominator)
    raise InvalidInput(f"not a coordinate: {value!r}")


def format_scalar(value: mpq) -> str:
    """Shortest exact text: integer, terminating decimal, or ``p/q``."""
    num, den = int(value.numerator), int(value.denominator)
    if den == 1:
        return str(num)
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    digits = max(twos, fives)
    scaled = abs(num) * 10**digits // den
    sign = "-" if num < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0")


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __repr__(self):
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


def point(x, y) -> Point:
    return Point(scalar(x), scalar(y))


def sub(p: Point, q: Point):
    return (p.x - q.x, p.y - q.y)


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def cross3(p: Point, q: Point, r: Point):
    """(q - p) x (r - p)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def lerp(a: Point, b: Point, t) -> Point:
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def edge_parameter(a: Point, b: Point, p: Point):
    """Parameter t with p = a + t (b - a), for p on the line through a, b."""
    dx, dy = b.x - a.x, b.y - a.y
    if abs(dx) >= abs(dy):
        return (p.x - a.x) / dx
    return (p.y - a.y) / dy


class Orientation(Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0

    def __neg__(self):
        return Orientation(-self.value)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross3(p, q, r)
    if c > 0:
        return Orientation.LEFT
    if c < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ZeroLengthSegment(f"zero-length segment at {self.a!r}")

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


def _between(lo, v, hi):
    return lo <= v <= hi if lo <= hi else hi <= v <= lo


def point_on_segment(p: Point, s: Segment) -> bool:
    if cross3(s.a, s.b, p) != 0:
        return False
    return _between(s.a.x, p.x, s.b.x) and _between(s.a.y, p.y, s.b.y)


def point_strictly_inside_segment(p: Point, s: Segment) -> bool:
    return p != s.a and p != s.b and point_on_segment(p, s)


class IntersectionKind(Enum):
    EMPTY = "empty"
    POINT = "point"
    OVERLAP = "overlap"


@dataclass(frozen=True)
class SegmentIntersection:
    kind: IntersectionKind
    point: Optional[Point] = None
    overlap: Optional[Segment] = None

    def points(self):
        if self.kind is IntersectionKind.POINT:
            return (self.point,)
        if self.kind is IntersectionKind.OVERLAP:
            return (self.overlap.a, self.overlap.b)
        return ()


EMPTY = SegmentIntersection(IntersectionKind.EMPTY)


def _boxes_disjoint(s1: Segment, s2: Segment) -> bool:
    return (
        max(s1.a.x, s1.b.x) < min(s2.a.x, s2.b.x)
        or max(s2.a.x, s2.b.x) < min(s1.a.x, s1.b.x)
        or max(s1.a.y, s1.b.y) < min(s2.a.y, s2.b.y)
        or max(s2.a.y, s2.b.y) < min(s1.a.y, s1.b.y)
    )


def intersect_segments(s1: Segment, s2: Segment) -> SegmentIntersection:
    """Exact closed-segment intersection.

    Endpoint touches are ordinary single points. A collinear overlap of
    positive length is returned with its endpoints in lexicographic order,
    which makes the result independent of argument order and direction.
    """
    if _boxes_disjoint(s1, s2):
        return EMPTY
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    o_c = cross3(a, b, c)
    o_d = cross3(a, b, d)
    if o_c == 0 and o_d == 0:
        return _collinear_overlap(s1, s2)
    if (o_c > 0 and o_d > 0) or (o_c < 0 and o_d < 0):
        return EMPTY
    o_a = cross3(c, d, a)
    o_b = cross3(c, d, b)
    if (o_a > 0 and o_b > 0) or (o_a < 0 and o_b < 0):
        return EMPTY
    # exact endpoints where possible so callers can compare by identity of value
    if o_c == 0:
        return SegmentIntersection(IntersectionKind.POINT, point=c)
    if o_d == 0:
        return SegmentIntersection(IntersectionKind.POINT, point=d)
    if o_a == 0:
        return SegmentIntersection(IntersectionKind.POINT, point=a)
    if o_b == 0:
        return SegmentIntersection(IntersectionKind.POINT, point=b)
    t = o_a / (o_a - o_b)
    return SegmentIntersection(IntersectionKind.POINT, point=lerp(a, b, t))


def _collinear_overlap(s1: Segment, s2: Segment) -> SegmentIntersection:
    lo1, hi1 = sorted((s1.a, s1.b))
    lo2, hi2 = sorted((s2.a, s2.b))
    lo = max(lo1, lo2)
    hi = min(hi1, hi2)
    if lo > hi:
        return EMPTY
    if lo == hi:
        return SegmentIntersection(IntersectionKind.POINT, point=lo)
    return SegmentIntersection(IntersectionKind.OVERLAP, overlap=Segment(lo, hi))


def signed_area2(points) -> mpq:
    """Twice the signed shoelace area of a closed ring of points."""
    total = ZERO
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total
