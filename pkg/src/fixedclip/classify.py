"""Arrow marks and intersection types.

An arrow is a ring edge between two consecutive vertices. Against the other
polygon it is ``in``, ``out``, or ``on`` (coincident with an arrow of the
other ring, flowing the same way, ``con``, or the opposite way, ``opp``).
The type of an intersection vertex is the pair (incoming mark, outgoing mark).
"""
from enum import Enum
from typing import Dict, NamedTuple, Optional

from .errors import ArrowCrossesOtherContour, DegenerateArrowConfiguration, NotABorder
from .geometry import (
    IntersectionKind,
    Point,
    Segment,
    cross3,
    intersect_segments,
    lerp,
    midpoint,
    point_on_segment,
)
from .model import Hand, Polygon, Rule, Vertex


class OverlapSense(Enum):
    CON = "con"
    OPP = "opp"


class LocationMark(Enum):
    IN = "in"
    OUT = "out"
    ON_CON = "on_con"
    ON_OPP = "on_opp"

    @property
    def is_on(self) -> bool:
        return self in (LocationMark.ON_CON, LocationMark.ON_OPP)

    @property
    def sense(self) -> Optional[OverlapSense]:
        if self is LocationMark.ON_CON:
            return OverlapSense.CON
        if self is LocationMark.ON_OPP:
            return OverlapSense.OPP
        return None

    @property
    def base(self) -> str:
        """``in``, ``out`` or ``on`` with the sense dropped."""
        return "on" if self.is_on else self.value

    def flipped(self) -> "LocationMark":
        if self is LocationMark.IN:
            return LocationMark.OUT
        if self is LocationMark.OUT:
            return LocationMark.IN
        return self

    def __str__(self):
        return self.value


def on_mark(sense: OverlapSense) -> LocationMark:
    return LocationMark.ON_CON if sense is OverlapSense.CON else LocationMark.ON_OPP


class IntersectionType(NamedTuple):
    incoming: LocationMark
    outgoing: LocationMark

    def __str__(self):
        return f"{self.incoming},{self.outgoing}"

    @property
    def base(self):
        return (self.incoming.base, self.outgoing.base)


class Location(Enum):
    IN = "in"
    OUT = "out"
    ON_BOUNDARY = "on_boundary"


# -- membership ---------------------------------------------------------------


def _edges(polygon: Polygon):
    for v in polygon.vertices():
        yield v.pos, v.next.pos


def winding_number(p: Point, polygon: Polygon) -> int:
    """Signed winding number of all contours around ``p`` (p off the boundary)."""
    wn = 0
    py = p.y
    for a, b in _edges(polygon):
        if a.y <= py:
            if b.y > py and cross3(a, b, p) > 0:
                wn += 1
        elif b.y <= py and cross3(a, b, p) < 0:
            wn -= 1
    return wn


def point_in_polygon(p: Point, polygon: Polygon, rule: Optional[Rule] = None) -> Location:
    rule = rule or polygon.rule
    for a, b in _edges(polygon):
        if point_on_segment(p, Segment(a, b)):
            return Location.ON_BOUNDARY
    inside = rule.inside(winding_number(p, polygon))
    if polygon.complement:
        inside = not inside
    return Location.IN if inside else Location.OUT


def _side_winding(m: Point, d, own: Vertex, polygon: Polygon) -> int:
    """Winding number just off ``m`` in direction ``d``, ignoring ring edge ``own``.

    Casts a ray from ``m`` along ``d`` with the half-open crossing rule taken
    in the ray's own frame, so no offset point has to be materialised.
    """
    dx, dy = d
    wn = 0
    for v in polygon.vertices():
        if v is own:
            continue
        a, b = v.pos, v.next.pos
        ya = dx * (a.y - m.y) - dy * (a.x - m.x)
        yb = dx * (b.y - m.y) - dy * (b.x - m.x)
        if ya <= 0:
            if yb > 0 and cross3(a, b, m) > 0:
                wn += 1
        elif yb <= 0 and cross3(a, b, m) < 0:
            wn -= 1
    return wn


_PROBES = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)]


def arrow_hand(v: Vertex, polygon: Optional[Polygon] = None) -> Hand:
    """Which side of the arrow ``v -> v.next`` holds its own polygon's region.

    Evaluated locally, so holes and inverted (complement) polygons get the hand
    that matters at this stretch of boundary. Raises ``NotABorder`` if both
    sides are inside or both outside.
    """
    polygon = polygon or v.contour.polygon
    a, b = v.pos, v.next.pos
    others = [(w.pos, w.next.pos) for w in polygon.vertices() if w is not v]
    for num, den in _PROBES:
        m = lerp(a, b, type(a.x)(num, den))
        if not any(point_on_segment(m, Segment(p, q)) for p, q in others):
            break
    else:
        raise NotABorder(f"arrow {a!r}->{b!r} is covered by other edges of its polygon")
    d = (a.y - b.y, b.x - a.x)  # left normal
    wl = _side_winding(m, d, v, polygon)
    left, right = polygon.rule.inside(wl), polygon.rule.inside(wl - 1)
    if polygon.complement:
        left, right = not left, not right
    if left and not right:
        return Hand.LEFT
    if right and not left:
        return Hand.RIGHT
    raise NotABorder(f"arrow {a!r}->{b!r} does not separate interior from exterior")


def vertex_hand(v: Vertex) -> Hand:
    """Hand of v's ring at v; both adjacent arrows must agree."""
    h_out = arrow_hand(v)
    h_in = arrow_hand(v.prev)
    if h_in is not h_out:
        raise NotABorder(f"hand changes at {v.pos!r}")
    return h_out


# -- arrows --------------------------------------------------------------------


class ArrowClassifier:
    """Marks arrows against a completed ``other`` polygon.

    ``On`` is detected by exact coincidence with an arrow of ``other``;
    anything else is decided by the exact midpoint's membership.
    """

    def __init__(self, other: Polygon, rule: Optional[Rule] = None, check: bool = False):
        self.other = other
        self.rule = rule or other.rule
        self.check = check
        self.index: Dict[tuple, Vertex] = {(w.pos, w.next.pos): w for w in other.vertices()}

    def __call__(self, arrow: Segment) -> LocationMark:
        a, b = arrow.a, arrow.b
        if (a, b) in self.index:
            return LocationMark.ON_CON
        if (b, a) in self.index:
            return LocationMark.ON_OPP
        if self.check:
            self._check_not_crossing(arrow)
        loc = point_in_polygon(midpoint(a, b), self.other, self.rule)
        if loc is Location.ON_BOUNDARY:
            raise ArrowCrossesOtherContour(f"arrow {a!r}->{b!r} runs along the other contour")
        return LocationMark.IN if loc is Location.IN else LocationMark.OUT

    def _check_not_crossing(self, arrow: Segment):
        for p, q in self.index:
            hit = intersect_segments(arrow, Segment(p, q))
            if hit.kind is IntersectionKind.OVERLAP or (
                hit.kind is IntersectionKind.POINT and hit.point not in (arrow.a, arrow.b)
            ):
                raise ArrowCrossesOtherContour(
                    f"arrow {arrow.a!r}->{arrow.b!r} meets edge {p!r}->{q!r}"
                )


def classify_arrow(arrow: Segment, other: Polygon, rule: Optional[Rule] = None) -> LocationMark:
    return ArrowClassifier(other, rule, check=True)(arrow)


def classify_vertex(v: Vertex, other: Polygon, rule: Optional[Rule] = None) -> IntersectionType:
    marks = ArrowClassifier(other, rule, check=True)
    return IntersectionType(marks(v.prev.arrow()), marks(v.arrow()))


def classify_polygon(polygon: Polygon, other: Polygon, rule: Optional[Rule] = None):
    """Set ``itype`` and ``hand`` on every intersection vertex of ``polygon``."""
    marks = ArrowClassifier(other, rule)
    cache = {}

    def mark_of(u: Vertex) -> LocationMark:
        key = id(u)
        if key not in cache:
            cache[key] = marks(u.arrow())
        return cache[key]

    for v in polygon.intersections():
        v.itype = IntersectionType(mark_of(v.prev), mark_of(v))
        v.hand = vertex_hand(v)


# -- cross-product derivation ---------------------------------------------------


def _same_direction(u, w) -> bool:
    return u[0] * w[1] - u[1] * w[0] == 0 and u[0] * w[0] + u[1] * w[1] > 0


def _half(a, u) -> int:
    c = a[0] * u[1] - a[1] * u[0]
    if c > 0 or (c == 0 and a[0] * u[0] + a[1] * u[1] > 0):
        return 0
    return 1


def _strictly_ccw_between(a, b, d) -> bool:
    """d lies strictly inside the counter-clockwise sweep from a to b."""
    if _same_direction(d, a) or _same_direction(d, b):
        return False
    hd, hb = _half(a, d), _half(a, b)
    if hd != hb:
        return hd < hb
    return d[0] * b[1] - d[1] * b[0] > 0


def _direction(v: Vertex, w: Vertex):
    return (w.pos.x - v.pos.x, w.pos.y - v.pos.y)


def derive_second_mark(
    v: Vertex, known: Optional[LocationMark] = None, known_incoming: bool = True
) -> LocationMark:
    """Mark of one red arrow at ``v`` from the other one and the 4 arrow directions.

    The two black arrows split a small disc around ``v`` into two sectors, one
    inside the black polygon and one outside. ``known`` tells which is which
    (if omitted, the black hand at ``v`` is used). The unknown red arrow is
    ``on`` if it runs along a black arrow, otherwise it takes the mark of the
    sector it points into.
    """
    b = v.neighbor
    if b is None:
        raise DegenerateArrowConfiguration(f"{v!r} is not an intersection vertex")
    red_in = _direction(v, v.prev)
    red_out = _direction(v, v.next)
    b_in = _direction(v, b.prev)
    b_out = _direction(v, b.next)
    known_dir, other_dir = (red_in, red_out) if known_incoming else (red_out, red_in)

    # the unknown arrow lies along a black arrow: report the overlap sense
    if _same_direction(other_dir, b_out):
        return LocationMark.ON_OPP if known_incoming is False else LocationMark.ON_CON
    if _same_direction(other_dir, b_in):
        return LocationMark.ON_CON if known_incoming is False else LocationMark.ON_OPP

    # sector "left" is the ccw sweep from the black outgoing to the incoming ray,
    # i.e. the side a left-hand black ring keeps its interior on
    other_left = _strictly_ccw_between(b_out, b_in, other_dir)
    if known is None:
        if b.hand is None:
            raise DegenerateArrowConfiguration("black hand unknown and no mark given")
        inside_left = b.hand is Hand.LEFT
        return LocationMark.IN if other_left == inside_left else LocationMark.OUT
    if known.is_on:
        raise DegenerateArrowConfiguration("the known red arrow must be in or out")
    if _same_direction(known_dir, b_out) or _same_direction(known_dir, b_in):
        raise DegenerateArrowConfiguration("known arrow runs along a black arrow")
    known_left = _strictly_ccw_between(b_out, b_in, known_dir)
    return known if known_left == other_left else known.flipped()
