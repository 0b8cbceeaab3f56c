"""Circular doubly-linked vertex rings for clipper and subject contours."""
from enum import Enum
from typing import Iterator, List, Optional, Sequence

from .errors import (
    DegenerateContour,
    DuplicateConsecutivePoint,
    PointNotOnEdge,
    SelfIntersectingWithoutDeclaredHand,
    TooFewVertices,
)
from .geometry import (
    IntersectionKind,
    Point,
    Segment,
    edge_parameter,
    intersect_segments,
    point,
    point_strictly_inside_segment,
    signed_area2,
)


class VertexFlag(Enum):
    NONE = "none"
    EN = "en"
    EX = "ex"

    def __str__(self):
        return self.value


class Hand(Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> "Hand":
        return Hand.RIGHT if self is Hand.LEFT else Hand.LEFT


class Role(Enum):
    CLIPPER = "clipper"
    SUBJECT = "subject"


class Rule(Enum):
    NONZERO = "nonzero"
    EVENODD = "evenodd"

    def inside(self, winding: int) -> bool:
        if self is Rule.NONZERO:
            return winding != 0
        return winding % 2 == 1


class Vertex:
    """A ring node. Intersection vertices are linked to their twin in the other ring."""

    __slots__ = (
        "pos", "is_intersection", "neighbor", "flag", "processed",
        "next", "prev", "contour", "original", "itype", "hand",
    )

    def __init__(self, pos: Point, original: bool = True):
        self.pos = pos
        self.is_intersection = False
        self.neighbor: Optional["Vertex"] = None
        self.flag = VertexFlag.NONE
        self.processed = False
        self.next: "Vertex" = self
        self.prev: "Vertex" = self
        self.contour: Optional["Contour"] = None
        self.original = original
        # filled in by classification
        self.itype = None
        self.hand: Optional[Hand] = None

    def __repr__(self):
        tag = "I" if self.is_intersection else "V"
        flag = "" if self.flag is VertexFlag.NONE else f" {self.flag}"
        return f"<{tag} {self.pos!r}{flag}>"

    def arrow(self) -> Segment:
        """The outgoing arrow (edge to the next ring vertex)."""
        return Segment(self.pos, self.next.pos)

    def link(self, other: "Vertex"):
        self.is_intersection = other.is_intersection = True
        self.neighbor = other
        other.neighbor = self


class Contour:
    def __init__(self, head: Vertex, declared_hand: Optional[Hand] = None):
        self.head = head
        self.declared_hand = declared_hand
        self.polygon: Optional["Polygon"] = None
        for v in self:
            v.contour = self

    def __iter__(self) -> Iterator[Vertex]:
        v = self.head
        while True:
            yield v
            v = v.next
            if v is self.head:
                return

    def __len__(self):
        return sum(1 for _ in self)

    def points(self) -> List[Point]:
        return [v.pos for v in self]

    def original_points(self) -> List[Point]:
        return [v.pos for v in self if v.original]

    def arrows(self) -> Iterator[Vertex]:
        """Yield every vertex; each stands for its outgoing arrow."""
        return iter(self)

    def intersections(self) -> List[Vertex]:
        return [v for v in self if v.is_intersection]


class Polygon:
    """A set of contours playing one role for a whole operation.

    ``complement`` marks a polygon whose region is the plane minus the region
    its contours enclose; difference is run as an intersection with such a
    polygon.
    """

    def __init__(
        self,
        contours: Sequence[Contour],
        role: Role = Role.SUBJECT,
        rule: Rule = Rule.NONZERO,
        complement: bool = False,
    ):
        self.contours = list(contours)
        self.role = role
        self.rule = rule
        self.complement = complement
        for c in self.contours:
            c.polygon = self

    @classmethod
    def from_points(cls, contours, role=Role.SUBJECT, rule=Rule.NONZERO, hands=None):
        hands = hands or [None] * len(contours)
        return cls(
            [build_contour(pts, declared_hand=h) for pts, h in zip(contours, hands)],
            role=role,
            rule=rule,
        )

    def vertices(self) -> Iterator[Vertex]:
        for c in self.contours:
            yield from c

    def intersections(self) -> List[Vertex]:
        return [v for v in self.vertices() if v.is_intersection]

    def copy(self) -> "Polygon":
        """A fresh polygon over the original input vertices only."""
        return Polygon(
            [build_contour(c.original_points(), c.declared_hand) for c in self.contours],
            role=self.role,
            rule=self.rule,
            complement=self.complement,
        )

    def __repr__(self):
        return f"<Polygon {self.role.value} {len(self.contours)} contour(s)>"


def build_contour(points, declared_hand: Optional[Hand] = None) -> Contour:
    pts = [p if isinstance(p, Point) else point(*p) for p in points]
    if len(pts) < 3:
        raise TooFewVertices(f"a contour needs at least 3 vertices, got {len(pts)}")
    for i, p in enumerate(pts):
        if p == pts[(i + 1) % len(pts)]:
            raise DuplicateConsecutivePoint(f"vertex {i} repeats {p!r}")
    verts = [Vertex(p) for p in pts]
    n = len(verts)
    for i, v in enumerate(verts):
        v.next = verts[(i + 1) % n]
        v.prev = verts[i - 1]
    return Contour(verts[0], declared_hand)


def insert_vertex_on_edge(contour: Contour, edge, p: Point) -> Vertex:
    """Insert ``p`` as an intersection vertex on the original edge ``(u, w)``.

    ``u`` and ``w`` are the edge's end vertices; vertices already inserted
    between them are respected, so repeated insertions stay ordered by their
    exact parameter along the edge. A point equal to an existing vertex is
    flagged rather than duplicated.
    """
    u, w = edge
    if p == u.pos:
        u.is_intersection = True
        return u
    if p == w.pos:
        w.is_intersection = True
        return w
    if not point_strictly_inside_segment(p, Segment(u.pos, w.pos)):
        raise PointNotOnEdge(f"{p!r} is not on edge {u.pos!r}-{w.pos!r}")
    t = edge_parameter(u.pos, w.pos, p)
    cur = u
    while cur.next is not w:
        nxt = cur.next
        tn = edge_parameter(u.pos, w.pos, nxt.pos)
        if tn == t:
            nxt.is_intersection = True
            return nxt
        if tn > t:
            break
        cur = nxt
    v = Vertex(p, original=False)
    v.is_intersection = True
    v.contour = contour
    nxt = cur.next
    v.prev, v.next = cur, nxt
    cur.next = v
    nxt.prev = v
    return v


def is_simple(points: Sequence[Point]) -> bool:
    """True iff the closed ring has no self-touching or self-crossing."""
    n = len(points)
    segs = [Segment(points[i], points[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            hit = intersect_segments(segs[i], segs[j])
            if hit.kind is IntersectionKind.EMPTY:
                continue
            if hit.kind is IntersectionKind.OVERLAP:
                return False
            if j == i + 1:
                if hit.point != segs[i].b:
                    return False
            elif i == 0 and j == n - 1:
                if hit.point != segs[i].a:
                    return False
            else:
                return False
    return True


def contour_hand(contour: Contour) -> Hand:
    if contour.declared_hand is not None:
        return contour.declared_hand
    pts = contour.points()
    if not is_simple(pts):
        raise SelfIntersectingWithoutDeclaredHand(
            "self-intersecting contour needs an explicit hand"
        )
    area = signed_area2(pts)
    if area == 0:
        raise DegenerateContour("contour encloses zero area")
    return Hand.LEFT if area > 0 else Hand.RIGHT
