"""Assemble the result border from flagged rings.

Concatenation happens only at flagged vertices. Unflagged intersection
vertices (``on,on`` connectors, grazing touches) are walked through without
changing rings, and every overlapped stretch is taken from the subject ring
because the clipper walk always stops at the start of an overlap it would
otherwise follow.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

from .classify import ArrowClassifier, LocationMark, arrow_hand
from .errors import InternalInconsistency, TraversalNotClosing
from .geometry import Point, cross3, signed_area2
from .marking import BooleanOp
from .model import Contour, Hand, Polygon, Rule, Vertex, VertexFlag

log = logging.getLogger(__name__)


class Origin(Enum):
    CLIPPER = "clipper"
    SUBJECT = "subject"


@dataclass(frozen=True)
class ResultEdge:
    start: Point
    end: Point
    origin: Origin


@dataclass
class ResultRegion:
    contours: List[List[ResultEdge]] = field(default_factory=list)
    rule: Rule = Rule.NONZERO

    @property
    def empty(self) -> bool:
        return not self.contours

    def rings(self) -> List[List[Point]]:
        return [[e.start for e in c] for c in self.contours]


def _origin(v: Vertex) -> Origin:
    from .model import Role

    return Origin.CLIPPER if v.contour.polygon.role is Role.CLIPPER else Origin.SUBJECT


def _result_side(v: Vertex, backward: bool) -> Hand:
    """Side of a walked edge holding the result, given the arrow it came from."""
    arrow = v.prev if backward else v
    hand = arrow_hand(arrow)
    return hand.flipped() if backward else hand


def _close(edges: List[ResultEdge], side: Hand) -> List[ResultEdge]:
    if side is Hand.LEFT:
        return edges
    return [ResultEdge(e.end, e.start, e.origin) for e in reversed(edges)]


def _walk_from(start: Vertex, limit: int) -> Tuple[List[ResultEdge], Hand]:
    edges: List[ResultEdge] = []
    side = None
    cur = start
    on_red = True
    steps = 0
    while True:
        cur.processed = True
        cur.neighbor.processed = True
        if on_red:
            if cur.flag is not VertexFlag.EN:
                raise TraversalNotClosing(f"re-entered the clipper at {cur!r}, expected en")
            backward = False
        else:
            backward = cur.flag is VertexFlag.EX
        origin = _origin(cur)
        while True:
            nxt = cur.prev if backward else cur.next
            if side is None:
                side = _result_side(cur, backward)
            edges.append(ResultEdge(cur.pos, nxt.pos, origin))
            cur = nxt
            steps += 1
            if steps > limit:
                raise TraversalNotClosing(f"walk from {start!r} does not close")
            if cur.flag is not VertexFlag.NONE:
                break
        if on_red and cur.flag is not VertexFlag.EX:
            raise TraversalNotClosing(f"clipper walk from {start!r} stopped at {cur!r}")
        cur.processed = True
        cur = cur.neighbor
        on_red = not on_red
        if on_red and cur is start:
            return edges, side
        if on_red and cur.processed:
            raise TraversalNotClosing(f"walk from {start!r} reached processed {cur!r}")


def _contour_has_flags(contour: Contour) -> bool:
    return any(v.flag is not VertexFlag.NONE for v in contour)


def _whole_contour(contour: Contour, other: Polygon, op: BooleanOp, is_clipper: bool):
    """Decide whether an unflagged contour belongs to the result border as a whole.

    Returns its left-hand edge list or None.
    """
    marks = ArrowClassifier(other)
    seen = set()
    on_arrow = None
    for v in contour:
        m = marks(v.arrow())
        if m.is_on:
            on_arrow = on_arrow or (v, m)
        else:
            seen.add(m)
    if len(seen) > 1:
        raise InternalInconsistency(
            "an unflagged contour is partly inside and partly outside the other polygon"
        )
    wanted = LocationMark.IN if op is BooleanOp.INTERSECTION else LocationMark.OUT
    if seen:
        if wanted not in seen:
            return None
        ref = next(v for v in contour if not marks(v.arrow()).is_on)
    else:
        if is_clipper:
            # fully overlapped clipper contours are represented by the subject
            return None
        v, m = on_arrow
        r = marks.index[(v.pos, v.next.pos) if m is LocationMark.ON_CON else (v.next.pos, v.pos)]
        same_side = (arrow_hand(v) is arrow_hand(r)) == (m is LocationMark.ON_CON)
        if not same_side:
            return None
        ref = v
    origin = _origin(contour.head)
    edges = [ResultEdge(v.pos, v.next.pos, origin) for v in contour]
    return _close(edges, arrow_hand(ref))


def containment_fallback(clipper: Polygon, subject: Polygon, op: BooleanOp) -> ResultRegion:
    """Result made only of whole contours, for rings that carry no flags."""
    region = ResultRegion(rule=Rule.NONZERO)
    for polygon, other, is_clipper in ((subject, clipper, False), (clipper, subject, True)):
        for contour in polygon.contours:
            if _contour_has_flags(contour):
                continue
            edges = _whole_contour(contour, other, op, is_clipper)
            if edges:
                region.contours.append(edges)
    return region


def trace(clipper: Polygon, subject: Polygon, op: BooleanOp) -> ResultRegion:
    if op is BooleanOp.DIFFERENCE:
        raise ValueError("reduce a difference to an intersection before tracing")
    limit = 2 * (
        sum(1 for _ in clipper.vertices()) + sum(1 for _ in subject.vertices())
    ) + 4
    for v in list(clipper.vertices()) + list(subject.vertices()):
        v.processed = False
    region = ResultRegion(rule=Rule.NONZERO)
    for contour in clipper.contours:
        for v in contour:
            if v.flag is VertexFlag.EN and not v.processed:
                edges, side = _walk_from(v, limit)
                region.contours.append(_close(edges, side))
    unprocessed = [
        v for v in list(clipper.vertices()) + list(subject.vertices())
        if v.flag is not VertexFlag.NONE and not v.processed
    ]
    if unprocessed:
        raise TraversalNotClosing(f"flagged vertices never visited: {unprocessed[:4]!r}")
    region.contours.extend(containment_fallback(clipper, subject, op).contours)
    kept = []
    for c in region.contours:
        if signed_area2([e.start for e in c]) == 0:
            log.debug("dropping zero-area result contour %r", c)
            continue
        kept.append(c)
    region.contours = kept
    return region


# -- normal form -----------------------------------------------------------------


def _edge_key(e: ResultEdge):
    return (e.start, e.end, e.origin.value)


def _rotate_min(edges: List[ResultEdge]) -> List[ResultEdge]:
    n = len(edges)
    keys = [_edge_key(e) for e in edges]
    best = min(range(n), key=lambda i: keys[i:] + keys[:i])
    return edges[best:] + edges[:best]


def canonicalize(region: ResultRegion) -> ResultRegion:
    """Rotate each contour to its smallest starting vertex and sort contours."""
    contours = [_rotate_min(c) for c in region.contours if c]
    contours.sort(key=lambda c: [_edge_key(e) for e in c])
    return ResultRegion(contours, region.rule)


def simplify(region: ResultRegion) -> ResultRegion:
    """Merge straight runs of same-origin edges, then canonicalize."""
    out = []
    for c in region.contours:
        edges = list(c)
        changed = True
        while changed and len(edges) > 1:
            changed = False
            n = len(edges)
            for i in range(n):
                e1, e2 = edges[i], edges[(i + 1) % n]
                if (
                    e1.origin is e2.origin
                    and cross3(e1.start, e1.end, e2.end) == 0
                    and (e1.end.x - e1.start.x) * (e2.end.x - e2.start.x)
                    + (e1.end.y - e1.start.y) * (e2.end.y - e2.start.y) > 0
                ):
                    merged = ResultEdge(e1.start, e2.end, e1.origin)
                    if i + 1 < n:
                        edges[i:i + 2] = [merged]
                    else:
                        edges = [merged] + edges[1:-1]
                    changed = True
                    break
        out.append(edges)
    return canonicalize(ResultRegion(out, region.rule))
