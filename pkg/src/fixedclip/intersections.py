"""Phase 1: find every clipper/subject meeting point and complete both rings."""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List

from .errors import SelfIntersectionAtRedBlackIntersection
from .geometry import IntersectionKind, Point, Segment, edge_parameter, intersect_segments
from .model import Polygon, Vertex, insert_vertex_on_edge


@dataclass(frozen=True)
class IntersectionRecord:
    point: Point
    red_vertex: Vertex
    black_vertex: Vertex


def _edges(polygon: Polygon):
    return [(c, v, v.next) for c in polygon.contours for v in c]


def find_and_insert_intersections(
    clipper: Polygon, subject: Polygon, reverse_order: bool = False
) -> List[IntersectionRecord]:
    """Brute-force all edge pairs, insert and link intersection vertices.

    Overlaps contribute both of their endpoints, so the two rings end up
    sharing a common refinement of every overlapping stretch. Insertions are
    applied per edge in parameter order, which makes the outcome independent
    of the order pairs are tested in (``reverse_order`` exists to check that).
    """
    red_edges = _edges(clipper)
    black_edges = _edges(subject)
    red_hits: Dict[int, set] = defaultdict(set)
    black_hits: Dict[int, set] = defaultdict(set)
    red_segs = [Segment(u.pos, w.pos) for _, u, w in red_edges]
    black_segs = [Segment(u.pos, w.pos) for _, u, w in black_edges]

    pairs = [(i, j) for i in range(len(red_segs)) for j in range(len(black_segs))]
    if reverse_order:
        pairs.reverse()
    for i, j in pairs:
        hit = intersect_segments(red_segs[i], black_segs[j])
        if hit.kind is IntersectionKind.EMPTY:
            continue
        for p in hit.points():
            red_hits[i].add(p)
            black_hits[j].add(p)

    points = set()
    for edges, hits in ((red_edges, red_hits), (black_edges, black_hits)):
        for idx in sorted(hits):
            contour, u, w = edges[idx]
            ordered = sorted(hits[idx], key=lambda p: edge_parameter(u.pos, w.pos, p))
            for p in ordered:
                insert_vertex_on_edge(contour, (u, w), p)
                points.add(p)

    red_at = _vertices_by_position(clipper, points)
    black_at = _vertices_by_position(subject, points)
    records = []
    for p in sorted(points):
        reds, blacks = red_at[p], black_at[p]
        if len(reds) != 1 or len(blacks) != 1:
            who = "clipper" if len(reds) != 1 else "subject"
            raise SelfIntersectionAtRedBlackIntersection(
                f"{p!r} is a self-intersection of the {who} and also a "
                "clipper/subject intersection"
            )
        r, b = reds[0], blacks[0]
        r.link(b)
        records.append(IntersectionRecord(p, r, b))
    return records


def _vertices_by_position(polygon: Polygon, points) -> Dict[Point, List[Vertex]]:
    found = defaultdict(list)
    for v in polygon.vertices():
        if v.pos in points:
            found[v.pos].append(v)
    return found


def assert_completed(clipper: Polygon, subject: Polygon) -> bool:
    """True iff no arrow of one ring meets the other contour except at its own endpoints.

    Exactly coincident arrows (either direction) are allowed; every meeting
    point must be an intersection vertex of both rings.
    """
    red = [v for v in clipper.vertices()]
    black = [v for v in subject.vertices()]
    for r in red:
        ra = r.arrow()
        for b in black:
            ba = b.arrow()
            hit = intersect_segments(ra, ba)
            if hit.kind is IntersectionKind.EMPTY:
                continue
            if hit.kind is IntersectionKind.OVERLAP:
                if {ra.a, ra.b} != {ba.a, ba.b}:
                    return False
                continue
            p = hit.point
            if p not in (ra.a, ra.b) or p not in (ba.a, ba.b):
                return False
            rv = r if p == ra.a else r.next
            bv = b if p == ba.a else b.next
            if not (rv.is_intersection and bv.is_intersection):
                return False
    return True
