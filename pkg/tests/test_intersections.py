import random

import pytest

from fixedclip.corpus import scope_violation_cases
from fixedclip.errors import SelfIntersectionAtRedBlackIntersection
from fixedclip.geometry import lerp, point, scalar
from fixedclip.intersections import assert_completed, find_and_insert_intersections
from fixedclip.model import Polygon, Role

from conftest import polygon, rect


def run(red_pts, black_pts):
    red = polygon(red_pts, role=Role.CLIPPER)
    black = polygon(black_pts)
    return red, black, find_and_insert_intersections(red, black)


def positions(records):
    return sorted(r.point for r in records)


def test_shifted_squares():
    half = scalar("0.5")
    _, _, recs = run(rect(0, 0, 1, 1), rect(half, half, 1 + half, 1 + half))
    assert positions(recs) == sorted([point(1, "0.5"), point("0.5", 1)])


def test_shared_edge_squares():
    red, black, recs = run(rect(1, 0, 2, 1), rect(0, 0, 1, 1))
    assert positions(recs) == [point(1, 0), point(1, 1)]
    assert assert_completed(red, black)
    for r in recs:
        assert r.red_vertex.neighbor is r.black_vertex
        assert r.black_vertex.neighbor is r.red_vertex
        assert r.red_vertex.pos == r.black_vertex.pos == r.point


def test_identical_squares():
    red, black, recs = run(rect(0, 0, 1, 1), rect(0, 0, 1, 1))
    assert positions(recs) == sorted(rect(0, 0, 1, 1))
    assert all(v.is_intersection for v in red.vertices())
    assert all(v.is_intersection for v in black.vertices())


def test_overlap_gets_common_refinement():
    # red edge y=0 from 0 to 4 covers black vertices at x=1 and x=3
    red, black, recs = run(rect(0, -1, 4, 0, ccw=False), rect(1, 0, 3, 2))
    assert positions(recs) == [point(1, 0), point(3, 0)]
    assert assert_completed(red, black)


def test_assert_completed_before_and_after():
    red = polygon(rect(1, 0, 2, 1), role=Role.CLIPPER)
    black = polygon(rect(0, 0, 1, 2))
    assert not assert_completed(red, black)
    find_and_insert_intersections(red, black)
    assert assert_completed(red, black)

    red = polygon(rect(5, 5, 6, 6), role=Role.CLIPPER)
    black = polygon(rect(0, 0, 1, 1))
    assert assert_completed(red, black)


def test_idempotent():
    red, black, recs = run(rect(0, 0, 2, 2), rect(1, 0, 3, 1))
    before = (len(list(red.vertices())), len(list(black.vertices())))
    again = find_and_insert_intersections(red, black)
    assert (len(list(red.vertices())), len(list(black.vertices()))) == before
    assert positions(again) == positions(recs)


def test_reverse_pair_order_same_rings(corpus):
    for case in corpus[:40]:
        out = []
        for rev in (False, True):
            red, black = case.polygons()
            red.role = Role.CLIPPER
            find_and_insert_intersections(red, black, reverse_order=rev)
            out.append(([c.points() for c in red.contours], [c.points() for c in black.contours]))
        assert out[0] == out[1], case.name


def _split_edges(contours, rng):
    out = []
    for ring in contours:
        new = []
        for i, p in enumerate(ring):
            new.append(p)
            if rng.random() < 0.4:
                q = ring[(i + 1) % len(ring)]
                new.append(lerp(p, q, scalar(rng.randint(1, 3)) / 4))
        out.append(new)
    return out


def _link_map(records):
    return sorted(
        (r.point, r.red_vertex.next.pos == r.black_vertex.next.pos) for r in records
    )


def test_segmentation_invariance(corpus):
    rng = random.Random(5)
    for case in corpus[:60]:
        red, black = case.polygons()
        base = positions(find_and_insert_intersections(red, black))
        red_split = Polygon.from_points(_split_edges(case.clipper, rng), role=Role.CLIPPER)
        black_split = Polygon.from_points(_split_edges(case.subject, rng))
        recs = find_and_insert_intersections(red_split, black_split)
        # the only new meeting points are split points inside an overlap
        assert set(base) <= set(positions(recs)), case.name
        black_arrows = {(v.pos, v.next.pos) for v in black_split.vertices()}
        black_arrows |= {(b, a) for a, b in black_arrows}
        for r in recs:
            assert r.red_vertex.neighbor is r.black_vertex
            if r.point in base:
                continue
            assert not _is_original(r.point, case), case.name
            v = r.red_vertex
            assert (v.prev.pos, v.pos) in black_arrows and (v.pos, v.next.pos) in black_arrows


def _is_original(p, case):
    return any(p in ring for ring in case.clipper + case.subject)


def test_count_property(corpus):
    for case in corpus:
        red, black = case.polygons()
        recs = find_and_insert_intersections(red, black)
        assert len(red.intersections()) == len(black.intersections()) == len(recs)
        assert assert_completed(red, black), case.name


def test_scope_cases_raise():
    for case in scope_violation_cases():
        red, black = case.polygons()
        with pytest.raises(SelfIntersectionAtRedBlackIntersection):
            find_and_insert_intersections(red, black)
