import pytest
from hypothesis import given, strategies as st

from fixedclip.errors import (
    DuplicateConsecutivePoint,
    PointNotOnEdge,
    SelfIntersectingWithoutDeclaredHand,
    TooFewVertices,
)
from fixedclip.geometry import edge_parameter, point, scalar
from fixedclip.model import Hand, build_contour, contour_hand, insert_vertex_on_edge, is_simple

from conftest import pts, rect


def ring_ok(contour):
    verts = list(contour)
    n = len(verts)
    v = contour.head
    for _ in range(n):
        assert v.next.prev is v and v.prev.next is v
        v = v.next
    assert v is contour.head
    back = []
    v = contour.head
    for _ in range(n):
        back.append(v)
        v = v.prev
    assert back == [verts[0]] + verts[:0:-1]


def test_build_contour_square():
    c = build_contour(rect(0, 0, 1, 1))
    assert len(c) == 4
    ring_ok(c)
    assert contour_hand(c) is Hand.LEFT
    assert not any(v.is_intersection for v in c)


def test_build_contour_errors():
    with pytest.raises(TooFewVertices):
        build_contour(pts((0, 0), (1, 0)))
    with pytest.raises(DuplicateConsecutivePoint):
        build_contour(pts((0, 0), (0, 0), (1, 1)))
    # the closing edge counts too
    with pytest.raises(DuplicateConsecutivePoint):
        build_contour(pts((0, 0), (1, 0), (1, 1), (0, 0)))


def test_insert_examples():
    c = build_contour(pts((0, 0), (2, 0), (2, 2)))
    u = c.head
    w = u.next
    v = insert_vertex_on_edge(c, (u, w), point(1, 0))
    assert v.is_intersection and not v.original
    assert u.next is v and v.next is w
    ring_ok(c)

    again = insert_vertex_on_edge(c, (u, w), point(0, 0))
    assert again is u and u.is_intersection
    assert len(c) == 4

    with pytest.raises(PointNotOnEdge):
        insert_vertex_on_edge(c, (u, w), point(1, 1))


def test_insert_same_point_twice_is_one_vertex():
    c = build_contour(rect(0, 0, 2, 2))
    u = c.head
    w = u.next
    a = insert_vertex_on_edge(c, (u, w), point(1, 0))
    b = insert_vertex_on_edge(c, (u, w), point(1, 0))
    assert a is b and len(c) == 5


def test_contour_hand_examples():
    assert contour_hand(build_contour(rect(0, 0, 1, 1))) is Hand.LEFT
    assert contour_hand(build_contour(rect(0, 0, 1, 1, ccw=False))) is Hand.RIGHT
    eight = pts((0, 0), (2, 2), (2, 0), (0, 2))
    assert not is_simple(eight)
    with pytest.raises(SelfIntersectingWithoutDeclaredHand):
        contour_hand(build_contour(eight))
    assert contour_hand(build_contour(eight, Hand.RIGHT)) is Hand.RIGHT


def test_is_simple():
    assert is_simple(rect(0, 0, 1, 1))
    # pinch: one vertex visited twice
    assert not is_simple(pts((0, 0), (1, 1), (2, 0), (2, 2), (1, 1), (0, 2)))
    # spike back along an edge
    assert not is_simple(pts((0, 0), (2, 0), (1, 0), (1, 1)))


@given(st.lists(st.integers(1, 99), min_size=1, max_size=12), st.randoms())
def test_insertions_stay_ordered(numerators, rnd):
    c = build_contour(pts((0, 0), (4, 2), (0, 3)))
    u = c.head
    w = u.next
    params = list({scalar(n) / 100 for n in numerators})
    rnd.shuffle(params)
    for t in params:
        insert_vertex_on_edge(c, (u, w), point(4 * t, 2 * t))
    ring_ok(c)
    got = []
    v = u.next
    while v is not w:
        got.append(edge_parameter(u.pos, w.pos, v.pos))
        v = v.next
    assert got == sorted(params)
    assert all(a < b for a, b in zip(got, got[1:]))
