import sys

import pytest
from hypothesis import settings

from fixedclip.classify import classify_polygon
from fixedclip.geometry import point
from fixedclip.intersections import find_and_insert_intersections
from fixedclip.model import Polygon, Role, contour_hand

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def rect(x0, y0, x1, y1, ccw=True):
    pts = [point(x0, y0), point(x1, y0), point(x1, y1), point(x0, y1)]
    return pts if ccw else pts[::-1]


def pts(*xy):
    return [point(x, y) for x, y in xy]


def polygon(*contours, role=Role.SUBJECT, hands=None):
    return Polygon.from_points(list(contours), role=role, hands=hands)


def completed(red_contours, black_contours, red_hands=None, black_hands=None):
    """Both rings after phase 1 and classification."""
    red = Polygon.from_points(red_contours, role=Role.CLIPPER, hands=red_hands)
    black = Polygon.from_points(black_contours, role=Role.SUBJECT, hands=black_hands)
    records = find_and_insert_intersections(red, black)
    for c in red.contours + black.contours:
        contour_hand(c)
    classify_polygon(red, black)
    classify_polygon(black, red)
    return red, black, records


def vertex_at(polygon, x, y):
    p = point(x, y)
    found = [v for v in polygon.vertices() if v.pos == p]
    assert len(found) == 1, f"expected one vertex at {p!r}, found {found}"
    return found[0]


@pytest.fixture(scope="session")
def corpus():
    from fixedclip.corpus import generate_pairs

    return generate_pairs(200, seed=1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
