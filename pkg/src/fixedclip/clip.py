"""The whole pipeline: complete, classify, flag, trace."""
from dataclasses import dataclass
from typing import List, Optional

from .classify import classify_polygon
from .intersections import IntersectionRecord, find_and_insert_intersections
from .marking import BooleanOp, flag_clipper, flag_subject, reduce_difference
from .model import Polygon, Role, Rule, contour_hand
from .tracing import ResultRegion, canonicalize, simplify, trace


@dataclass
class ClipRun:
    op: BooleanOp
    clipper: Polygon  # completed and flagged working copies
    subject: Polygon
    records: List[IntersectionRecord]
    result: ResultRegion


def run_boolean(
    clipper: Polygon,
    subject: Polygon,
    op: BooleanOp,
    rule: Optional[Rule] = None,
    reverse_pairs: bool = False,
) -> ClipRun:
    """Run one boolean operation on working copies of the inputs.

    ``difference`` is subject minus clipper.
    """
    red, black = clipper.copy(), subject.copy()
    red.role, black.role = Role.CLIPPER, Role.SUBJECT
    if rule is not None:
        red.rule = black.rule = rule
    flag_op = op
    if op is BooleanOp.DIFFERENCE:
        red, black, flag_op = reduce_difference(red, black)
    records = find_and_insert_intersections(red, black, reverse_order=reverse_pairs)
    for c in red.contours + black.contours:
        contour_hand(c)
    classify_polygon(red, black)
    classify_polygon(black, red)
    flag_clipper(red, flag_op)
    flag_subject(red, black)
    result = canonicalize(trace(red, black, flag_op))
    return ClipRun(op, red, black, records, result)


def boolean(
    clipper: Polygon,
    subject: Polygon,
    op: BooleanOp,
    rule: Optional[Rule] = None,
    simplified: bool = False,
) -> ResultRegion:
    result = run_boolean(clipper, subject, op, rule).result
    return simplify(result) if simplified else result


def intersection(clipper, subject, **kw) -> ResultRegion:
    return boolean(clipper, subject, BooleanOp.INTERSECTION, **kw)


def union(clipper, subject, **kw) -> ResultRegion:
    return boolean(clipper, subject, BooleanOp.UNION, **kw)


def difference(clipper, subject, **kw) -> ResultRegion:
    """subject minus clipper."""
    return boolean(clipper, subject, BooleanOp.DIFFERENCE, **kw)
