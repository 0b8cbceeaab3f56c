"""JSON polygon and result files with exact coordinates."""
import json
from pathlib import Path
from typing import Optional, Tuple

from .errors import InvalidInput
from .geometry import format_scalar, point
from .model import Hand, Polygon, Role, Rule, build_contour
from .tracing import Origin, ResultEdge, ResultRegion


def _keep_text(s):
    return s


def parse_polygon(text: str, role: Role = Role.SUBJECT) -> Tuple[Polygon, Optional[Rule]]:
    """Parse a polygon document; returns the polygon and its declared rule, if any.

    Non-integer JSON numbers are kept as their literal text, so ``0.1`` is read
    as exactly 1/10.
    """
    try:
        doc = json.loads(text, parse_float=_keep_text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict) or "contours" not in doc:
        raise InvalidInput('expected an object with a "contours" list')
    hand = doc.get("hand")
    if hand not in (None, "left", "right"):
        raise InvalidInput(f'"hand" must be "left" or "right", got {hand!r}')
    rule = doc.get("rule")
    if rule not in (None, "nonzero", "evenodd"):
        raise InvalidInput(f'"rule" must be "nonzero" or "evenodd", got {rule!r}')
    rule = Rule(rule) if rule else None
    declared = Hand(hand) if hand else None
    contours = doc["contours"]
    if not isinstance(contours, list):
        raise InvalidInput('"contours" must be a list')
    built = []
    for ci, ring in enumerate(contours):
        if not isinstance(ring, list):
            raise InvalidInput(f"contour {ci}: expected a list of points")
        pts = []
        for vi, xy in enumerate(ring):
            if not (isinstance(xy, list) and len(xy) == 2):
                raise InvalidInput(f"contour {ci} vertex {vi}: expected [x, y]")
            try:
                pts.append(point(*xy))
            except InvalidInput as exc:
                raise InvalidInput(f"contour {ci} vertex {vi}: {exc}") from None
        try:
            built.append(build_contour(pts, declared))
        except InvalidInput as exc:
            raise type(exc)(f"contour {ci}: {exc}") from None
    if not built:
        raise InvalidInput("a polygon needs at least one contour")
    return Polygon(built, role=role, rule=rule or Rule.NONZERO), rule


def load_polygon(path, role: Role = Role.SUBJECT):
    return parse_polygon(Path(path).read_text(), role)


def polygon_document(contours, hand: Optional[Hand] = None, rule: Optional[Rule] = None) -> str:
    doc = {"contours": [[[format_scalar(p.x), format_scalar(p.y)] for p in r] for r in contours]}
    if hand is not None:
        doc["hand"] = hand.value
    if rule is not None:
        doc["rule"] = rule.value
    return json.dumps(doc, indent=2) + "\n"


def _xy(p):
    return [format_scalar(p.x), format_scalar(p.y)]


def result_document(region: ResultRegion, op) -> str:
    doc = {
        "op": getattr(op, "value", op),
        "contours": [
            {"edges": [{"from": _xy(e.start), "to": _xy(e.end), "origin": e.origin.value}
                       for e in c]}
            for c in region.contours
        ],
        "empty": region.empty,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_result(text: str) -> ResultRegion:
    doc = json.loads(text, parse_float=_keep_text)
    contours = []
    for c in doc["contours"]:
        contours.append([
            ResultEdge(point(*e["from"]), point(*e["to"]), Origin(e["origin"]))
            for e in c["edges"]
        ])
    return ResultRegion(contours)
