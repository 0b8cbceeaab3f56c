"""En/ex flagging.

The production path flags each clipper intersection vertex from its own type
alone (``flag_clipper_rule``) and then derives subject flags from the linked
clipper flags (``flag_subject``). Two independent checks sit alongside it:
trial-based flagging (``group_trials`` + ``flag_by_rules_1_to_4``) and the
pair-mark sum over trial ends (``pair_mark_sum``).
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .classify import IntersectionType, LocationMark, OverlapSense
from .errors import IncompatibleEnds, MixedSenseWithinRun, RedFlagsNotSet
from .model import Contour, Hand, Polygon, Vertex, VertexFlag


class BooleanOp(Enum):
    INTERSECTION = "intersection"
    UNION = "union"
    DIFFERENCE = "difference"


EN, EX, NONE = VertexFlag.EN, VertexFlag.EX, VertexFlag.NONE


def flag_clipper_rule(v_type: IntersectionType, op: BooleanOp) -> VertexFlag:
    incoming, outgoing = v_type.base
    if op is BooleanOp.INTERSECTION:
        if incoming == "in" and outgoing in ("out", "on"):
            return EX
        if outgoing == "in" and incoming in ("out", "on"):
            return EN
        return NONE
    if op is BooleanOp.UNION:
        if outgoing == "out" and incoming in ("in", "on"):
            return EN
        if incoming == "out" and outgoing in ("in", "on"):
            return EX
        return NONE
    raise ValueError("difference is flagged as an intersection; see reduce_difference")


def flag_clipper(clipper: Polygon, op: BooleanOp) -> int:
    """Flag every classified clipper intersection vertex; returns the flag count."""
    count = 0
    for v in clipper.intersections():
        v.flag = flag_clipper_rule(v.itype, op)
        count += v.flag is not NONE
    return count


def derive_subject_flag(red_flag: VertexFlag, red_hand: Hand, black_hand: Hand) -> VertexFlag:
    if red_flag is NONE:
        return NONE
    same = red_hand is black_hand
    if red_flag is EN:
        return EX if same else EN
    return EN if same else EX


def derive_clipper_flag(black_flag: VertexFlag, red_hand: Hand, black_hand: Hand) -> VertexFlag:
    """Inverse of ``derive_subject_flag``."""
    # the mapping is its own inverse for a fixed pair of hands
    return derive_subject_flag(black_flag, red_hand, black_hand)


def flag_subject(clipper: Polygon, subject: Polygon):
    for b in subject.intersections():
        r = b.neighbor
        if r.itype is None or r.hand is None or b.hand is None:
            raise RedFlagsNotSet("classify and flag the clipper before the subject")
        b.flag = derive_subject_flag(r.flag, r.hand, b.hand)


def reverse_contour_points(points):
    return [points[0]] + points[:0:-1]


def reduce_difference(clipper: Polygon, subject: Polygon) -> Tuple[Polygon, Polygon, BooleanOp]:
    """subject minus clipper as subject intersected with the clipper's complement.

    Every clipper contour is reversed (flipping any declared hand) and the
    polygon is marked as a complement, so the reversed rings keep their region
    on the side their hand names.
    """
    from .model import build_contour

    contours = [
        build_contour(
            reverse_contour_points(c.original_points()),
            c.declared_hand.flipped() if c.declared_hand else None,
        )
        for c in clipper.contours
    ]
    flipped = Polygon(contours, role=clipper.role, rule=clipper.rule,
                      complement=not clipper.complement)
    return flipped, subject, BooleanOp.INTERSECTION


# -- trials ------------------------------------------------------------------


class TrialKind(Enum):
    IN_OUT = ("in", "out")
    OUT_IN = ("out", "in")
    IN_IN = ("in", "in")
    OUT_OUT = ("out", "out")
    CLOSED = ("on", "on")


@dataclass
class Trial:
    vertices: List[Vertex]
    kind: TrialKind
    sense: Optional[OverlapSense] = None

    @property
    def first(self) -> Vertex:
        return self.vertices[0]

    @property
    def last(self) -> Vertex:
        return self.vertices[-1]

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 1 and self.kind is not TrialKind.CLOSED

    def __str__(self):
        name = f"{self.kind.value[0]},{self.kind.value[1]}"
        if self.sense is not None:
            name += f" on_{self.sense.value}"
        return name


def _contour_trials(contour: Contour) -> List[Trial]:
    ring = list(contour)
    n = len(ring)
    is_on = [ring[i].itype is not None and ring[i].itype.outgoing.is_on for i in range(n)]
    trials = []
    if all(is_on):
        sense = ring[0].itype.outgoing.sense
        if any(v.itype.outgoing.sense is not sense for v in ring):
            raise MixedSenseWithinRun("overlap sense changes along a closed overlap")
        return [Trial(ring, TrialKind.CLOSED, sense)]
    # start scanning just after an arrow that is not "on"
    start = next(i for i in range(n) if not is_on[i]) + 1
    i = 0
    while i < n:
        v = ring[(start + i) % n]
        if not v.is_intersection:
            i += 1
            continue
        run = [v]
        sense = v.itype.outgoing.sense
        j = i
        while v.itype.outgoing.is_on:
            if v.itype.outgoing.sense is not sense:
                raise MixedSenseWithinRun(f"overlap sense changes at {v.pos!r}")
            j += 1
            v = ring[(start + j) % n]
            run.append(v)
        first_mark = run[0].itype.incoming
        last_mark = run[-1].itype.outgoing
        if first_mark.is_on or last_mark.is_on:
            raise MixedSenseWithinRun(f"overlap sense changes at {run[0].pos!r}")
        trials.append(Trial(run, TrialKind((first_mark.value, last_mark.value)), sense))
        i = j + 1
    return trials


def group_trials(clipper: Polygon) -> List[Trial]:
    """Maximal runs of intersection vertices joined by ``on`` arrows.

    An isolated intersection vertex is a one-vertex trial. A contour lying
    entirely on the other one forms a single ``CLOSED`` trial with no ends.
    """
    trials = []
    for contour in clipper.contours:
        if contour.intersections():
            trials.extend(_contour_trials(contour))
    return trials


def flag_by_rules_1_to_4(trials: List[Trial]) -> dict:
    """Flags from trial kinds alone; returns ``{id(vertex): flag}``."""
    flags = {}
    for t in trials:
        for v in t.vertices:
            flags[id(v)] = NONE
        if t.kind is TrialKind.IN_OUT:
            flags[id(t.first)] = EX
        elif t.kind is TrialKind.OUT_IN:
            flags[id(t.last)] = EN
        elif t.kind is TrialKind.IN_IN and not t.trivial:
            flags[id(t.first)] = EX
            flags[id(t.last)] = EN
    return flags


# -- pair marks ------------------------------------------------------------------


class Component(Enum):
    EN = "en"
    EX = "ex"
    ZERO = "0"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PairMark:
    left: Component
    right: Component
    sense: Optional[OverlapSense] = field(default=None, compare=False)

    def __str__(self):
        return f"({self.left},{self.right})"


ZERO_PAIR = PairMark(Component.ZERO, Component.ZERO)


def _component(flag: VertexFlag) -> Component:
    return {EN: Component.EN, EX: Component.EX, NONE: Component.ZERO}[flag]


def fundamental_mark(v_type: IntersectionType, as_first: bool) -> PairMark:
    """Pair mark of a trial end: its intersection flag in its own slot, zero elsewhere."""
    inc, out = v_type
    if as_first:
        if inc.is_on or not out.is_on:
            raise IncompatibleEnds(f"{v_type} cannot start a non-trivial trial")
        sense = out.sense
    else:
        if out.is_on or not inc.is_on:
            raise IncompatibleEnds(f"{v_type} cannot end a non-trivial trial")
        sense = inc.sense
    c = _component(flag_clipper_rule(v_type, BooleanOp.INTERSECTION))
    if as_first:
        return PairMark(c, Component.ZERO, sense)
    return PairMark(Component.ZERO, c, sense)


def pair_mark_sum(first_end: PairMark, last_end: PairMark) -> PairMark:
    if (
        first_end.sense is not None
        and last_end.sense is not None
        and first_end.sense is not last_end.sense
    ):
        raise IncompatibleEnds("trial ends overlap with different senses")

    def add(a: Component, b: Component) -> Component:
        if a is not Component.ZERO and b is not Component.ZERO:
            raise IncompatibleEnds(f"two flags in one slot: {a}, {b}")
        return b if a is Component.ZERO else a

    return PairMark(
        add(first_end.left, last_end.left),
        add(first_end.right, last_end.right),
        first_end.sense or last_end.sense,
    )


def trial_pair_mark(trial: Trial) -> PairMark:
    return pair_mark_sum(
        fundamental_mark(trial.first.itype, as_first=True),
        fundamental_mark(trial.last.itype, as_first=False),
    )


# -- checks ----------------------------------------------------------------------


def flags_alternate(contour: Contour) -> bool:
    flags = [v.flag for v in contour if v.flag is not NONE]
    if not flags:
        return True
    return len(flags) % 2 == 0 and all(
        flags[i] is not flags[(i + 1) % len(flags)] for i in range(len(flags))
    )


def flag_counts_match(contour: Contour) -> bool:
    flags = [v.flag for v in contour]
    return flags.count(EN) == flags.count(EX)
