"""Exception hierarchy.

The CLI maps these onto exit codes: ``InvalidInput`` -> 1, ``ScopeViolation``
-> 2, ``InternalInconsistency`` -> 4.
"""


class ClipError(Exception):
    pass


class InvalidInput(ClipError, ValueError):
    pass


class ZeroLengthSegment(InvalidInput):
    pass


class TooFewVertices(InvalidInput):
    pass


class DuplicateConsecutivePoint(InvalidInput):
    pass


class PointNotOnEdge(InvalidInput):
    pass


class DegenerateContour(InvalidInput):
    pass


class SelfIntersectingWithoutDeclaredHand(InvalidInput):
    pass


class ScopeViolation(ClipError):
    pass


class SelfIntersectionAtRedBlackIntersection(ScopeViolation):
    """A clipper/subject meeting point is also a self-intersection of one input."""


class NotABorder(ScopeViolation):
    """A contour does not separate interior from exterior next to an intersection."""


class InternalInconsistency(ClipError):
    pass


class ArrowCrossesOtherContour(InternalInconsistency):
    pass


class DegenerateArrowConfiguration(ClipError):
    pass


class MixedSenseWithinRun(InternalInconsistency):
    pass


class RedFlagsNotSet(InternalInconsistency):
    pass


class IncompatibleEnds(ClipError, ValueError):
    pass


class TraversalNotClosing(InternalInconsistency):
    pass
