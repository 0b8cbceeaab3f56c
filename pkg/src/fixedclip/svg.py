"""SVG plots: clipper red, subject black, result cyan, flags as labelled dots.

Clipper arrows lying on subject arrows are drawn as a slightly offset
parallel so both colours stay visible. The offset is display-only.
"""
from xml.sax.saxutils import escape

from .model import VertexFlag

SIZE = 600
MARGIN = 40


def _bounds(polygons):
    xs = [float(v.pos.x) for p in polygons for v in p.vertices()]
    ys = [float(v.pos.y) for p in polygons for v in p.vertices()]
    return min(xs), min(ys), max(xs), max(ys)


class _Frame:
    def __init__(self, bounds):
        x0, y0, x1, y1 = bounds
        span = max(x1 - x0, y1 - y0) or 1.0
        self.k = (SIZE - 2 * MARGIN) / span
        self.x0, self.y1 = x0, y1

    def __call__(self, p):
        # y axis points up
        return (MARGIN + (float(p.x) - self.x0) * self.k,
                MARGIN + (self.y1 - float(p.y)) * self.k)


def _f(v):
    return f"{v:.2f}"


def render(run, offset: float = 3.0) -> str:
    """SVG text for a ``ClipRun``: inputs after completion, flags, and the result."""
    red, black = run.clipper, run.subject
    to = _Frame(_bounds([red, black]))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(run.op.value)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if not run.result.empty:
        d = []
        for c in run.result.contours:
            pts = [to(e.start) for e in c]
            d.append("M" + " L".join(f"{_f(x)},{_f(y)}" for x, y in pts) + " Z")
        out.append(
            f'<path class="result" d="{" ".join(d)}" fill="cyan" fill-opacity="0.6" '
            'fill-rule="nonzero" stroke="none"/>'
        )
    black_arrows = {(v.pos, v.next.pos) for v in black.vertices()}
    black_arrows |= {(b, a) for a, b in black_arrows}
    for poly, colour, cls in ((black, "black", "subject-edge"), (red, "red", "clipper-edge")):
        for v in poly.vertices():
            (x1, y1), (x2, y2) = to(v.pos), to(v.next.pos)
            if poly is red and (v.pos, v.next.pos) in black_arrows:
                dx, dy = x2 - x1, y2 - y1
                n = (dx * dx + dy * dy) ** 0.5
                # shift to the screen-left of the arrow
                x1, y1 = x1 + dy / n * offset, y1 - dx / n * offset
                x2, y2 = x2 + dy / n * offset, y2 - dx / n * offset
            out.append(
                f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" '
                f'y2="{_f(y2)}" stroke="{colour}" stroke-width="1.5"/>'
            )
    for poly, colour, dy in ((red, "red", -8), (black, "black", 16)):
        for v in poly.intersections():
            if v.flag is VertexFlag.NONE:
                continue
            x, y = to(v.pos)
            out.append(
                f'<circle class="flag" data-ring="{poly.role.value}" data-flag="{v.flag}" '
                f'cx="{_f(x)}" cy="{_f(y)}" r="3.5" fill="{colour}"/>'
            )
            out.append(
                f'<text x="{_f(x + 5)}" y="{_f(y + dy)}" font-size="12" '
                f'fill="{colour}">{v.flag}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
