"""Static SVG rendering of fronts.

Each event occupies one column; strands move between live positions on
cubic Béziers with horizontal tangents, so cusps come out as horizontal
tangencies. At a crossing the strand descending in the picture (lower
slope) is redrawn over a white halo.
"""

from pathlib import Path

import svgwrite
from svgpathtools import CubicBezier, Path as SvgPath

from .models import EventKind, FrontDiagram
from .ruling import FrontAnalysis, analyze

COLUMN = 40.0
ROW = 24.0
MARGIN = 20.0


def _point(x: float, position: float) -> complex:
    return complex(MARGIN + x, MARGIN + position * ROW)


def _segment(x0: float, y0: float, x1: float, y1: float) -> CubicBezier:
    """Smooth step from (x0, y0) to (x1, y1) with horizontal end tangents."""
    start, end = _point(x0, y0), _point(x1, y1)
    half = (x1 - x0) / 2
    return CubicBezier(start, start + half, end - half, end)


def _strand_segments(
    f: FrontDiagram, analysis: FrontAnalysis
) -> dict[int, list[CubicBezier]]:
    segments: dict[int, list[CubicBezier]] = {}
    for t, event in enumerate(f.events):
        before, after = analysis.live[t], analysis.live[t + 1]
        x0, x1 = t * COLUMN, (t + 1) * COLUMN
        k = event.position - 1
        for strand in set(before) | set(after):
            if strand in before and strand in after:
                y0, y1 = before.index(strand), after.index(strand)
            elif strand in after:
                y0, y1 = k + 0.5, after.index(strand)
            else:
                y0, y1 = before.index(strand), k + 0.5
            segments.setdefault(strand, []).append(_segment(x0, y0, x1, y1))
    return segments


def render_svg(f: FrontDiagram) -> str:
    """SVG document for a closed front.

    Elements carry classes "strand", "cusp", "crossing" and "arrow" so the
    figure can be styled or inspected. The empty front yields an empty
    document.
    """
    if not f.events:
        return svgwrite.Drawing(size=(0, 0)).tostring()

    analysis = analyze(f)
    height = max((len(live) for live in analysis.live), default=0)
    width = len(f.events) * COLUMN + 2 * MARGIN
    dwg = svgwrite.Drawing(size=(width, height * ROW + 2 * MARGIN))

    strands = dwg.g(class_="strands", fill="none", stroke="black", stroke_width=1.5)
    segments = _strand_segments(f, analysis)
    for strand in sorted(segments):
        path = SvgPath(*segments[strand])
        strands.add(dwg.path(d=path.d(), class_="strand"))
    dwg.add(strands)

    crossings = dwg.g(class_="crossings", fill="none")
    cusps = dwg.g(class_="cusps", fill="black")
    for t, event in enumerate(f.events):
        k = event.position - 1
        x0, x1 = t * COLUMN, (t + 1) * COLUMN
        if event.kind is EventKind.CROSS:
            # the strand entering at the top descends: lower slope, drawn over
            over = SvgPath(_segment(x0, k, x1, k + 1)).d()
            group = dwg.g(class_="crossing")
            group.add(dwg.path(d=over, stroke="white", stroke_width=5))
            group.add(dwg.path(d=over, stroke="black", stroke_width=1.5))
            crossings.add(group)
        else:
            x = x0 if event.kind is EventKind.BIRTH else x1
            centre = _point(x, k + 0.5)
            cusps.add(
                dwg.circle(center=(centre.real, centre.imag), r=1.5, class_="cusp")
            )
    dwg.add(crossings)
    dwg.add(cusps)

    arrows = dwg.g(class_="arrows", fill="black")
    for strand, pieces in sorted(segments.items()):
        middle = pieces[len(pieces) // 2]
        tip = middle.point(0.5)
        step = 4.0 * analysis.direction[strand]
        head = (
            f"M {tip.real + step},{tip.imag} "
            f"L {tip.real - step},{tip.imag - 3} "
            f"L {tip.real - step},{tip.imag + 3} Z"
        )
        arrows.add(dwg.path(d=head, class_="arrow"))
    dwg.add(arrows)

    return dwg.tostring()


def write_svg(f: FrontDiagram, out: str | Path) -> Path:
    """Render f and write it to out."""
    out = Path(out)
    out.write_text(render_svg(f), encoding="utf-8")
    return out
