"""Render a diagram to SVG for eyeballing.

Verticals are drawn in blue, horizontals in red, the rectangle as a thin
frame.  Interior births (OB, VB, HB and the two turn kinds) get filled
dots, interior deaths (OA, VA, HA) get open dots; edge entries and exits
are left bare.  The y axis is flipped so that up in the model is up on
the screen.  Output is a deterministic function of the configuration.
"""

from __future__ import annotations

from .model import Configuration, Orientation, PointKind

_FILLED_KINDS = frozenset(
    {PointKind.OB, PointKind.VB, PointKind.HB, PointKind.VT, PointKind.HT}
)
_OPEN_KINDS = frozenset({PointKind.OA, PointKind.VA, PointKind.HA})

_VERTICAL_COLOR = "#1f77b4"
_HORIZONTAL_COLOR = "#d62728"


def render_svg(config: Configuration, scale: float = 160.0, margin: float = 20.0) -> str:
    """Draw the configuration as an SVG document string."""
    if scale <= 0 or margin < 0:
        raise ValueError("need scale > 0 and margin >= 0")
    rect = config.rect
    width = rect.width * scale + 2 * margin
    height = rect.height * scale + 2 * margin

    def px(x: float) -> float:
        return margin + (x - rect.x0) * scale

    def py(y: float) -> float:
        return margin + (rect.y1 - y) * scale

    def fmt(value: float) -> str:
        return f"{value:.3f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(width)}" '
        f'height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f'<rect x="{fmt(px(rect.x0))}" y="{fmt(py(rect.y1))}" '
        f'width="{fmt(rect.width * scale)}" height="{fmt(rect.height * scale)}" '
        'fill="white" stroke="#444444" stroke-width="1"/>',
    ]

    dots: set[tuple[float, float, bool]] = set()
    for seg in config.segments:
        if seg.orientation is Orientation.VERTICAL:
            color = _VERTICAL_COLOR
            x1 = x2 = px(seg.anchor)
            y1, y2 = py(seg.lo), py(seg.hi)
        else:
            color = _HORIZONTAL_COLOR
            y1 = y2 = py(seg.anchor)
            x1, x2 = px(seg.lo), px(seg.hi)
        parts.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        for point, kind in ((seg.lo_point(), seg.loKind), (seg.hi_point(), seg.hiKind)):
            if kind in _FILLED_KINDS:
                dots.add((point[0], point[1], True))
            elif kind in _OPEN_KINDS:
                dots.add((point[0], point[1], False))

    for x, y, filled in sorted(dots):
        fill = "#222222" if filled else "white"
        parts.append(
            f'<circle cx="{fmt(px(x))}" cy="{fmt(py(y))}" r="3" '
            f'fill="{fill}" stroke="#222222" stroke-width="1"/>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
