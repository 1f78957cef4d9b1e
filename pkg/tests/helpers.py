"""Hand-built configurations shared across the test modules.

``elementary_configuration`` constructs each closed-form density family
directly from segments and kinds, without touching the sampler or the
density code, so density tests compare two fully independent routes.
"""

from __future__ import annotations

from typing import Mapping

from bulletlab import (
    Configuration,
    ElementaryCase,
    Orientation,
    PointKind,
    Rect,
    Segment,
)


def vertical(x: float, lo: float, hi: float, k0: PointKind, k1: PointKind) -> Segment:
    return Segment(
        orientation=Orientation.VERTICAL, anchor=x, lo=lo, hi=hi, loKind=k0, hiKind=k1
    )


def horizontal(y: float, lo: float, hi: float, k0: PointKind, k1: PointKind) -> Segment:
    return Segment(
        orientation=Orientation.HORIZONTAL, anchor=y, lo=lo, hi=hi, loKind=k0, hiKind=k1
    )


def elementary_configuration(
    case: ElementaryCase, rect: Rect, coords: Mapping[str, float]
) -> Configuration:
    """Build the configuration a coordinate assignment describes."""
    x0, y0, x1, y1 = rect.x0, rect.y0, rect.x1, rect.y1
    x = coords.get("x")
    y = coords.get("y")
    yb = coords.get("yb")
    yt = coords.get("yt")
    K = PointKind

    if case is ElementaryCase.EMPTY:
        return Configuration(rect=rect)

    if case is ElementaryCase.LONE_VERTICAL:
        return Configuration(rect=rect, segments=(vertical(x, y0, y1, K.VE, K.VS),))

    if case is ElementaryCase.LONE_HORIZONTAL:
        return Configuration(rect=rect, segments=(horizontal(y, x0, x1, K.HE, K.HS),))

    if case is ElementaryCase.HORIZONTAL_DIES_ON_VERTICAL:
        return Configuration(
            rect=rect,
            segments=(
                vertical(x, y0, y1, K.VE, K.VS),
                horizontal(y, x0, x, K.HE, K.HA),
            ),
        )

    if case is ElementaryCase.HORIZONTAL_TURNS_UP:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x, K.HE, K.VT),
                vertical(x, y, y1, K.VT, K.VS),
            ),
        )

    if case is ElementaryCase.MUTUAL_ANNIHILATION:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x, K.HE, K.OA),
                vertical(x, y0, y, K.VE, K.OA),
            ),
        )

    if case is ElementaryCase.FULL_CROSSING:
        return Configuration(
            rect=rect,
            segments=(
                vertical(x, y0, y1, K.VE, K.VS),
                horizontal(y, x0, x1, K.HE, K.HS),
            ),
            crossings=((x, y),),
        )

    if case is ElementaryCase.VERTICAL_DIES_ON_HORIZONTAL:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x1, K.HE, K.HS),
                vertical(x, y0, y, K.VE, K.VA),
            ),
        )

    if case is ElementaryCase.BIRTH_THEN_ANNIHILATION:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x, K.HE, K.OA),
                vertical(x, yb, y, K.OB, K.OA),
                horizontal(yb, x, x1, K.OB, K.HS),
            ),
        )

    if case is ElementaryCase.TURN_BELOW_HORIZONTAL:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x1, K.HE, K.HS),
                vertical(x, y0, yt, K.VE, K.HT),
                horizontal(yt, x, x1, K.HT, K.HS),
            ),
        )

    if case is ElementaryCase.DOUBLE_TURN:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x, K.HE, K.VT),
                vertical(x, y, yt, K.VT, K.HT),
                horizontal(yt, x, x1, K.HT, K.HS),
            ),
        )

    if case is ElementaryCase.COALESCE_THEN_TURN:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x, K.HE, K.HA),
                vertical(x, y0, yt, K.VE, K.HT),
                horizontal(yt, x, x1, K.HT, K.HS),
            ),
        )

    if case is ElementaryCase.SPLIT_THEN_TURN:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x1, K.HE, K.HS),
                vertical(x, y, yt, K.VB, K.HT),
                horizontal(yt, x, x1, K.HT, K.HS),
            ),
        )

    if case is ElementaryCase.CROSS_THEN_TURN:
        return Configuration(
            rect=rect,
            segments=(
                horizontal(y, x0, x1, K.HE, K.HS),
                vertical(x, y0, yt, K.VE, K.HT),
                horizontal(yt, x, x1, K.HT, K.HS),
            ),
            crossings=((x, y),),
        )

    raise ValueError(f"unhandled case {case!r}")


def random_case_coords(case: ElementaryCase, rect: Rect, rng) -> dict[str, float]:
    """Draw interior coordinates satisfying the case's ordering constraints."""
    from bulletlab.density import CASE_COORDS

    def interior(lo: float, hi: float) -> float:
        return lo + (0.05 + 0.9 * rng.random()) * (hi - lo)

    keys = CASE_COORDS[case]
    coords: dict[str, float] = {}
    if "x" in keys:
        coords["x"] = interior(rect.x0, rect.x1)
    if "yb" in keys:
        # y0 < yb < y < y1
        a, b = sorted((interior(rect.y0, rect.y1), interior(rect.y0, rect.y1)))
        while a == b:
            b = interior(rect.y0, rect.y1)
            a, b = min(a, b), max(a, b)
        coords["yb"], coords["y"] = a, b
    elif "yt" in keys:
        a, b = sorted((interior(rect.y0, rect.y1), interior(rect.y0, rect.y1)))
        while a == b:
            b = interior(rect.y0, rect.y1)
            a, b = min(a, b), max(a, b)
        if case is ElementaryCase.TURN_BELOW_HORIZONTAL:
            coords["yt"], coords["y"] = a, b
        else:
            coords["y"], coords["yt"] = a, b
    elif "y" in keys:
        coords["y"] = interior(rect.y0, rect.y1)
    return coords
