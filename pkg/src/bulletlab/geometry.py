"""Square symmetries acting on diagrams, skeletons and the diagram metric.

The eight symmetries of the square are represented by their integer
matrices.  Rotation is counterclockwise, so the quarter turn sends (x, y)
to (-y, x), and the generating reflection swaps the axes, (x, y) to
(y, x).  Acting on a diagram maps every segment and crossing through the
matrix and relabels endpoint kinds: a quarter turn, for instance, carries
a bottom-edge entry to a right-edge exit and an ex-nihilo creation to a
turn.  The relabeling tables below are keyed by the forward direction
(the kind a point of U acquires in g(U)); the permutation reported by
:func:`stats_map_under_symmetry` is its inverse, which is the direction
used when reading counts of g(U) off counts of U.

A skeleton is the combinatorial class of a configuration under strictly
increasing reparametrizations of each axis.  Because every coordinate in
a valid diagram is an anchor or an edge value, the class is pinned down by
anchor ranks: which horizontal (if any) each vertical endpoint attaches
to, the endpoint kinds, and the crossing incidences.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import (
    Configuration,
    Orientation,
    PointKind,
    Rect,
    Segment,
    validate_configuration,
)


class SymmetryElement(str, Enum):
    ID = "id"
    PI2 = "pi2"  # quarter turn counterclockwise
    PI = "pi"  # half turn
    PI32 = "pi32"  # three-quarter turn
    R = "r"  # reflection across the diagonal, (x, y) -> (y, x)
    RPI2 = "rpi2"  # r after the quarter turn: (x, y) -> (x, -y)
    RPI = "rpi"  # r after the half turn: (x, y) -> (-y, -x)
    RPI32 = "rpi32"  # r after the three-quarter turn: (x, y) -> (-x, y)


Matrix = tuple[tuple[int, int], tuple[int, int]]

_MATRICES: dict[SymmetryElement, Matrix] = {
    SymmetryElement.ID: ((1, 0), (0, 1)),
    SymmetryElement.PI2: ((0, -1), (1, 0)),
    SymmetryElement.PI: ((-1, 0), (0, -1)),
    SymmetryElement.PI32: ((0, 1), (-1, 0)),
    SymmetryElement.R: ((0, 1), (1, 0)),
    SymmetryElement.RPI2: ((1, 0), (0, -1)),
    SymmetryElement.RPI: ((0, -1), (-1, 0)),
    SymmetryElement.RPI32: ((-1, 0), (0, 1)),
}

_BY_MATRIX = {matrix: element for element, matrix in _MATRICES.items()}


def matrix_of(g: SymmetryElement) -> Matrix:
    return _MATRICES[g]


def compose(g2: SymmetryElement, g1: SymmetryElement) -> SymmetryElement:
    """The element acting as g2 after g1."""
    (a, b), (c, d) = _MATRICES[g2]
    (e, f), (p, q) = _MATRICES[g1]
    return _BY_MATRIX[((a * e + b * p, a * f + b * q), (c * e + d * p, c * f + d * q))]


def inverse(g: SymmetryElement) -> SymmetryElement:
    (a, b), (c, d) = _MATRICES[g]
    return _BY_MATRIX[((a, c), (b, d))]


def swaps_orientation(g: SymmetryElement) -> bool:
    """Whether g turns verticals into horizontals and vice versa."""
    return _MATRICES[g][0][0] == 0


def map_point(g: SymmetryElement, x: float, y: float) -> tuple[float, float]:
    (a, b), (c, d) = _MATRICES[g]
    return (a * x + b * y, c * x + d * y)


def map_rect(g: SymmetryElement, rect: Rect) -> Rect:
    xs = []
    ys = []
    for cx, cy in rect.corners():
        px, py = map_point(g, cx, cy)
        xs.append(px)
        ys.append(py)
    return Rect(x0=min(xs), y0=min(ys), x1=max(xs), y1=max(ys))


def _involution(pairs: list[tuple[PointKind, PointKind]]) -> dict[PointKind, PointKind]:
    table = {kind: kind for kind in PointKind}
    for a, b in pairs:
        table[a] = b
        table[b] = a
    return table


# Forward relabeling for the half turn: starts become ends of the same
# orientation, so creations pair with annihilations and the two turn kinds
# trade places.
_FORWARD_PI = _involution(
    [
        (PointKind.VE, PointKind.VS),
        (PointKind.HE, PointKind.HS),
        (PointKind.OB, PointKind.OA),
        (PointKind.VB, PointKind.VA),
        (PointKind.HB, PointKind.HA),
        (PointKind.VT, PointKind.HT),
    ]
)

# Forward relabeling for the quarter turn.  A vertical becomes a
# horizontal traversed in reverse, a horizontal becomes a vertical
# traversed forward; chasing each endpoint through that recipe gives the
# twelve images below.
_FORWARD_PI2 = {
    PointKind.VE: PointKind.HS,
    PointKind.VS: PointKind.HE,
    PointKind.HE: PointKind.VE,
    PointKind.HS: PointKind.VS,
    PointKind.OB: PointKind.VT,
    PointKind.OA: PointKind.HT,
    PointKind.VB: PointKind.HA,
    PointKind.HB: PointKind.VB,
    PointKind.VT: PointKind.OA,
    PointKind.HT: PointKind.OB,
    PointKind.VA: PointKind.HB,
    PointKind.HA: PointKind.VA,
    PointKind.CC: PointKind.CC,
}

# The diagonal reflection swaps the two orientations' roles and fixes the
# symmetric kinds.
_FORWARD_R = _involution(
    [
        (PointKind.VE, PointKind.HE),
        (PointKind.VS, PointKind.HS),
        (PointKind.VB, PointKind.HB),
        (PointKind.VT, PointKind.HT),
        (PointKind.VA, PointKind.HA),
    ]
)


def _chain(
    outer: dict[PointKind, PointKind], inner: dict[PointKind, PointKind]
) -> dict[PointKind, PointKind]:
    return {kind: outer[inner[kind]] for kind in PointKind}


_FORWARD: dict[SymmetryElement, dict[PointKind, PointKind]] = {
    SymmetryElement.ID: {kind: kind for kind in PointKind},
    SymmetryElement.PI: _FORWARD_PI,
    SymmetryElement.PI2: _FORWARD_PI2,
    SymmetryElement.R: _FORWARD_R,
    SymmetryElement.PI32: _chain(_FORWARD_PI2, _FORWARD_PI),
    SymmetryElement.RPI: _chain(_FORWARD_R, _FORWARD_PI),
    SymmetryElement.RPI2: _chain(_FORWARD_R, _FORWARD_PI2),
    SymmetryElement.RPI32: _chain(_FORWARD_R, _chain(_FORWARD_PI2, _FORWARD_PI)),
}


def forward_kind_map(g: SymmetryElement) -> dict[PointKind, PointKind]:
    """Kind acquired in g(U) by a point of U of each kind."""
    return dict(_FORWARD[g])


def stats_map_under_symmetry(g: SymmetryElement) -> dict[PointKind, PointKind]:
    """Permutation P with count(g(U), k) = count(U, P(k)) for all kinds k."""
    return {image: kind for kind, image in _FORWARD[g].items()}


def apply_symmetry(g: SymmetryElement, config: Configuration) -> Configuration:
    """The image configuration of ``config`` under the symmetry ``g``."""
    relabel = _FORWARD[g]
    swap = swaps_orientation(g)
    segments: list[Segment] = []
    for seg in config.segments:
        lo_pt = map_point(g, *seg.lo_point())
        hi_pt = map_point(g, *seg.hi_point())
        if swap:
            orientation = (
                Orientation.HORIZONTAL
                if seg.orientation is Orientation.VERTICAL
                else Orientation.VERTICAL
            )
        else:
            orientation = seg.orientation
        axis = 1 if orientation is Orientation.VERTICAL else 0
        anchor = lo_pt[1 - axis]
        ends = (
            (lo_pt[axis], seg.loKind, hi_pt[axis], seg.hiKind)
            if lo_pt[axis] < hi_pt[axis]
            else (hi_pt[axis], seg.hiKind, lo_pt[axis], seg.loKind)
        )
        segments.append(
            Segment(
                orientation=orientation,
                anchor=anchor,
                lo=ends[0],
                hi=ends[2],
                loKind=relabel[ends[1]],
                hiKind=relabel[ends[3]],
            )
        )
    crossings = tuple(map_point(g, x, y) for x, y in config.crossings)
    return Configuration(
        rect=map_rect(g, config.rect), segments=tuple(segments), crossings=crossings
    )


EDGE_REF = -1  # endpoint sits on the rectangle edge instead of a segment


@dataclass(frozen=True)
class SkeletonSegment:
    """Combinatorial record of one segment: what each endpoint attaches to.

    ``loRef``/``hiRef`` hold :data:`EDGE_REF` for an edge endpoint and
    otherwise the anchor rank of the opposite-orientation segment carrying
    the endpoint.
    """

    loRef: int
    loKind: PointKind
    hiRef: int
    hiKind: PointKind


@dataclass(frozen=True)
class Skeleton:
    n: int
    m: int
    verticals: tuple[SkeletonSegment, ...]
    horizontals: tuple[SkeletonSegment, ...]
    crossings: tuple[tuple[int, int], ...]


def skeleton_of(config: Configuration) -> Skeleton:
    """Extract the combinatorial skeleton of a valid configuration."""
    violations = validate_configuration(config)
    if violations:
        raise ValueError("invalid configuration: " + "; ".join(violations))
    rect = config.rect
    verticals = config.verticals
    horizontals = config.horizontals
    vrank = {seg.anchor: i for i, seg in enumerate(verticals)}
    hrank = {seg.anchor: j for j, seg in enumerate(horizontals)}

    def encode(
        segs: tuple[Segment, ...],
        edge_lo: float,
        edge_hi: float,
        ranks: dict[float, int],
    ) -> tuple[SkeletonSegment, ...]:
        out = []
        for seg in segs:
            lo_ref = EDGE_REF if seg.lo == edge_lo else ranks[seg.lo]
            hi_ref = EDGE_REF if seg.hi == edge_hi else ranks[seg.hi]
            out.append(
                SkeletonSegment(
                    loRef=lo_ref, loKind=seg.loKind, hiRef=hi_ref, hiKind=seg.hiKind
                )
            )
        return tuple(out)

    return Skeleton(
        n=len(verticals),
        m=len(horizontals),
        verticals=encode(verticals, rect.y0, rect.y1, hrank),
        horizontals=encode(horizontals, rect.x0, rect.x1, vrank),
        crossings=tuple(
            sorted((vrank[x], hrank[y]) for x, y in config.crossings)
        ),
    )


def canonical_configuration(skel: Skeleton, rect: Rect) -> Configuration:
    """Rebuild a configuration from a skeleton with evenly spaced anchors.

    Vertical anchors sit at x0 + (i+1) * width / (n+1) and horizontal
    anchors at y0 + (j+1) * height / (m+1); every attachment coordinate is
    then forced by the skeleton's references.
    """
    xs = [rect.x0 + (i + 1) * rect.width / (skel.n + 1) for i in range(skel.n)]
    ys = [rect.y0 + (j + 1) * rect.height / (skel.m + 1) for j in range(skel.m)]
    segments: list[Segment] = []
    for i, rec in enumerate(skel.verticals):
        segments.append(
            Segment(
                orientation=Orientation.VERTICAL,
                anchor=xs[i],
                lo=rect.y0 if rec.loRef == EDGE_REF else ys[rec.loRef],
                hi=rect.y1 if rec.hiRef == EDGE_REF else ys[rec.hiRef],
                loKind=rec.loKind,
                hiKind=rec.hiKind,
            )
        )
    for j, rec in enumerate(skel.horizontals):
        segments.append(
            Segment(
                orientation=Orientation.HORIZONTAL,
                anchor=ys[j],
                lo=rect.x0 if rec.loRef == EDGE_REF else xs[rec.loRef],
                hi=rect.x1 if rec.hiRef == EDGE_REF else xs[rec.hiRef],
                loKind=rec.loKind,
                hiKind=rec.hiKind,
            )
        )
    crossings = tuple((xs[i], ys[j]) for i, j in skel.crossings)
    return Configuration(rect=rect, segments=tuple(segments), crossings=crossings)


def config_distance(config: Configuration, other: Configuration) -> float:
    """Distance between two diagrams on the same rectangle.

    Diagrams with different skeletons are at distance 3.  Within a
    skeleton class the distance is the mean normalized anchor displacement,
    averaged separately over verticals and horizontals.
    """
    if config.rect != other.rect:
        raise ValueError("configurations live on different rectangles")
    if skeleton_of(config) != skeleton_of(other):
        return 3.0
    rect = config.rect
    total = 0.0
    va, vb = config.verticals, other.verticals
    if va:
        total += sum(abs(a.anchor - b.anchor) for a, b in zip(va, vb)) / (
            len(va) * rect.width
        )
    ha, hb = config.horizontals, other.horizontals
    if ha:
        total += sum(abs(a.anchor - b.anchor) for a, b in zip(ha, hb)) / (
            len(ha) * rect.height
        )
    return total
