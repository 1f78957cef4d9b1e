"""Core domain types for bullet-model space-time diagrams.

A diagram on a rectangle is a finite family of vertical and horizontal
segments together with the points where a vertical and a horizontal cross.
Verticals grow upward and horizontals grow rightward, so every segment has
a well defined start (``lo``) and end (``hi``) along its moving axis.  Each
endpoint carries a :class:`PointKind` label that records the local event:
entering through an edge, being created, turning, splitting off a parent
line, or dying in a meeting.

Everything here is immutable and every operation is a pure function.
Validation reports rule violations as data instead of raising, so callers
can decide how strict to be; the counting and classification operations do
insist on a valid input and reject anything else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from enum import Enum, IntEnum

# Tolerance on the probability simplex constraint pV + pH + p0 <= 1.
PROB_SUM_TOL = 1e-12


class PointKind(IntEnum):
    VE = 0  # vertical entry through the bottom edge
    VS = 1  # vertical exit through the top edge
    HE = 2  # horizontal entry through the left edge
    HS = 3  # horizontal exit through the right edge
    OB = 4  # ex-nihilo creation: a vertical and a horizontal start together
    OA = 5  # mutual annihilation: a vertical and a horizontal die together
    VB = 6  # vertical born on the interior of a horizontal
    HB = 7  # horizontal born on the interior of a vertical
    VT = 8  # turn: a horizontal dies exactly where a vertical starts
    HT = 9  # turn: a vertical dies exactly where a horizontal starts
    VA = 10  # vertical dies on the interior of a horizontal
    HA = 11  # horizontal dies on the interior of a vertical
    CC = 12  # crossing: both lines continue through the meeting point


# Kinds admissible at each endpoint slot.  The four shared kinds (OB, OA,
# VT, HT) label one vertical endpoint and one horizontal endpoint at the
# same coordinates; statistics count them once, from the vertical side.
VERTICAL_LO_KINDS = frozenset(
    {PointKind.VE, PointKind.OB, PointKind.VB, PointKind.VT}
)
VERTICAL_HI_KINDS = frozenset(
    {PointKind.VS, PointKind.OA, PointKind.VA, PointKind.HT}
)
HORIZONTAL_LO_KINDS = frozenset(
    {PointKind.HE, PointKind.OB, PointKind.HB, PointKind.HT}
)
HORIZONTAL_HI_KINDS = frozenset(
    {PointKind.HS, PointKind.OA, PointKind.HA, PointKind.VT}
)
SHARED_KINDS = frozenset({PointKind.OB, PointKind.OA, PointKind.VT, PointKind.HT})


class Orientation(str, Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class Params:
    """The eight parameters of a bullet model.

    ``lambda0`` is the ex-nihilo creation rate per unit area.  ``lambdaV``
    and ``lambdaH`` are the split rates per unit length of a vertical
    (spawning a horizontal) and of a horizontal (spawning a vertical).
    ``tauV`` and ``tauH`` are the corresponding turn rates.  At a meeting
    of two lines the horizontal dies with probability ``pV``, the vertical
    dies with probability ``pH``, both die with probability ``p0`` and
    otherwise the lines cross.
    """

    lambda0: float
    lambdaV: float
    lambdaH: float
    tauV: float
    tauH: float
    pV: float
    pH: float
    p0: float

    def __post_init__(self) -> None:
        for name in ("lambda0", "lambdaV", "lambdaH", "tauV", "tauH"):
            value = getattr(self, name)
            if not (value >= 0.0) or math.isinf(value):
                raise ValueError(f"rate {name} must be finite and >= 0, got {value}")
        for name in ("pV", "pH", "p0"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"probability {name} must lie in [0, 1], got {value}")
        total = self.pV + self.pH + self.p0
        if total > 1.0 + PROB_SUM_TOL:
            raise ValueError(f"pV + pH + p0 must be <= 1, got {total}")

    @property
    def crossProb(self) -> float:
        """Probability that a meeting is a crossing, clamped at zero."""
        return max(0.0, 1.0 - self.pV - self.pH - self.p0)

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @classmethod
    def from_tuple(cls, values: tuple[float, ...]) -> "Params":
        if len(values) != 8:
            raise ValueError(f"expected 8 parameter values, got {len(values)}")
        return cls(*values)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle [x0, x1] x [y0, y1] with positive area."""

    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(
                f"degenerate rectangle ({self.x0},{self.y0},{self.x1},{self.y1})"
            )

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    def contains_rect(self, sub: "Rect") -> bool:
        return (
            self.x0 <= sub.x0
            and self.y0 <= sub.y0
            and sub.x1 <= self.x1
            and sub.y1 <= self.y1
        )

    def corners(self) -> tuple[tuple[float, float], ...]:
        return (
            (self.x0, self.y0),
            (self.x1, self.y0),
            (self.x0, self.y1),
            (self.x1, self.y1),
        )


@dataclass(frozen=True)
class Segment:
    """One vertical or horizontal segment of a diagram.

    ``anchor`` is the fixed coordinate (x for a vertical, y for a
    horizontal); ``lo`` and ``hi`` bound the extent along the moving axis.
    """

    orientation: Orientation
    anchor: float
    lo: float
    hi: float
    loKind: PointKind
    hiKind: PointKind

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"segment needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.orientation is Orientation.VERTICAL:
            lo_ok, hi_ok = VERTICAL_LO_KINDS, VERTICAL_HI_KINDS
        else:
            lo_ok, hi_ok = HORIZONTAL_LO_KINDS, HORIZONTAL_HI_KINDS
        if self.loKind not in lo_ok:
            raise ValueError(
                f"{self.loKind.name} cannot start a {self.orientation.value} segment"
            )
        if self.hiKind not in hi_ok:
            raise ValueError(
                f"{self.hiKind.name} cannot end a {self.orientation.value} segment"
            )

    @property
    def extent(self) -> float:
        return self.hi - self.lo

    def lo_point(self) -> tuple[float, float]:
        if self.orientation is Orientation.VERTICAL:
            return (self.anchor, self.lo)
        return (self.lo, self.anchor)

    def hi_point(self) -> tuple[float, float]:
        if self.orientation is Orientation.VERTICAL:
            return (self.anchor, self.hi)
        return (self.hi, self.anchor)


def _segment_sort_key(seg: Segment) -> tuple[int, float, float]:
    return (0 if seg.orientation is Orientation.VERTICAL else 1, seg.anchor, seg.lo)


@dataclass(frozen=True)
class Configuration:
    """A space-time diagram: rectangle, segments and crossing points.

    Segment order is normalized on construction (verticals first, then
    horizontals, each sorted by anchor) and crossings are sorted, so two
    configurations describing the same diagram compare equal.
    """

    rect: Rect
    segments: tuple[Segment, ...] = ()
    crossings: tuple[tuple[float, float], ...] = ()

    def __post_init__(self) -> None:
        segs = tuple(sorted(self.segments, key=_segment_sort_key))
        crosses = tuple(sorted((float(x), float(y)) for x, y in self.crossings))
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "crossings", crosses)

    @property
    def verticals(self) -> tuple[Segment, ...]:
        return tuple(
            s for s in self.segments if s.orientation is Orientation.VERTICAL
        )

    @property
    def horizontals(self) -> tuple[Segment, ...]:
        return tuple(
            s for s in self.segments if s.orientation is Orientation.HORIZONTAL
        )


@dataclass(frozen=True)
class ConfigStats:
    """Point-kind counts and total lengths of a configuration.

    ``n`` and ``m`` are the numbers of vertical and horizontal segments,
    ``LV`` and ``LH`` the summed extents.  The thirteen count fields are
    named after the :class:`PointKind` members they tally.
    """

    n: int
    m: int
    VE: int
    VS: int
    HE: int
    HS: int
    OB: int
    OA: int
    VB: int
    HB: int
    VT: int
    HT: int
    VA: int
    HA: int
    CC: int
    LV: float
    LH: float

    def count(self, kind: PointKind) -> int:
        return getattr(self, kind.name)

    def count_vector(self) -> tuple[int, ...]:
        """All integer fields in a fixed order, for hashing and comparison."""
        return (self.n, self.m) + tuple(self.count(k) for k in PointKind)

    def sepoints_residuals(self) -> tuple[int, int, int, int]:
        """The four endpoint-accounting identities, as left-minus-right.

        Horizontal starts and ends both tally ``m``; vertical starts and
        ends both tally ``n``.  All four residuals are zero on any valid
        configuration.
        """
        return (
            self.HE + self.HT + self.HB + self.OB - self.m,
            self.HS + self.OA + self.HA + self.VT - self.m,
            self.VE + self.VT + self.VB + self.OB - self.n,
            self.VS + self.OA + self.VA + self.HT - self.n,
        )


def validate_configuration(config: Configuration) -> list[str]:
    """Check the structural rules of a diagram; return violations as text.

    The rules: every segment lies inside the rectangle and touches no
    corner; no two same-orientation segments share an anchor; every
    vertical starts on the bottom edge or on a horizontal segment and ends
    on the top edge or on a horizontal segment (symmetrically for
    horizontals); every recorded crossing is interior to one vertical and
    one horizontal.  An empty list means the configuration is valid.
    """
    rect = config.rect
    violations: list[str] = []
    corners = set(rect.corners())

    verticals = config.verticals
    horizontals = config.horizontals

    for label, segs, a_lo, a_hi, m_lo, m_hi in (
        ("vertical", verticals, rect.x0, rect.x1, rect.y0, rect.y1),
        ("horizontal", horizontals, rect.y0, rect.y1, rect.x0, rect.x1),
    ):
        for seg in segs:
            if not (a_lo <= seg.anchor <= a_hi and m_lo <= seg.lo and seg.hi <= m_hi):
                violations.append(
                    f"{label} segment at anchor {seg.anchor} leaves the rectangle"
                )
            for point in (seg.lo_point(), seg.hi_point()):
                if point in corners:
                    violations.append(
                        f"{label} segment endpoint {point} sits on a corner"
                    )

    for label, segs in (("vertical", verticals), ("horizontal", horizontals)):
        seen: dict[float, int] = {}
        for seg in segs:
            seen[seg.anchor] = seen.get(seg.anchor, 0) + 1
        for anchor, count in seen.items():
            if count > 1:
                violations.append(
                    f"{count} {label} segments share the anchor {anchor}"
                )

    def on_horizontal(x: float, y: float) -> bool:
        return any(h.anchor == y and h.lo <= x <= h.hi for h in horizontals)

    def on_vertical(x: float, y: float) -> bool:
        return any(v.anchor == x and v.lo <= y <= v.hi for v in verticals)

    for seg in verticals:
        if seg.lo != rect.y0 and not on_horizontal(seg.anchor, seg.lo):
            violations.append(
                f"dangling endpoint: vertical at x={seg.anchor} starts at "
                f"y={seg.lo} off the bottom edge and off every horizontal"
            )
        if seg.hi != rect.y1 and not on_horizontal(seg.anchor, seg.hi):
            violations.append(
                f"dangling endpoint: vertical at x={seg.anchor} ends at "
                f"y={seg.hi} off the top edge and off every horizontal"
            )
    for seg in horizontals:
        if seg.lo != rect.x0 and not on_vertical(seg.lo, seg.anchor):
            violations.append(
                f"dangling endpoint: horizontal at y={seg.anchor} starts at "
                f"x={seg.lo} off the left edge and off every vertical"
            )
        if seg.hi != rect.x1 and not on_vertical(seg.hi, seg.anchor):
            violations.append(
                f"dangling endpoint: horizontal at y={seg.anchor} ends at "
                f"x={seg.hi} off the right edge and off every vertical"
            )

    for x, y in config.crossings:
        inside_v = any(v.anchor == x and v.lo < y < v.hi for v in verticals)
        inside_h = any(h.anchor == y and h.lo < x < h.hi for h in horizontals)
        if not (inside_v and inside_h):
            violations.append(f"crossing ({x}, {y}) is not interior to a pair")

    return violations


def _require_valid(config: Configuration) -> None:
    violations = validate_configuration(config)
    if violations:
        raise ValueError("invalid configuration: " + "; ".join(violations))


def extract_stats(config: Configuration) -> ConfigStats:
    """Tally point kinds and segment lengths of a valid configuration.

    Shared kinds (OB, OA, VT, HT) label an endpoint on both a vertical and
    a horizontal; they are counted from the vertical side only.
    """
    _require_valid(config)
    counts = [0] * len(PointKind)
    total_v = 0.0
    total_h = 0.0
    n = 0
    m = 0
    for seg in config.segments:
        if seg.orientation is Orientation.VERTICAL:
            n += 1
            total_v += seg.extent
            counts[seg.loKind] += 1
            counts[seg.hiKind] += 1
        else:
            m += 1
            total_h += seg.extent
            if seg.loKind not in SHARED_KINDS:
                counts[seg.loKind] += 1
            if seg.hiKind not in SHARED_KINDS:
                counts[seg.hiKind] += 1
    counts[PointKind.CC] = len(config.crossings)
    named = {kind.name: counts[kind] for kind in PointKind}
    return ConfigStats(n=n, m=m, LV=total_v, LH=total_h, **named)


def classify_points(
    config: Configuration,
) -> list[tuple[tuple[float, float], PointKind]]:
    """Reclassify every event point of a valid configuration from geometry.

    Endpoint labels stored on the segments are ignored; the kind of each
    point is recovered from which segments start, end or pass through it.
    Crossings are likewise recomputed by brute force.  The result is
    sorted by coordinates so it can be compared across code paths.  A
    point whose local geometry fits no kind raises ``ValueError``.
    """
    _require_valid(config)
    rect = config.rect
    verticals = config.verticals
    horizontals = config.horizontals

    flags: dict[tuple[float, float], list[bool]] = {}

    def flag(point: tuple[float, float], slot: int) -> None:
        entry = flags.setdefault(point, [False, False, False, False])
        entry[slot] = True

    for seg in verticals:
        flag(seg.lo_point(), 0)
        flag(seg.hi_point(), 1)
    for seg in horizontals:
        flag(seg.lo_point(), 2)
        flag(seg.hi_point(), 3)

    def inside_horizontal(x: float, y: float) -> bool:
        return any(h.anchor == y and h.lo < x < h.hi for h in horizontals)

    def inside_vertical(x: float, y: float) -> bool:
        return any(v.anchor == x and v.lo < y < v.hi for v in verticals)

    result: list[tuple[tuple[float, float], PointKind]] = []
    for point, (v_start, v_end, h_start, h_end) in flags.items():
        x, y = point
        kind: PointKind | None = None
        if v_start and h_start and not v_end and not h_end:
            kind = PointKind.OB
        elif v_end and h_end and not v_start and not h_start:
            kind = PointKind.OA
        elif v_start and h_end and not v_end and not h_start:
            kind = PointKind.VT
        elif v_end and h_start and not v_start and not h_end:
            kind = PointKind.HT
        elif v_start and not (v_end or h_start or h_end):
            if y == rect.y0:
                kind = PointKind.VE
            elif inside_horizontal(x, y):
                kind = PointKind.VB
        elif v_end and not (v_start or h_start or h_end):
            if y == rect.y1:
                kind = PointKind.VS
            elif inside_horizontal(x, y):
                kind = PointKind.VA
        elif h_start and not (h_end or v_start or v_end):
            if x == rect.x0:
                kind = PointKind.HE
            elif inside_vertical(x, y):
                kind = PointKind.HB
        elif h_end and not (h_start or v_start or v_end):
            if x == rect.x1:
                kind = PointKind.HS
            elif inside_vertical(x, y):
                kind = PointKind.HA
        if kind is None:
            raise ValueError(f"ambiguous geometry at point ({x}, {y})")
        result.append((point, kind))

    for v in verticals:
        for h in horizontals:
            if h.lo < v.anchor < h.hi and v.lo < h.anchor < v.hi:
                result.append(((v.anchor, h.anchor), PointKind.CC))

    result.sort(key=lambda item: (item[0][0], item[0][1], int(item[1])))
    return result


def restrict(config: Configuration, sub: Rect) -> Configuration:
    """Clip a configuration to a sub-rectangle.

    A segment survives when its anchor lies strictly inside the
    sub-rectangle's cross-axis interval and its extent overlaps the
    sub-rectangle; clipped or edge-touching endpoints become entries and
    exits of the sub-rectangle.  Crossings survive when strictly inside.
    """
    if not config.rect.contains_rect(sub):
        raise ValueError(f"sub-rectangle {sub} is not contained in {config.rect}")
    if sub == config.rect:
        return config

    segments: list[Segment] = []
    for seg in config.segments:
        if seg.orientation is Orientation.VERTICAL:
            a_lo, a_hi, m_lo, m_hi = sub.x0, sub.x1, sub.y0, sub.y1
            entry, exit_ = PointKind.VE, PointKind.VS
        else:
            a_lo, a_hi, m_lo, m_hi = sub.y0, sub.y1, sub.x0, sub.x1
            entry, exit_ = PointKind.HE, PointKind.HS
        if not (a_lo < seg.anchor < a_hi):
            continue
        lo = max(seg.lo, m_lo)
        hi = min(seg.hi, m_hi)
        if not lo < hi:
            continue
        segments.append(
            Segment(
                orientation=seg.orientation,
                anchor=seg.anchor,
                lo=lo,
                hi=hi,
                loKind=entry if lo == m_lo else seg.loKind,
                hiKind=exit_ if hi == m_hi else seg.hiKind,
            )
        )

    crossings = tuple(
        (x, y)
        for x, y in config.crossings
        if sub.x0 < x < sub.x1 and sub.y0 < y < sub.y1
    )
    return Configuration(rect=sub, segments=tuple(segments), crossings=crossings)
