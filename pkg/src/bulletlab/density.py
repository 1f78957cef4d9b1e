"""Exact diagram densities and closed-form oracles for elementary cases.

Under Poisson entries the law of a diagram on a rectangle has a density
with respect to a fixed reference measure, and that density factorizes
over the diagram's statistics: one base per point kind raised to the
kind's count, times exponential factors in the total segment lengths and
in the rectangle dimensions.  :func:`log_density` evaluates it in log
space with the convention that a zero count contributes nothing even when
its base is zero, while a positive count over a zero base puts the
configuration outside the support.

:func:`elementary_density_oracle` evaluates independently derived closed
forms for fourteen small configuration families (a lone line, a single
turn, a coalescence and so on).  The tests build each family by hand and
compare against :func:`log_density`; the oracle exists only for that
cross-check and deliberately shares no code with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .model import Configuration, Orientation, Params, Rect, extract_stats
from .sampler import PoissonLaw


@dataclass(frozen=True)
class LogDensity:
    """Natural log of a diagram density.

    ``finiteSupport`` is False (and ``value`` is -inf) when some event in
    the configuration is impossible under the parameters, for instance an
    annihilation point while p0 = 0.
    """

    value: float
    finiteSupport: bool


def segment_lengths(config: Configuration) -> tuple[float, float]:
    """Total vertical and horizontal segment length (LV, LH)."""
    total_v = 0.0
    total_h = 0.0
    for seg in config.segments:
        if seg.orientation is Orientation.VERTICAL:
            total_v += seg.extent
        else:
            total_h += seg.extent
    return total_v, total_h


def log_density(
    config: Configuration, params: Params, law: PoissonLaw
) -> LogDensity:
    """Log density of a valid configuration under (params, Poisson law).

    Rejects non-Poisson laws; validity of the configuration is enforced
    by the statistics extraction.
    """
    if not isinstance(law, PoissonLaw):
        raise TypeError("log_density is defined for Poisson entry laws only")
    stats = extract_stats(config)
    rect = config.rect
    value = -law.nuV * rect.width - law.nuH * rect.height
    value -= params.lambda0 * rect.width * rect.height
    value -= (params.lambdaV + params.tauV) * stats.LV
    value -= (params.lambdaH + params.tauH) * stats.LH
    powers = (
        (stats.VE, law.nuV),
        (stats.HE, law.nuH),
        (stats.OB, params.lambda0),
        (stats.VB, params.lambdaH),
        (stats.HB, params.lambdaV),
        (stats.VT, params.tauH),
        (stats.HT, params.tauV),
        (stats.HA, params.pV),
        (stats.VA, params.pH),
        (stats.OA, params.p0),
        (stats.CC, params.crossProb),
    )
    for count, base in powers:
        if count == 0:
            continue
        if base <= 0.0:
            return LogDensity(value=-math.inf, finiteSupport=False)
        value += count * math.log(base)
    return LogDensity(value=value, finiteSupport=True)


class ElementaryCase(Enum):
    """The hand-solvable configuration families with closed-form density.

    Unless stated otherwise, entering lines come through an edge and
    surviving lines leave through the far edge.  The mutual-annihilation
    family arises in two derivations but is a single configuration shape,
    so it appears once.
    """

    EMPTY = "empty"
    LONE_VERTICAL = "lone-vertical"
    LONE_HORIZONTAL = "lone-horizontal"
    HORIZONTAL_DIES_ON_VERTICAL = "horizontal-dies-on-vertical"
    HORIZONTAL_TURNS_UP = "horizontal-turns-up"
    MUTUAL_ANNIHILATION = "mutual-annihilation"
    FULL_CROSSING = "full-crossing"
    VERTICAL_DIES_ON_HORIZONTAL = "vertical-dies-on-horizontal"
    BIRTH_THEN_ANNIHILATION = "birth-then-annihilation"
    TURN_BELOW_HORIZONTAL = "turn-below-horizontal"
    DOUBLE_TURN = "double-turn"
    COALESCE_THEN_TURN = "coalesce-then-turn"
    SPLIT_THEN_TURN = "split-then-turn"
    CROSS_THEN_TURN = "cross-then-turn"


# Coordinate keys each case expects, documented for callers and enforced
# by the oracle.
CASE_COORDS: dict[ElementaryCase, tuple[str, ...]] = {
    ElementaryCase.EMPTY: (),
    ElementaryCase.LONE_VERTICAL: ("x",),
    ElementaryCase.LONE_HORIZONTAL: ("y",),
    ElementaryCase.HORIZONTAL_DIES_ON_VERTICAL: ("x", "y"),
    ElementaryCase.HORIZONTAL_TURNS_UP: ("x", "y"),
    ElementaryCase.MUTUAL_ANNIHILATION: ("x", "y"),
    ElementaryCase.FULL_CROSSING: ("x", "y"),
    ElementaryCase.VERTICAL_DIES_ON_HORIZONTAL: ("x", "y"),
    ElementaryCase.BIRTH_THEN_ANNIHILATION: ("x", "y", "yb"),
    ElementaryCase.TURN_BELOW_HORIZONTAL: ("x", "y", "yt"),
    ElementaryCase.DOUBLE_TURN: ("x", "y", "yt"),
    ElementaryCase.COALESCE_THEN_TURN: ("x", "y", "yt"),
    ElementaryCase.SPLIT_THEN_TURN: ("x", "y", "yt"),
    ElementaryCase.CROSS_THEN_TURN: ("x", "y", "yt"),
}


class _Accumulator:
    """Log-space product that tracks support violations."""

    def __init__(self) -> None:
        self.value = 0.0
        self.finite = True

    def factor(self, base: float) -> None:
        if base <= 0.0:
            self.finite = False
        elif self.finite:
            self.value += math.log(base)

    def exponent(self, coefficient: float, length: float) -> None:
        self.value -= coefficient * length

    def indicator(self, condition: bool) -> None:
        if not condition:
            self.finite = False

    def done(self) -> LogDensity:
        if not self.finite:
            return LogDensity(value=-math.inf, finiteSupport=False)
        return LogDensity(value=self.value, finiteSupport=True)


def elementary_density_oracle(
    case: ElementaryCase,
    rect: Rect,
    coords: Mapping[str, float],
    params: Params,
    nuH: float,
    nuV: float,
) -> LogDensity:
    """Closed-form log density of one elementary configuration family.

    ``coords`` must supply exactly the keys listed in
    :data:`CASE_COORDS` for the case.  Out-of-range coordinates make the
    corresponding indicator vanish, which is reported as a support
    violation rather than an error.
    """
    expected = CASE_COORDS[case]
    if set(coords.keys()) != set(expected):
        raise ValueError(
            f"case {case.value} expects coordinates {expected}, "
            f"got {tuple(coords.keys())}"
        )
    x0, y0, x1, y1 = rect.x0, rect.y0, rect.x1, rect.y1
    w = rect.width
    h = rect.height
    drift_h = params.lambdaH + params.tauH
    drift_v = params.lambdaV + params.tauV

    acc = _Accumulator()
    # Factors shared by every family: no entry on either edge except the
    # ones written out below, and no creation anywhere.
    acc.exponent(nuV, w)
    acc.exponent(nuH, h)
    acc.exponent(params.lambda0, w * h)

    x = coords.get("x", math.nan)
    y = coords.get("y", math.nan)

    if case is ElementaryCase.EMPTY:
        pass

    elif case is ElementaryCase.LONE_VERTICAL:
        # One vertical entry crossing the whole height untouched.
        acc.indicator(x0 < x < x1)
        acc.factor(nuV)
        acc.exponent(drift_v, h)

    elif case is ElementaryCase.LONE_HORIZONTAL:
        acc.indicator(y0 < y < y1)
        acc.factor(nuH)
        acc.exponent(drift_h, w)

    elif case is ElementaryCase.HORIZONTAL_DIES_ON_VERTICAL:
        # Full-height vertical at x; the entering horizontal coalesces
        # into it at height y.
        acc.indicator(x0 < x < x1 and y0 < y < y1)
        acc.factor(nuV)
        acc.factor(nuH)
        acc.factor(params.pV)
        acc.exponent(drift_v, h)
        acc.exponent(drift_h, x - x0)

    elif case is ElementaryCase.HORIZONTAL_TURNS_UP:
        # The entering horizontal turns at (x, y) and leaves as a vertical
        # through the top edge.
        acc.indicator(x0 < x < x1 and y0 < y < y1)
        acc.factor(nuH)
        acc.factor(params.tauH)
        acc.exponent(drift_h, x - x0)
        acc.exponent(drift_v, y1 - y)

    elif case is ElementaryCase.MUTUAL_ANNIHILATION:
        # One entry per edge; the two lines kill each other at (x, y).
        acc.indicator(x0 < x < x1 and y0 < y < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.p0)
        acc.exponent(drift_h, x - x0)
        acc.exponent(drift_v, y - y0)

    elif case is ElementaryCase.FULL_CROSSING:
        # Both lines survive their meeting and span the rectangle.
        acc.indicator(x0 < x < x1 and y0 < y < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.crossProb)
        acc.exponent(drift_h, w)
        acc.exponent(drift_v, h)

    elif case is ElementaryCase.VERTICAL_DIES_ON_HORIZONTAL:
        # Full-width horizontal at y; the entering vertical coalesces into
        # it at abscissa x.
        acc.indicator(x0 < x < x1 and y0 < y < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.pH)
        acc.exponent(drift_h, w)
        acc.exponent(drift_v, y - y0)

    elif case is ElementaryCase.BIRTH_THEN_ANNIHILATION:
        # A creation at (x, yb); its vertical annihilates the entering
        # horizontal at (x, y) while its horizontal leaves to the right.
        yb = coords["yb"]
        acc.indicator(x0 < x < x1 and y0 < yb < y < y1)
        acc.factor(nuH)
        acc.factor(params.lambda0)
        acc.factor(params.p0)
        acc.exponent(drift_h, w)
        acc.exponent(drift_v, y - yb)

    elif case is ElementaryCase.TURN_BELOW_HORIZONTAL:
        # Full-width horizontal at y; the entering vertical turns right at
        # (x, yt) strictly below it.
        yt = coords["yt"]
        acc.indicator(x0 < x < x1 and y0 < yt < y < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.tauV)
        acc.exponent(drift_h, w + (x1 - x))
        acc.exponent(drift_v, yt - y0)

    elif case is ElementaryCase.DOUBLE_TURN:
        # The entering horizontal turns up at (x, y), climbs to yt and
        # turns right again.
        yt = coords["yt"]
        acc.indicator(x0 < x < x1 and y0 < y < yt < y1)
        acc.factor(nuH)
        acc.factor(params.tauH)
        acc.factor(params.tauV)
        acc.exponent(drift_h, w)
        acc.exponent(drift_v, yt - y)

    elif case is ElementaryCase.COALESCE_THEN_TURN:
        # The entering vertical absorbs the entering horizontal at (x, y)
        # and later turns right at (x, yt).
        yt = coords["yt"]
        acc.indicator(x0 < x < x1 and y0 < y < yt < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.pV)
        acc.factor(params.tauV)
        acc.exponent(drift_h, w)
        acc.exponent(drift_v, yt - y0)

    elif case is ElementaryCase.SPLIT_THEN_TURN:
        # Full-width horizontal at y; a vertical born on it at x climbs to
        # yt and turns right.
        yt = coords["yt"]
        acc.indicator(x0 < x < x1 and y0 < y < yt < y1)
        acc.factor(nuH)
        acc.factor(params.lambdaH)
        acc.factor(params.tauV)
        acc.exponent(drift_h, w + (x1 - x))
        acc.exponent(drift_v, yt - y)

    elif case is ElementaryCase.CROSS_THEN_TURN:
        # Full-width horizontal at y; the entering vertical crosses it at
        # (x, y) and turns right at (x, yt).
        yt = coords["yt"]
        acc.indicator(x0 < x < x1 and y0 < y < yt < y1)
        acc.factor(nuH)
        acc.factor(nuV)
        acc.factor(params.crossProb)
        acc.factor(params.tauV)
        acc.exponent(drift_h, w + (x1 - x))
        acc.exponent(drift_v, yt - y0)

    else:  # pragma: no cover - the enum is closed
        raise ValueError(f"unhandled case {case!r}")

    return acc.done()
