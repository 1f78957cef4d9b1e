"""Exact sampling of entry conditions and full space-time diagrams.

A diagram is determined by its boundary entries (bottom-edge verticals
and left-edge horizontals), its interior creation points, and the clock
and meeting randomness consumed by the sweep.  All of it is drawn from a
single :class:`~bulletlab.rng.RngStream` in a fixed order, so a (params,
law, rectangle, seed) quadruple pins down the diagram bit for bit.

Because every line moves up or to the right, the diagram restricted to a
rectangle depends only on what enters through its bottom and left edges
and on creations inside it.  Simulating the rectangle directly therefore
yields an exact sample of the infinite-domain dynamics restricted to it;
nothing outside is approximated away.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import _sweep_py
from .errors import RunawayDiagramError
from .model import Configuration, Orientation, Params, PointKind, Rect, Segment
from .rng import RngStream

try:
    from . import _sweep as _sweep_compiled
except ImportError:  # the extension is optional
    _sweep_compiled = None

__all__ = [
    "PoissonLaw",
    "ExplicitLaw",
    "RunawayDiagramError",
    "sample_ppp_interval",
    "sample_ppp_rectangle",
    "sample_initial_condition",
    "build_diagram",
    "kernel_name",
    "DEFAULT_MAX_EVENTS",
]

DEFAULT_MAX_EVENTS = 10_000_000


@dataclass(frozen=True)
class PoissonLaw:
    """Poisson entries: rate nuH on the left edge, nuV on the bottom edge."""

    nuH: float
    nuV: float

    def __post_init__(self) -> None:
        if self.nuH < 0.0 or self.nuV < 0.0:
            raise ValueError(f"entry intensities must be >= 0, got {self}")


@dataclass(frozen=True)
class ExplicitLaw:
    """Deterministic entries at the given edge coordinates.

    ``xs`` are bottom-edge abscissas and ``ys`` left-edge ordinates; both
    must be strictly increasing and strictly inside the open edges of the
    rectangle they are used with.
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(float(v) for v in self.xs))
        object.__setattr__(self, "ys", tuple(float(v) for v in self.ys))
        for name in ("xs", "ys"):
            values = getattr(self, name)
            if any(a >= b for a, b in zip(values, values[1:])):
                raise ValueError(f"{name} must be strictly increasing: {values}")


InitialLaw = PoissonLaw | ExplicitLaw


def _positive_uniform(rng: RngStream) -> float:
    # Uniform in (0, 1); the measure-zero draw u == 0 is rejected so that
    # sampled coordinates stay strictly inside open intervals.
    while True:
        u = rng.random()
        if u > 0.0:
            return u


def sample_ppp_interval(
    rate: float, lo: float, hi: float, rng: RngStream
) -> list[float]:
    """Poisson process of the given rate on (lo, hi), sorted."""
    if rate < 0.0:
        raise ValueError(f"rate must be >= 0, got {rate}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if rate == 0.0:
        return []
    points: list[float] = []
    t = lo
    while True:
        t += -math.log1p(-_positive_uniform(rng)) / rate
        if t >= hi:
            return points
        points.append(t)


def sample_ppp_rectangle(
    rate: float, rect: Rect, rng: RngStream
) -> list[tuple[float, float]]:
    """Poisson process of the given areal rate in rect, sorted by x."""
    if rate < 0.0:
        raise ValueError(f"rate must be >= 0, got {rate}")
    if rate == 0.0:
        return []
    xs = sample_ppp_interval(rate * rect.height, rect.x0, rect.x1, rng)
    return [(x, rect.y0 + _positive_uniform(rng) * rect.height) for x in xs]


def sample_initial_condition(
    law: InitialLaw, rect: Rect, rng: RngStream
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Entry coordinates (bottom-edge xs, left-edge ys) under the law."""
    if isinstance(law, PoissonLaw):
        xs = sample_ppp_interval(law.nuV, rect.x0, rect.x1, rng)
        ys = sample_ppp_interval(law.nuH, rect.y0, rect.y1, rng)
        return tuple(xs), tuple(ys)
    if isinstance(law, ExplicitLaw):
        for value in law.xs:
            if not rect.x0 < value < rect.x1:
                raise ValueError(f"entry abscissa {value} outside open bottom edge")
        for value in law.ys:
            if not rect.y0 < value < rect.y1:
                raise ValueError(f"entry ordinate {value} outside open left edge")
        return law.xs, law.ys
    raise TypeError(f"unsupported initial law {law!r}")


def _kernel_module(kernel: str | None):
    if kernel is None:
        if os.environ.get("BULLETLAB_PURE_PYTHON"):
            return _sweep_py
        return _sweep_compiled if _sweep_compiled is not None else _sweep_py
    if kernel == "python":
        return _sweep_py
    if kernel == "compiled":
        if _sweep_compiled is None:
            raise RuntimeError("the compiled sweep kernel is not available")
        return _sweep_compiled
    raise ValueError(f"unknown kernel {kernel!r}; use 'python' or 'compiled'")


def kernel_name(kernel: str | None = None) -> str:
    """Which sweep implementation a build_diagram call would use."""
    return "python" if _kernel_module(kernel) is _sweep_py else "compiled"


def build_diagram(
    params: Params,
    law: InitialLaw,
    rect: Rect,
    rng: RngStream,
    max_events: int = DEFAULT_MAX_EVENTS,
    kernel: str | None = None,
) -> Configuration:
    """Sample one diagram of the bullet model on a rectangle.

    Draw order is fixed: bottom entries, left entries, creation points,
    then the sweep's clocks and meeting outcomes.  ``kernel`` selects the
    sweep implementation ("python" or "compiled"); by default the compiled
    kernel is used when available unless the ``BULLETLAB_PURE_PYTHON``
    environment variable is set.  Raises
    :class:`~bulletlab.errors.RunawayDiagramError` when the event count
    exceeds ``max_events``.
    """
    if max_events <= 0:
        raise ValueError(f"max_events must be positive, got {max_events}")
    entries_x, entries_y = sample_initial_condition(law, rect, rng)
    creations = sample_ppp_rectangle(params.lambda0, rect, rng)
    module = _kernel_module(kernel)
    verticals, horizontals, crossings = module.sweep(
        params.as_tuple(),
        (rect.x0, rect.y0, rect.x1, rect.y1),
        list(entries_x),
        list(entries_y),
        creations,
        rng.generator,
        max_events,
    )
    segments = [
        Segment(
            orientation=Orientation.VERTICAL,
            anchor=x,
            lo=lo,
            hi=hi,
            loKind=PointKind(lo_kind),
            hiKind=PointKind(hi_kind),
        )
        for x, lo, hi, lo_kind, hi_kind in verticals
    ]
    segments.extend(
        Segment(
            orientation=Orientation.HORIZONTAL,
            anchor=y,
            lo=lo,
            hi=hi,
            loKind=PointKind(lo_kind),
            hiKind=PointKind(hi_kind),
        )
        for y, lo, hi, lo_kind, hi_kind in horizontals
    )
    return Configuration(
        rect=rect, segments=tuple(segments), crossings=tuple(crossings)
    )
