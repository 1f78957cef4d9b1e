"""Named parameter choices used throughout the test suites and the CLI.

Each preset bundles a parameter vector with the product-Poisson boundary
intensities that make it stationary.  The names follow the models they
describe: colliding bullets with mutual annihilation (cbmc), pure loop
soups at two densities, the broken-line process (hammersley), its
generalisation with partial annihilation (bggs), and the two one-sided
coalescing models (pv, ph) that are each other's half-turn reverses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Params


@dataclass(frozen=True)
class Preset:
    name: str
    params: Params
    nuH: float
    nuV: float
    note: str


def bggs(alpha: float = 0.75) -> Preset:
    """Partial-annihilation variant interpolating toward hammersley.

    At a meeting both lines die with probability alpha; otherwise the
    horizontal absorbs the vertical.  alpha = 1 recovers hammersley.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return Preset(
        name="bggs",
        params=Params(
            lambda0=1.0,
            lambdaV=0.0,
            lambdaH=0.0,
            tauV=0.0,
            tauH=0.0,
            pV=0.0,
            pH=1.0 - alpha,
            p0=alpha,
        ),
        nuH=1.0,
        nuV=1.0,
        note=f"meetings annihilate with probability {alpha:g}",
    )


_REGISTRY: dict[str, Preset] = {
    "cbmc": Preset(
        name="cbmc",
        params=Params(
            lambda0=0.0,
            lambdaV=1.0,
            lambdaH=1.0,
            tauV=0.0,
            tauH=0.0,
            pV=0.0,
            pH=0.0,
            p0=1.0,
        ),
        nuH=1.0,
        nuV=1.0,
        note="splits only, every meeting annihilates both lines",
    ),
    "loop": Preset(
        name="loop",
        params=Params(
            lambda0=1.0,
            lambdaV=0.0,
            lambdaH=0.0,
            tauV=1.0,
            tauH=1.0,
            pV=0.0,
            pH=0.0,
            p0=1.0,
        ),
        nuH=1.0,
        nuV=1.0,
        note="creations and turns close into loops at meetings",
    ),
    "loop-half": Preset(
        name="loop-half",
        params=Params(
            lambda0=0.0,
            lambdaV=1.0,
            lambdaH=1.0,
            tauV=0.0,
            tauH=0.0,
            pV=0.5,
            pH=0.5,
            p0=0.0,
        ),
        nuH=2.0,
        nuV=2.0,
        note="splits with an even coin deciding which line survives",
    ),
    "hammersley": Preset(
        name="hammersley",
        params=Params(
            lambda0=1.0,
            lambdaV=0.0,
            lambdaH=0.0,
            tauV=0.0,
            tauH=0.0,
            pV=0.0,
            pH=0.0,
            p0=1.0,
        ),
        nuH=1.0,
        nuV=1.0,
        note="broken-line process, meetings annihilate both lines",
    ),
    "bggs": bggs(),
    "pv": Preset(
        name="pv",
        params=Params(
            lambda0=0.0,
            lambdaV=0.0,
            lambdaH=1.0,
            tauV=1.0,
            tauH=0.0,
            pV=1.0,
            pH=0.0,
            p0=0.0,
        ),
        nuH=1.0,
        nuV=1.0,
        note="horizontals coalesce into verticals",
    ),
    "ph": Preset(
        name="ph",
        params=Params(
            lambda0=0.0,
            lambdaV=1.0,
            lambdaH=0.0,
            tauV=0.0,
            tauH=1.0,
            pV=0.0,
            pH=1.0,
            p0=0.0,
        ),
        nuH=1.0,
        nuV=1.0,
        note="verticals coalesce into horizontals",
    ),
}


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def get_preset(name: str) -> Preset:
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(preset_names())
        raise ValueError(f"unknown preset {name!r}, expected one of: {known}") from None
