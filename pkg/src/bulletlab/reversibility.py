"""Reverse-model algebra: invariants, reverse parameters, condition checks.

Three polynomial invariants of a parameter vector govern everything here:

    A  = (lambdaH + tauH) * (lambdaV + tauV) - tauV * tauH
    BV = (pH + pV) * (lambdaV + tauV) - pV * lambdaV
    BH = (pH + pV) * (lambdaH + tauH) - pH * lambdaH

All three are automatically nonnegative for a valid parameter vector.
When they are nonzero and a balance equation holds, closed-form maps
produce a reverse model and stationary Poisson intensities nuH = A / BH,
nuV = A / BV: one map for the half-turn reversal and one for the quarter
turn.  Degenerate parameters (some invariant zero) fall outside the maps
but can still satisfy the underlying five-condition systems, which the
``check_theorem_*`` functions evaluate verbatim for any candidate pair.

The axis swap r needs no balance at all: exchanging the roles of the two
orientations always yields the reverse under r.  Composition over the
whole symmetry group reduces to these three building blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import SymmetryElement
from .model import Params
from .rng import RngStream

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class ReversibilityInvariants:
    A: float
    BV: float
    BH: float


@dataclass(frozen=True)
class Condition:
    """One scalar equality of a five-condition system."""

    identifier: int
    label: str
    left: float
    right: float
    satisfied: bool


@dataclass(frozen=True)
class ConditionReport:
    conditions: tuple[Condition, ...]
    overall: bool

    def condition(self, identifier: int) -> bool:
        """Whether every equality of the numbered condition holds."""
        rows = [c for c in self.conditions if c.identifier == identifier]
        if not rows:
            raise ValueError(f"no condition numbered {identifier}")
        return all(c.satisfied for c in rows)


@dataclass(frozen=True)
class ReversePair:
    """A reverse parameter vector with the forward stationary intensities.

    ``nuH``/``nuV`` are the intensities making the forward model
    stationary; they are None when the construction (the axis swap, or the
    identity) does not by itself determine intensities.  The reverse
    model's own entry law is PPP(nuH, nuV) when the symmetry preserves
    orientations and PPP(nuV, nuH) when it swaps them.
    """

    reverseParams: Params
    nuH: float | None
    nuV: float | None
    sourceCorollary: str


@dataclass(frozen=True)
class NotApplicable:
    """Returned when a closed-form reverse construction does not apply."""

    reason: str


def invariants_of(params: Params) -> ReversibilityInvariants:
    drift_v = params.lambdaV + params.tauV
    drift_h = params.lambdaH + params.tauH
    meet = params.pH + params.pV
    return ReversibilityInvariants(
        A=drift_h * drift_v - params.tauV * params.tauH,
        BV=meet * drift_v - params.pV * params.lambdaV,
        BH=meet * drift_h - params.pH * params.lambdaH,
    )


def r_reverse(params: Params) -> Params:
    """Exchange the vertical and horizontal roles; an exact involution."""
    return Params(
        lambda0=params.lambda0,
        lambdaV=params.lambdaH,
        lambdaH=params.lambdaV,
        tauV=params.tauH,
        tauH=params.tauV,
        pV=params.pH,
        pH=params.pV,
        p0=params.p0,
    )


def _close(left: float, right: float, tol: float) -> bool:
    return abs(left - right) <= tol * max(1.0, abs(left), abs(right))


def corollary_pi(
    params: Params, tol: float = DEFAULT_TOL
) -> ReversePair | NotApplicable:
    """Closed-form half-turn reverse, when the balance equation holds.

    Requires A, BV, BH nonzero and BH * BV * lambda0 = A^2 * p0; then the
    forward model is stationary under PPP(A/BH, A/BV) and the returned
    parameters are its half-turn reverse under the same law.
    """
    inv = invariants_of(params)
    failing = [
        f"{name} = 0"
        for name, value in (("A", inv.A), ("BV", inv.BV), ("BH", inv.BH))
        if abs(value) <= tol
    ]
    if failing:
        return NotApplicable(reason=", ".join(failing))
    left = inv.BH * inv.BV * params.lambda0
    right = inv.A * inv.A * params.p0
    if not _close(left, right, tol):
        return NotApplicable(
            reason=f"balance BH*BV*lambda0 = A^2*p0 fails ({left} vs {right})"
        )
    nu_h = inv.A / inv.BH
    nu_v = inv.A / inv.BV
    reverse = Params(
        lambda0=params.lambda0,
        lambdaV=nu_h * params.pV,
        lambdaH=nu_v * params.pH,
        tauV=(inv.BV / inv.BH) * params.tauH,
        tauH=(inv.BH / inv.BV) * params.tauV,
        pV=(inv.BH / inv.A) * params.lambdaV,
        pH=(inv.BV / inv.A) * params.lambdaH,
        p0=params.p0,
    )
    return ReversePair(reverseParams=reverse, nuH=nu_h, nuV=nu_v, sourceCorollary="pi")


def corollary_pi2(
    params: Params, tol: float = DEFAULT_TOL
) -> ReversePair | NotApplicable:
    """Closed-form quarter-turn reverse, when both balance equations hold.

    Requires A, BV, BH nonzero, BV * lambda0 = A * tauV and A * p0 =
    BH * tauV.  The forward model is stationary under PPP(A/BH, A/BV);
    the reverse model's own stationary law swaps the two intensities.
    """
    inv = invariants_of(params)
    failing = [
        f"{name} = 0"
        for name, value in (("A", inv.A), ("BV", inv.BV), ("BH", inv.BH))
        if abs(value) <= tol
    ]
    if failing:
        return NotApplicable(reason=", ".join(failing))
    if not _close(inv.BV * params.lambda0, inv.A * params.tauV, tol):
        return NotApplicable(
            reason="balance BV*lambda0 = A*tauV fails "
            f"({inv.BV * params.lambda0} vs {inv.A * params.tauV})"
        )
    if not _close(inv.A * params.p0, inv.BH * params.tauV, tol):
        return NotApplicable(
            reason="balance A*p0 = BH*tauV fails "
            f"({inv.A * params.p0} vs {inv.BH * params.tauV})"
        )
    nu_h = inv.A / inv.BH
    nu_v = inv.A / inv.BV
    reverse = Params(
        lambda0=nu_v * params.tauV,
        lambdaV=nu_v * params.pH,
        lambdaH=params.lambdaV,
        tauV=(inv.BH / inv.BV) * params.tauV,
        tauH=params.tauV,
        pV=(inv.BV / inv.A) * params.lambdaH,
        pH=params.pV,
        p0=(inv.BV / inv.A) * params.tauH,
    )
    return ReversePair(
        reverseParams=reverse, nuH=nu_h, nuV=nu_v, sourceCorollary="pi2"
    )


def check_theorem_pi(
    p: Params, pt: Params, nuV: float, nuH: float, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """The five half-turn conditions for (pt, same law) to reverse (p).

    When they all hold, PPP(nuH, nuV) is stationary for both models and
    each is the half-turn image of the other under that law.
    """
    rows = [
        (1, "lambdaH~ + tauH~ = lambdaH + tauH", pt.lambdaH + pt.tauH, p.lambdaH + p.tauH),
        (1, "lambdaV~ + tauV~ = lambdaV + tauV", pt.lambdaV + pt.tauV, p.lambdaV + p.tauV),
        (2, "lambda0~ = lambda0", pt.lambda0, p.lambda0),
        (2, "lambda0 = nuV*nuH*p0", p.lambda0, nuV * nuH * p.p0),
        (2, "lambdaV~ = nuH*pV", pt.lambdaV, nuH * p.pV),
        (2, "lambdaH~ = nuV*pH", pt.lambdaH, nuV * p.pH),
        (3, "nuV*tauV~ = nuH*tauH", nuV * pt.tauV, nuH * p.tauH),
        (3, "nuH*tauH~ = nuV*tauV", nuH * pt.tauH, nuV * p.tauV),
        (4, "nuH*pV~ = lambdaV", nuH * pt.pV, p.lambdaV),
        (4, "nuV*pH~ = lambdaH", nuV * pt.pH, p.lambdaH),
        (4, "p0~ = p0", pt.p0, p.p0),
        (5, "pV~ + pH~ + p0~ = pV + pH + p0", pt.pV + pt.pH + pt.p0, p.pV + p.pH + p.p0),
    ]
    conditions = tuple(
        Condition(
            identifier=ident,
            label=label,
            left=left,
            right=right,
            satisfied=_close(left, right, tol),
        )
        for ident, label, left, right in rows
    )
    return ConditionReport(
        conditions=conditions, overall=all(c.satisfied for c in conditions)
    )


def check_theorem_pi2(
    p: Params, pt: Params, nuV: float, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """The five quarter-turn conditions linking (p, PPP(nuH, nuV)) to (pt).

    They do not involve nuH: when they hold, the quarter-turn image of a
    (p, PPP(nuH, nuV)) diagram is distributed as a (pt, PPP(nuV, nuH))
    diagram on the rotated rectangle, whatever nuH is.
    """
    rows = [
        (1, "lambdaH~ + tauH~ = lambdaV + tauV", pt.lambdaH + pt.tauH, p.lambdaV + p.tauV),
        (1, "lambdaV~ + tauV~ = lambdaH + tauH", pt.lambdaV + pt.tauV, p.lambdaH + p.tauH),
        (2, "lambda0~ = lambda0", pt.lambda0, p.lambda0),
        (2, "lambda0 = nuV*tauV", p.lambda0, nuV * p.tauV),
        (2, "lambdaV~ = nuV*pH", pt.lambdaV, nuV * p.pH),
        (2, "lambdaH~ = lambdaV", pt.lambdaH, p.lambdaV),
        (3, "tauV~ = nuV*p0", pt.tauV, nuV * p.p0),
        (3, "nuV*tauH~ = lambda0", nuV * pt.tauH, p.lambda0),
        (4, "nuV*pV~ = lambdaH", nuV * pt.pV, p.lambdaH),
        (4, "pH~ = pV", pt.pH, p.pV),
        (4, "nuV*p0~ = tauH", nuV * pt.p0, p.tauH),
        (5, "pV~ + pH~ + p0~ = pV + pH + p0", pt.pV + pt.pH + pt.p0, p.pV + p.pH + p.p0),
    ]
    conditions = tuple(
        Condition(
            identifier=ident,
            label=label,
            left=left,
            right=right,
            satisfied=_close(left, right, tol),
        )
        for ident, label, left, right in rows
    )
    return ConditionReport(
        conditions=conditions, overall=all(c.satisfied for c in conditions)
    )


def reverse_under(
    g: SymmetryElement, params: Params, tol: float = DEFAULT_TOL
) -> ReversePair | NotApplicable:
    """Reverse parameters under any square symmetry, by composition.

    The quarter and half turns use their closed-form maps directly.  The
    other elements factor through the axis swap r: conjugating or
    composing with r swaps the roles of the invariants BV and BH (A is
    symmetric), which moves the balance requirement accordingly.  The
    reported intensities always refer to the forward model's stationary
    law PPP(nuH, nuV).
    """
    if g is SymmetryElement.ID:
        pair = corollary_pi(params, tol)
        if isinstance(pair, NotApplicable):
            return ReversePair(
                reverseParams=params, nuH=None, nuV=None, sourceCorollary="identity"
            )
        return ReversePair(
            reverseParams=params,
            nuH=pair.nuH,
            nuV=pair.nuV,
            sourceCorollary="identity",
        )
    if g is SymmetryElement.R:
        pair = corollary_pi(params, tol)
        nu_h, nu_v = (
            (pair.nuH, pair.nuV) if isinstance(pair, ReversePair) else (None, None)
        )
        return ReversePair(
            reverseParams=r_reverse(params),
            nuH=nu_h,
            nuV=nu_v,
            sourceCorollary="axis-swap",
        )
    if g is SymmetryElement.PI:
        return corollary_pi(params, tol)
    if g is SymmetryElement.PI2:
        return corollary_pi2(params, tol)
    if g is SymmetryElement.RPI:
        pair = corollary_pi(params, tol)
        if isinstance(pair, NotApplicable):
            return pair
        return ReversePair(
            reverseParams=r_reverse(pair.reverseParams),
            nuH=pair.nuH,
            nuV=pair.nuV,
            sourceCorollary="pi+axis-swap",
        )
    if g is SymmetryElement.RPI2:
        pair = corollary_pi2(params, tol)
        if isinstance(pair, NotApplicable):
            return pair
        return ReversePair(
            reverseParams=r_reverse(pair.reverseParams),
            nuH=pair.nuH,
            nuV=pair.nuV,
            sourceCorollary="pi2+axis-swap",
        )
    if g is SymmetryElement.PI32:
        swapped = corollary_pi2(r_reverse(params), tol)
        if isinstance(swapped, NotApplicable):
            return swapped
        # The swapped model's intensities come out in swapped order.
        return ReversePair(
            reverseParams=r_reverse(swapped.reverseParams),
            nuH=swapped.nuV,
            nuV=swapped.nuH,
            sourceCorollary="axis-swap+pi2+axis-swap",
        )
    if g is SymmetryElement.RPI32:
        swapped = corollary_pi2(r_reverse(params), tol)
        if isinstance(swapped, NotApplicable):
            return swapped
        return ReversePair(
            reverseParams=swapped.reverseParams,
            nuH=swapped.nuV,
            nuV=swapped.nuH,
            sourceCorollary="axis-swap+pi2",
        )
    raise ValueError(f"unknown symmetry element {g!r}")


def _uniform_simplex_probs(rng: RngStream) -> tuple[float, float, float]:
    # Dirichlet(1,1,1,1) marginal: three coordinates uniform on the
    # simplex pV + pH + p0 <= 1.
    draws = []
    for _ in range(4):
        u = rng.random()
        while u <= 0.0:
            u = rng.random()
        draws.append(-math.log(u))
    total = sum(draws)
    return (draws[0] / total, draws[1] / total, draws[2] / total)


def random_params_satisfying_pi(rng: RngStream, tol: float = 1e-9) -> Params:
    """Random parameters on the half-turn balance surface, A, BV, BH > 0.

    Rates are uniform on [0, 2], meeting probabilities uniform on the
    simplex, and lambda0 is then solved from the balance equation.
    """
    while True:
        lambda_v = 2.0 * rng.random()
        lambda_h = 2.0 * rng.random()
        tau_v = 2.0 * rng.random()
        tau_h = 2.0 * rng.random()
        p_v, p_h, p_0 = _uniform_simplex_probs(rng)
        probe = Params(
            lambda0=0.0,
            lambdaV=lambda_v,
            lambdaH=lambda_h,
            tauV=tau_v,
            tauH=tau_h,
            pV=p_v,
            pH=p_h,
            p0=p_0,
        )
        inv = invariants_of(probe)
        if min(inv.A, inv.BV, inv.BH) <= tol:
            continue
        lambda_0 = inv.A * inv.A * p_0 / (inv.BH * inv.BV)
        if lambda_0 > 10.0:
            continue
        return Params(
            lambda0=lambda_0,
            lambdaV=lambda_v,
            lambdaH=lambda_h,
            tauV=tau_v,
            tauH=tau_h,
            pV=p_v,
            pH=p_h,
            p0=p_0,
        )


def random_params_satisfying_pi2(rng: RngStream, tol: float = 1e-9) -> Params:
    """Random parameters on the quarter-turn balance surface.

    tauV is solved from A * p0 = BH * tauV (which is linear in tauV once
    expanded) and lambda0 from BV * lambda0 = A * tauV; draws that land on
    a degenerate or extreme branch are rejected.
    """
    while True:
        lambda_v = 2.0 * rng.random()
        lambda_h = 2.0 * rng.random()
        tau_h = 2.0 * rng.random()
        p_v, p_h, p_0 = _uniform_simplex_probs(rng)
        drift_h = lambda_h + tau_h
        bh = (p_h + p_v) * drift_h - p_h * lambda_h
        denominator = bh - p_0 * lambda_h
        if denominator <= tol:
            continue
        tau_v = p_0 * lambda_v * drift_h / denominator
        if tau_v > 10.0:
            continue
        probe = Params(
            lambda0=0.0,
            lambdaV=lambda_v,
            lambdaH=lambda_h,
            tauV=tau_v,
            tauH=tau_h,
            pV=p_v,
            pH=p_h,
            p0=p_0,
        )
        inv = invariants_of(probe)
        if min(inv.A, inv.BV, inv.BH) <= tol:
            continue
        lambda_0 = inv.A * tau_v / inv.BV
        if lambda_0 > 10.0:
            continue
        return Params(
            lambda0=lambda_0,
            lambdaV=lambda_v,
            lambdaH=lambda_h,
            tauV=tau_v,
            tauH=tau_h,
            pV=p_v,
            pH=p_h,
            p0=p_0,
        )
