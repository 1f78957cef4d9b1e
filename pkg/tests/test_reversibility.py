"""Tests for the reverse-model algebra."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bulletlab.geometry import SymmetryElement as G
from bulletlab.model import Params
from bulletlab.presets import get_preset
from bulletlab.reversibility import (
    NotApplicable,
    ReversePair,
    check_theorem_pi,
    check_theorem_pi2,
    corollary_pi,
    corollary_pi2,
    invariants_of,
    r_reverse,
    random_params_satisfying_pi,
    random_params_satisfying_pi2,
    reverse_under,
)
from bulletlab.rng import RngStream

PV = get_preset("pv").params
PH = get_preset("ph").params
CBMC = get_preset("cbmc").params
LOOP = get_preset("loop").params
LOOP_HALF = get_preset("loop-half").params
HAMMERSLEY = get_preset("hammersley").params


def params_strategy():
    rate = st.floats(min_value=0.0, max_value=10.0, allow_nan=False)
    unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
    return st.builds(
        lambda l0, lv, lh, tv, th, a, b, c: Params(
            lambda0=l0,
            lambdaV=lv,
            lambdaH=lh,
            tauV=tv,
            tauH=th,
            pV=a / 3.0,
            pH=b / 3.0,
            p0=c / 3.0,
        ),
        rate,
        rate,
        rate,
        rate,
        rate,
        unit,
        unit,
        unit,
    )


class TestInvariants:
    def test_known_presets(self):
        def triple(params):
            inv = invariants_of(params)
            return (inv.A, inv.BV, inv.BH)

        assert triple(PV) == (1.0, 1.0, 1.0)
        assert triple(LOOP_HALF) == (1.0, 0.5, 0.5)
        assert triple(LOOP) == (0.0, 0.0, 0.0)
        assert triple(HAMMERSLEY) == (0.0, 0.0, 0.0)

    @given(params_strategy())
    def test_always_nonnegative(self, params):
        inv = invariants_of(params)
        assert inv.A >= 0.0
        assert inv.BV >= 0.0
        assert inv.BH >= 0.0


class TestAxisSwap:
    def test_is_an_involution(self):
        assert r_reverse(r_reverse(PV)) == PV
        assert r_reverse(PV) == PH

    def test_fixes_symmetric_parameters(self):
        assert r_reverse(CBMC) == CBMC
        assert r_reverse(HAMMERSLEY) == HAMMERSLEY


class TestCorollaryPi:
    def test_turn_model_pair(self):
        pair = corollary_pi(PV)
        assert isinstance(pair, ReversePair)
        assert pair.reverseParams == PH
        assert (pair.nuH, pair.nuV) == (1.0, 1.0)
        assert pair.sourceCorollary == "pi"

    def test_loop_half_is_a_fixed_point(self):
        pair = corollary_pi(LOOP_HALF)
        assert isinstance(pair, ReversePair)
        assert pair.reverseParams == LOOP_HALF
        assert (pair.nuH, pair.nuV) == (2.0, 2.0)

    def test_degenerate_invariants_not_applicable(self):
        out = corollary_pi(LOOP)
        assert isinstance(out, NotApplicable)
        assert "A = 0" in out.reason

    def test_balance_violation_not_applicable(self):
        unbalanced = Params(0.5, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0)
        out = corollary_pi(unbalanced)
        assert isinstance(out, NotApplicable)
        assert "balance" in out.reason

    def test_output_satisfies_the_conditions(self):
        pair = corollary_pi(PV)
        report = check_theorem_pi(PV, pair.reverseParams, pair.nuV, pair.nuH)
        assert report.overall


class TestCorollaryPi2:
    def test_turn_to_coalescing_pair(self):
        pair = corollary_pi2(PH)
        assert isinstance(pair, ReversePair)
        assert pair.reverseParams == CBMC
        assert (pair.nuH, pair.nuV) == (1.0, 1.0)
        assert pair.sourceCorollary == "pi2"

    def test_loop_half_is_a_fixed_point(self):
        pair = corollary_pi2(LOOP_HALF)
        assert isinstance(pair, ReversePair)
        assert pair.reverseParams == LOOP_HALF
        assert (pair.nuH, pair.nuV) == (2.0, 2.0)

    def test_balance_violation_not_applicable(self):
        out = corollary_pi2(PV)
        assert isinstance(out, NotApplicable)
        assert "balance" in out.reason

    def test_output_satisfies_the_conditions(self):
        pair = corollary_pi2(PH)
        report = check_theorem_pi2(PH, pair.reverseParams, pair.nuV)
        assert report.overall


class TestConditionReports:
    def test_half_turn_negative_pair(self):
        report = check_theorem_pi(PV, PV, 1.0, 1.0)
        assert not report.overall
        assert report.condition(1)
        assert not report.condition(3)
        assert report.condition(5)

    def test_quarter_turn_negative_pair(self):
        report = check_theorem_pi2(PV, PV, 1.0)
        assert not report.overall
        assert not report.condition(2)

    def test_loop_reverses_itself_both_ways(self):
        assert check_theorem_pi(LOOP, LOOP, 1.0, 1.0).overall
        assert check_theorem_pi2(LOOP, LOOP, 1.0).overall

    def test_unknown_condition_number(self):
        report = check_theorem_pi(PV, PH, 1.0, 1.0)
        with pytest.raises(ValueError):
            report.condition(9)

    def test_labels_carry_both_sides(self):
        report = check_theorem_pi2(PV, PV, 1.0)
        bad = [c for c in report.conditions if not c.satisfied]
        assert bad
        assert all(c.left != c.right for c in bad)


class TestReverseUnder:
    def test_full_table_for_the_turn_model(self):
        by_g = {g: reverse_under(g, PV) for g in G}
        assert by_g[G.PI].reverseParams == PH
        assert by_g[G.RPI].reverseParams == PV
        assert by_g[G.R].reverseParams == PH
        assert isinstance(by_g[G.PI2], NotApplicable)
        assert isinstance(by_g[G.RPI2], NotApplicable)
        assert by_g[G.PI32].reverseParams == CBMC
        assert by_g[G.RPI32].reverseParams == CBMC
        for g in (G.PI, G.RPI, G.R, G.PI32, G.RPI32):
            assert (by_g[g].nuH, by_g[g].nuV) == (1.0, 1.0)

    def test_source_tags(self):
        assert reverse_under(G.PI, PV).sourceCorollary == "pi"
        assert reverse_under(G.RPI, PV).sourceCorollary == "pi+axis-swap"
        assert reverse_under(G.R, PV).sourceCorollary == "axis-swap"
        assert reverse_under(G.PI32, PV).sourceCorollary == "axis-swap+pi2+axis-swap"
        assert reverse_under(G.RPI32, PV).sourceCorollary == "axis-swap+pi2"
        assert reverse_under(G.PI2, PH).sourceCorollary == "pi2"
        assert reverse_under(G.RPI2, PH).sourceCorollary == "pi2+axis-swap"

    def test_identity_reverses_to_itself(self):
        pair = reverse_under(G.ID, PV)
        assert pair.reverseParams == PV
        assert (pair.nuH, pair.nuV) == (1.0, 1.0)
        assert pair.sourceCorollary == "identity"

    def test_identity_without_intensities(self):
        pair = reverse_under(G.ID, HAMMERSLEY)
        assert pair.reverseParams == HAMMERSLEY
        assert pair.nuH is None and pair.nuV is None

    def test_axis_swap_without_intensities(self):
        pair = reverse_under(G.R, HAMMERSLEY)
        assert pair.reverseParams == HAMMERSLEY
        assert pair.nuH is None and pair.nuV is None


class TestRandomBalanceSurfaces:
    def test_half_turn_surface(self):
        rng = RngStream(301)
        for i in range(50):
            params = random_params_satisfying_pi(rng.substream(i))
            pair = corollary_pi(params)
            assert isinstance(pair, ReversePair), params
            report = check_theorem_pi(params, pair.reverseParams, pair.nuV, pair.nuH)
            assert report.overall, params
            # On the balance surface the half-turn reverse is an involution.
            back = corollary_pi(pair.reverseParams)
            assert isinstance(back, ReversePair)
            assert back.reverseParams.as_tuple() == pytest.approx(
                params.as_tuple(), abs=1e-12
            )

    def test_quarter_turn_surface(self):
        rng = RngStream(302)
        for i in range(50):
            params = random_params_satisfying_pi2(rng.substream(i))
            pair = corollary_pi2(params)
            assert isinstance(pair, ReversePair), params
            report = check_theorem_pi2(params, pair.reverseParams, pair.nuV)
            assert report.overall, params
