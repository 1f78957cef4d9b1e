"""Tests for entry sampling and diagram construction."""

import pytest

from bulletlab.model import (
    Orientation,
    Params,
    PointKind,
    Rect,
    extract_stats,
    validate_configuration,
)
from bulletlab.presets import get_preset, preset_names
from bulletlab.rng import RngStream
from bulletlab.sampler import (
    ExplicitLaw,
    PoissonLaw,
    RunawayDiagramError,
    build_diagram,
    kernel_name,
    sample_initial_condition,
    sample_ppp_interval,
    sample_ppp_rectangle,
)
from bulletlab.verify import chisq_gof_poisson, ks_uniform

RECT = Rect(0.0, 0.0, 1.0, 1.0)


class TestLaws:
    def test_poisson_law_rejects_negative_intensity(self):
        with pytest.raises(ValueError):
            PoissonLaw(nuH=-1.0, nuV=0.0)
        with pytest.raises(ValueError):
            PoissonLaw(nuH=0.0, nuV=-0.5)

    def test_explicit_law_requires_strict_increase(self):
        with pytest.raises(ValueError):
            ExplicitLaw(xs=(0.2, 0.2), ys=())
        with pytest.raises(ValueError):
            ExplicitLaw(xs=(), ys=(0.7, 0.3))

    def test_explicit_law_coerces_to_float(self):
        law = ExplicitLaw(xs=(1, 2), ys=())
        assert law.xs == (1.0, 2.0)
        assert all(isinstance(v, float) for v in law.xs)


class TestPppInterval:
    def test_zero_rate_is_empty(self):
        assert sample_ppp_interval(0.0, 0.0, 5.0, RngStream(0)) == []

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_ppp_interval(-1.0, 0.0, 1.0, RngStream(0))
        with pytest.raises(ValueError):
            sample_ppp_interval(1.0, 1.0, 1.0, RngStream(0))

    def test_points_sorted_and_interior(self):
        points = sample_ppp_interval(20.0, -2.0, 3.0, RngStream(4))
        assert points == sorted(points)
        assert all(-2.0 < t < 3.0 for t in points)

    def test_counts_are_poisson(self):
        root = RngStream(1001)
        counts = [
            len(sample_ppp_interval(3.0, 0.0, 2.0, root.substream(i)))
            for i in range(2000)
        ]
        _, p = chisq_gof_poisson(counts, 6.0)
        assert p > 1e-3

    def test_positions_are_uniform(self):
        root = RngStream(1002)
        points = []
        for i in range(200):
            points.extend(sample_ppp_interval(3.0, 0.0, 2.0, root.substream(i)))
        _, p = ks_uniform(points, 0.0, 2.0)
        assert p > 1e-3


class TestPppRectangle:
    def test_zero_rate_is_empty(self):
        assert sample_ppp_rectangle(0.0, RECT, RngStream(0)) == []

    def test_points_inside_and_sorted_by_x(self):
        rect = Rect(-1.0, 2.0, 1.5, 4.0)
        points = sample_ppp_rectangle(8.0, rect, RngStream(6))
        xs = [x for x, _ in points]
        assert xs == sorted(xs)
        assert all(rect.x0 < x < rect.x1 and rect.y0 < y < rect.y1 for x, y in points)

    def test_counts_are_poisson(self):
        root = RngStream(1003)
        rect = Rect(0.0, 0.0, 2.0, 1.5)
        counts = [
            len(sample_ppp_rectangle(2.0, rect, root.substream(i)))
            for i in range(2000)
        ]
        _, p = chisq_gof_poisson(counts, 2.0 * rect.width * rect.height)
        assert p > 1e-3


class TestInitialCondition:
    def test_explicit_entries_pass_through(self):
        law = ExplicitLaw(xs=(0.25, 0.5), ys=(0.75,))
        assert sample_initial_condition(law, RECT, RngStream(0)) == (
            (0.25, 0.5),
            (0.75,),
        )

    def test_explicit_entries_must_be_interior(self):
        with pytest.raises(ValueError):
            sample_initial_condition(ExplicitLaw(xs=(0.0,), ys=()), RECT, RngStream(0))
        with pytest.raises(ValueError):
            sample_initial_condition(ExplicitLaw(xs=(), ys=(1.0,)), RECT, RngStream(0))

    def test_unsupported_law_rejected(self):
        with pytest.raises(TypeError):
            sample_initial_condition(object(), RECT, RngStream(0))

    def test_poisson_entries_sorted(self):
        xs, ys = sample_initial_condition(PoissonLaw(4.0, 4.0), RECT, RngStream(2))
        assert list(xs) == sorted(xs)
        assert list(ys) == sorted(ys)


class TestBuildDiagram:
    def test_same_seed_same_diagram(self):
        preset = get_preset("loop")
        rect = Rect(0.0, 0.0, 3.0, 3.0)
        law = PoissonLaw(preset.nuH, preset.nuV)
        first = build_diagram(preset.params, law, rect, RngStream(17))
        second = build_diagram(preset.params, law, rect, RngStream(17))
        assert first == second

    def test_all_presets_produce_valid_diagrams(self):
        rect = Rect(-1.0, -1.0, 1.0, 1.0)
        for name in preset_names():
            preset = get_preset(name)
            law = PoissonLaw(preset.nuH, preset.nuV)
            for seed in range(5):
                config = build_diagram(
                    preset.params, law, rect, RngStream(seed).substream(3)
                )
                assert validate_configuration(config) == [], name

    def test_pure_annihilation_meeting(self):
        # With every rate zero and p0 = 1 the single vertical and single
        # horizontal must kill each other where they meet.
        params = Params(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0)
        law = ExplicitLaw(xs=(0.5,), ys=(0.3,))
        config = build_diagram(params, law, RECT, RngStream(0))
        stats = extract_stats(config)
        assert stats.count(PointKind.VE) == 1
        assert stats.count(PointKind.HE) == 1
        assert stats.count(PointKind.OA) == 1
        assert config.crossings == ()
        vertical = next(
            s for s in config.segments if s.orientation is Orientation.VERTICAL
        )
        assert (vertical.anchor, vertical.lo, vertical.hi) == (0.5, 0.0, 0.3)

    def test_pure_crossing_meeting(self):
        params = Params(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        law = ExplicitLaw(xs=(0.5,), ys=(0.3,))
        config = build_diagram(params, law, RECT, RngStream(0))
        stats = extract_stats(config)
        assert stats.count(PointKind.VS) == 1
        assert stats.count(PointKind.HS) == 1
        assert stats.count(PointKind.CC) == 1
        assert config.crossings == ((0.5, 0.3),)

    def test_event_budget_enforced(self):
        params = Params(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        law = ExplicitLaw(xs=tuple((i + 1) / 13 for i in range(12)), ys=())
        with pytest.raises(RunawayDiagramError):
            build_diagram(params, law, RECT, RngStream(0), max_events=5)

    def test_budget_must_be_positive(self):
        preset = get_preset("loop")
        with pytest.raises(ValueError):
            build_diagram(
                preset.params, PoissonLaw(1.0, 1.0), RECT, RngStream(0), max_events=0
            )


class TestKernelSelection:
    def test_explicit_names(self):
        assert kernel_name("python") == "python"
        with pytest.raises(ValueError):
            kernel_name("fortran")

    def test_env_override_forces_python(self, monkeypatch):
        monkeypatch.setenv("BULLETLAB_PURE_PYTHON", "1")
        assert kernel_name() == "python"

    def test_explicit_kernel_argument_wins(self):
        preset = get_preset("loop-half")
        law = PoissonLaw(preset.nuH, preset.nuV)
        config = build_diagram(
            preset.params, law, RECT, RngStream(9), kernel="python"
        )
        assert validate_configuration(config) == []
