"""Tests for the statistical helpers used by the verification suites."""

import numpy as np
import pytest

from bulletlab.verify import (
    chisq_gof_poisson,
    independence_z_test,
    ks_uniform,
    two_sample_chisq,
    two_sample_ks,
)


class TestChisqGofPoisson:
    def test_accepts_the_true_law(self):
        rng = np.random.default_rng(11)
        counts = [int(v) for v in rng.poisson(4.0, 3000)]
        _, p = chisq_gof_poisson(counts, 4.0)
        assert p > 1e-3

    def test_rejects_a_wrong_mean(self):
        rng = np.random.default_rng(12)
        counts = [int(v) for v in rng.poisson(8.0, 3000)]
        _, p = chisq_gof_poisson(counts, 4.0)
        assert p < 1e-9

    def test_rejects_a_wrong_shape(self):
        # Right mean, no dispersion.
        _, p = chisq_gof_poisson([4] * 1000, 4.0)
        assert p < 1e-9

    def test_needs_enough_data_for_two_bins(self):
        with pytest.raises(ValueError):
            chisq_gof_poisson([0, 1], 0.05)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            chisq_gof_poisson([], 1.0)
        with pytest.raises(ValueError):
            chisq_gof_poisson([1, 2], 0.0)

    def test_deterministic(self):
        counts = [0, 1, 1, 2, 3, 5, 2, 1, 0, 4] * 20
        assert chisq_gof_poisson(counts, 2.0) == chisq_gof_poisson(counts, 2.0)


class TestKsUniform:
    def test_statistic_by_hand(self):
        stat, _ = ks_uniform([0.25, 0.5, 0.75], 0.0, 1.0)
        assert stat == pytest.approx(0.25)

    def test_accepts_uniform_points(self):
        rng = np.random.default_rng(13)
        points = list(rng.uniform(2.0, 5.0, 2000))
        _, p = ks_uniform(points, 2.0, 5.0)
        assert p > 1e-3

    def test_rejects_biased_points(self):
        rng = np.random.default_rng(14)
        points = list(rng.uniform(0.0, 1.0, 2000) ** 2)
        _, p = ks_uniform(points, 0.0, 1.0)
        assert p < 1e-9

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            ks_uniform([], 0.0, 1.0)
        with pytest.raises(ValueError):
            ks_uniform([0.5], 1.0, 1.0)


class TestTwoSampleKs:
    def test_identical_samples(self):
        sample = [0.0] * 10 + [1.0, 2.0, 3.0]
        stat, p = two_sample_ks(sample, list(sample))
        assert stat == 0.0
        assert p == 1.0

    def test_disjoint_samples(self):
        stat, _ = two_sample_ks([0.0] * 8, [1.0] * 8)
        assert stat == 1.0

    def test_accepts_the_same_law(self):
        rng = np.random.default_rng(15)
        a = list(rng.normal(0.0, 1.0, 1500))
        b = list(rng.normal(0.0, 1.0, 1500))
        _, p = two_sample_ks(a, b)
        assert p > 1e-3

    def test_rejects_a_shift(self):
        rng = np.random.default_rng(16)
        a = list(rng.normal(0.0, 1.0, 1500))
        b = list(rng.normal(1.0, 1.0, 1500))
        _, p = two_sample_ks(a, b)
        assert p < 1e-9

    def test_atom_plus_density_under_null(self):
        # The length statistics mix an atom at zero with a continuous part;
        # the tie handling must not inflate the statistic there.
        rng = np.random.default_rng(17)

        def draw():
            values = rng.uniform(0.0, 1.0, 1500)
            return [0.0 if rng.uniform() < 0.3 else float(v) for v in values]

        _, p = two_sample_ks(draw(), draw())
        assert p > 1e-3

    def test_empty_samples_rejected(self):
        with pytest.raises(ValueError):
            two_sample_ks([], [1.0])


class TestTwoSampleChisq:
    def test_accepts_the_same_law(self):
        rng = np.random.default_rng(18)
        a = [(int(v),) for v in rng.poisson(2.0, 1500)]
        b = [(int(v),) for v in rng.poisson(2.0, 1500)]
        _, p = two_sample_chisq(a, b)
        assert p > 1e-3

    def test_rejects_a_different_law(self):
        rng = np.random.default_rng(19)
        a = [(int(v),) for v in rng.poisson(2.0, 1500)]
        b = [(int(v),) for v in rng.poisson(3.5, 1500)]
        _, p = two_sample_chisq(a, b)
        assert p < 1e-6

    def test_rare_categories_are_pooled(self):
        a = [(0,)] * 100 + [(i,) for i in range(1, 30)]
        b = [(0,)] * 100 + [(i,) for i in range(30, 59)]
        stat, p = two_sample_chisq(a, b)
        assert stat >= 0.0
        assert 0.0 <= p <= 1.0

    def test_single_category_raises(self):
        with pytest.raises(ValueError):
            two_sample_chisq([(1, 2)] * 50, [(1, 2)] * 50)

    def test_empty_input_raises(self):
        with pytest.raises(ValueError):
            two_sample_chisq([], [(1,)])


class TestIndependenceZ:
    def test_independent_pairs_pass(self):
        rng = np.random.default_rng(20)
        xs = list(rng.normal(0.0, 1.0, 2000))
        ys = list(rng.normal(0.0, 1.0, 2000))
        _, p = independence_z_test(xs, ys)
        assert p > 1e-3

    def test_correlated_pairs_fail(self):
        rng = np.random.default_rng(21)
        xs = list(rng.normal(0.0, 1.0, 2000))
        ys = [x + 0.2 * e for x, e in zip(xs, rng.normal(0.0, 1.0, 2000))]
        _, p = independence_z_test(xs, ys)
        assert p < 1e-9

    def test_tiny_samples_are_inconclusive(self):
        assert independence_z_test([1.0, 2.0, 3.0], [3.0, 1.0, 2.0]) == (0.0, 1.0)

    def test_degenerate_margin_is_inconclusive(self):
        ys = [0.0, 1.0, 2.0, 3.0, 4.0]
        assert independence_z_test([2.0] * 5, ys) == (0.0, 1.0)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            independence_z_test([1.0], [1.0, 2.0])
