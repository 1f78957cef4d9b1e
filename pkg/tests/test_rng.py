"""Tests for the seeded stream hierarchy."""

import math

from hypothesis import given
from hypothesis import strategies as st

from bulletlab.rng import RngStream


class TestDeterminism:
    def test_same_seed_same_sequence(self):
        a = RngStream(42)
        b = RngStream(42)
        assert [a.random() for _ in range(16)] == [b.random() for _ in range(16)]

    def test_different_seeds_diverge(self):
        a = RngStream(1)
        b = RngStream(2)
        assert [a.random() for _ in range(4)] != [b.random() for _ in range(4)]

    def test_different_paths_diverge(self):
        a = RngStream(7).substream(0)
        b = RngStream(7).substream(1)
        assert [a.random() for _ in range(4)] != [b.random() for _ in range(4)]

    def test_seed_wraps_to_64_bits(self):
        a = RngStream(-1)
        b = RngStream((1 << 64) - 1)
        assert a.random() == b.random()


class TestSubstreams:
    def test_chaining_matches_flat_path(self):
        chained = RngStream(9, (1,)).substream(2)
        flat = RngStream(9).substream(1, 2)
        assert chained.path == flat.path == (1, 2)
        assert [chained.random() for _ in range(8)] == [
            flat.random() for _ in range(8)
        ]

    def test_substream_does_not_disturb_parent(self):
        parent = RngStream(3)
        untouched = RngStream(3)
        parent.substream(5)
        assert [parent.random() for _ in range(8)] == [
            untouched.random() for _ in range(8)
        ]

    def test_substream_differs_from_parent(self):
        parent = RngStream(11)
        child = RngStream(11).substream(0)
        assert [parent.random() for _ in range(4)] != [
            child.random() for _ in range(4)
        ]

    @given(st.integers(0, 2**32), st.lists(st.integers(0, 2**32), max_size=4))
    def test_reconstruction_replays(self, seed, path):
        first = RngStream(seed, tuple(path))
        again = RngStream(first.seed, first.path)
        assert first.random() == again.random()


class TestExponential:
    def test_zero_rate_is_infinite_and_free(self):
        stream = RngStream(5)
        reference = RngStream(5)
        assert stream.exponential(0.0) == math.inf
        # The zero-rate call must not advance the stream.
        assert stream.random() == reference.random()

    def test_negative_rate_rejected(self):
        try:
            RngStream(0).exponential(-1.0)
        except ValueError:
            pass
        else:
            raise AssertionError("negative rate accepted")

    def test_positive_rate_consumes_one_uniform(self):
        stream = RngStream(8)
        reference = RngStream(8)
        stream.exponential(2.0)
        reference.random()
        assert stream.random() == reference.random()

    def test_matches_inverse_cdf(self):
        stream = RngStream(13)
        u = RngStream(13).random()
        assert stream.exponential(3.0) == -math.log1p(-u) / 3.0

    @given(st.floats(min_value=1e-6, max_value=1e6), st.integers(0, 2**32))
    def test_draws_are_positive(self, rate, seed):
        assert RngStream(seed).exponential(rate) > 0.0
