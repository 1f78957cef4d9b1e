"""Tests for diagram serialization."""

import json

import pytest

from bulletlab.diagramio import (
    SCHEMA,
    DiagramDocument,
    decode_diagram,
    encode_diagram,
    stats_to_json,
)
from bulletlab.model import Rect, extract_stats
from bulletlab.presets import get_preset
from bulletlab.rng import RngStream
from bulletlab.sampler import ExplicitLaw, PoissonLaw, build_diagram

RECT = Rect(0.0, 0.0, 2.0, 2.0)


def make_document(seed: int = 23) -> DiagramDocument:
    preset = get_preset("loop")
    law = PoissonLaw(preset.nuH, preset.nuV)
    config = build_diagram(preset.params, law, RECT, RngStream(seed))
    return DiagramDocument(params=preset.params, law=law, config=config, seed=seed)


class TestRoundTrip:
    def test_document_survives(self):
        document = make_document()
        again = decode_diagram(encode_diagram(document))
        assert again == document

    def test_explicit_law_survives(self):
        preset = get_preset("cbmc")
        law = ExplicitLaw(xs=(0.5, 1.25), ys=(0.75,))
        config = build_diagram(preset.params, law, RECT, RngStream(3))
        document = DiagramDocument(params=preset.params, law=law, config=config)
        again = decode_diagram(encode_diagram(document))
        assert again == document
        assert again.seed is None

    def test_awkward_floats_survive(self):
        # Coordinates with no short decimal representation.
        rect = Rect(0.0, 0.0, 1.0, 1.0)
        preset = get_preset("loop-half")
        law = PoissonLaw(1.0 / 3.0, 2.0 / 7.0)
        config = build_diagram(preset.params, law, rect, RngStream(29))
        document = DiagramDocument(params=preset.params, law=law, config=config)
        assert decode_diagram(encode_diagram(document)) == document


class TestDeterminism:
    def test_same_document_same_bytes(self):
        assert encode_diagram(make_document()) == encode_diagram(make_document())

    def test_key_order_is_fixed(self):
        payload = json.loads(encode_diagram(make_document()))
        assert list(payload) == [
            "schema",
            "params",
            "law",
            "rect",
            "seed",
            "segments",
            "crossings",
        ]

    def test_stats_are_optional_and_consistent(self):
        document = make_document()
        bare = json.loads(encode_diagram(document))
        rich = json.loads(encode_diagram(document, include_stats=True))
        assert "stats" not in bare
        assert rich["stats"] == stats_to_json(extract_stats(document.config))
        assert rich["stats"]["n"] == extract_stats(document.config).n


class TestDecodeErrors:
    def test_not_json(self):
        with pytest.raises(ValueError, match="not valid JSON"):
            decode_diagram("{nope")

    def test_not_an_object(self):
        with pytest.raises(ValueError, match="JSON object"):
            decode_diagram("[1, 2]")

    def test_wrong_schema(self):
        payload = json.loads(encode_diagram(make_document()))
        payload["schema"] = "bulletlab-diagram/999"
        with pytest.raises(ValueError, match="unsupported schema"):
            decode_diagram(json.dumps(payload))

    def test_missing_field(self):
        payload = json.loads(encode_diagram(make_document()))
        del payload["rect"]
        with pytest.raises(ValueError, match="malformed"):
            decode_diagram(json.dumps(payload))

    def test_unknown_point_kind(self):
        document = make_document()
        assert document.config.segments, "need at least one segment"
        payload = json.loads(encode_diagram(document))
        payload["segments"][0]["loKind"] = "XX"
        with pytest.raises(ValueError, match="unknown point kind"):
            decode_diagram(json.dumps(payload))

    def test_unknown_law_kind(self):
        payload = json.loads(encode_diagram(make_document()))
        payload["law"] = {"kind": "dirichlet"}
        with pytest.raises(ValueError, match="initial-law kind"):
            decode_diagram(json.dumps(payload))

    def test_tampered_geometry_is_rejected(self):
        document = make_document()
        payload = json.loads(encode_diagram(document))
        payload["segments"][0]["hi"] = 99.0
        with pytest.raises(ValueError, match="invalid diagram"):
            decode_diagram(json.dumps(payload))

    def test_non_integer_seed_rejected(self):
        payload = json.loads(encode_diagram(make_document()))
        payload["seed"] = "seven"
        with pytest.raises(ValueError, match="seed"):
            decode_diagram(json.dumps(payload))
