"""JSON serialization of diagrams.

The format is a single JSON object with a ``schema`` tag, the parameters
and initial law that produced the diagram, the rectangle, the segments
with their endpoint kinds spelled out by name, and the crossing points.
Floats are emitted with :func:`repr` semantics, so every value survives a
round trip exactly and encoding the same document twice yields identical
bytes.  Decoding validates everything it can and raises ``ValueError``
rather than return a malformed diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import (
    Configuration,
    ConfigStats,
    Orientation,
    Params,
    PointKind,
    Rect,
    Segment,
    extract_stats,
    validate_configuration,
)
from .sampler import ExplicitLaw, InitialLaw, PoissonLaw

SCHEMA = "bulletlab-diagram/1"


@dataclass(frozen=True)
class DiagramDocument:
    """A diagram plus the inputs that produced it, ready for the wire."""

    params: Params
    law: InitialLaw
    config: Configuration
    seed: int | None = None


def _law_to_json(law: InitialLaw) -> dict:
    if isinstance(law, PoissonLaw):
        return {"kind": "poisson", "nuH": law.nuH, "nuV": law.nuV}
    if isinstance(law, ExplicitLaw):
        return {"kind": "explicit", "xs": list(law.xs), "ys": list(law.ys)}
    raise TypeError(f"unsupported initial law {type(law).__name__}")


def _law_from_json(data: dict) -> InitialLaw:
    kind = data.get("kind")
    if kind == "poisson":
        return PoissonLaw(nuH=float(data["nuH"]), nuV=float(data["nuV"]))
    if kind == "explicit":
        return ExplicitLaw(xs=tuple(data["xs"]), ys=tuple(data["ys"]))
    raise ValueError(f"unknown initial-law kind {kind!r}")


def stats_to_json(stats: ConfigStats) -> dict:
    payload: dict = {"n": stats.n, "m": stats.m}
    for kind in PointKind:
        payload[kind.name] = stats.count(kind)
    payload["LV"] = stats.LV
    payload["LH"] = stats.LH
    return payload


def encode_diagram(document: DiagramDocument, include_stats: bool = False) -> str:
    """Serialize a document to a deterministic JSON string."""
    config = document.config
    payload: dict = {
        "schema": SCHEMA,
        "params": {
            name: value
            for name, value in zip(
                ("lambda0", "lambdaV", "lambdaH", "tauV", "tauH", "pV", "pH", "p0"),
                document.params.as_tuple(),
            )
        },
        "law": _law_to_json(document.law),
        "rect": {
            "x0": config.rect.x0,
            "y0": config.rect.y0,
            "x1": config.rect.x1,
            "y1": config.rect.y1,
        },
        "seed": document.seed,
        "segments": [
            {
                "orientation": seg.orientation.value,
                "anchor": seg.anchor,
                "lo": seg.lo,
                "hi": seg.hi,
                "loKind": seg.loKind.name,
                "hiKind": seg.hiKind.name,
            }
            for seg in config.segments
        ],
        "crossings": [[x, y] for x, y in config.crossings],
    }
    if include_stats:
        payload["stats"] = stats_to_json(extract_stats(config))
    return json.dumps(payload)


def _point_kind(name: object) -> PointKind:
    try:
        return PointKind[str(name)]
    except KeyError:
        raise ValueError(f"unknown point kind {name!r}") from None


def decode_diagram(text: str) -> DiagramDocument:
    """Parse and validate a serialized diagram.

    Raises ``ValueError`` on a wrong schema tag, malformed fields, or a
    configuration that breaks the structural rules.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("expected a JSON object at top level")
    if payload.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {payload.get('schema')!r}")

    try:
        params = Params(**{k: float(v) for k, v in payload["params"].items()})
        law = _law_from_json(payload["law"])
        raw = payload["rect"]
        rect = Rect(
            x0=float(raw["x0"]),
            y0=float(raw["y0"]),
            x1=float(raw["x1"]),
            y1=float(raw["y1"]),
        )
        segments = tuple(
            Segment(
                orientation=Orientation(item["orientation"]),
                anchor=float(item["anchor"]),
                lo=float(item["lo"]),
                hi=float(item["hi"]),
                loKind=_point_kind(item["loKind"]),
                hiKind=_point_kind(item["hiKind"]),
            )
            for item in payload["segments"]
        )
        crossings = tuple((float(x), float(y)) for x, y in payload["crossings"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram document: {exc!r}") from None

    config = Configuration(rect=rect, segments=segments, crossings=crossings)
    violations = validate_configuration(config)
    if violations:
        raise ValueError("invalid diagram: " + "; ".join(violations))

    seed = payload.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ValueError(f"seed must be an integer or null, got {seed!r}")
    return DiagramDocument(params=params, law=law, config=config, seed=seed)
