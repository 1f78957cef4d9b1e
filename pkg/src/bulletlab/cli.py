"""Command-line interface.

Every subcommand is a thin wrapper over one library call: it parses
flags, runs the operation, prints JSON (or SVG) and maps the outcome to
an exit code.  Exit 0 means success (and, for ``check`` and ``verify``,
that the check passed), 1 means a verification failed, 2 means the
invocation or its inputs were invalid.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .diagramio import DiagramDocument, decode_diagram, encode_diagram, stats_to_json
from .density import log_density
from .geometry import SymmetryElement, swaps_orientation
from .model import Params, Rect, extract_stats
from .presets import bggs, get_preset, preset_names
from .render import render_svg
from .reversibility import (
    NotApplicable,
    ReversePair,
    check_theorem_pi,
    check_theorem_pi2,
    reverse_under,
)
from .rng import RngStream
from .sampler import DEFAULT_MAX_EVENTS, PoissonLaw, build_diagram
from .verify import (
    verify_density_identity_pi,
    verify_density_identity_pi2,
    verify_empty_probability,
    verify_qr_distribution,
    verify_stationarity,
)

_PARAM_ORDER = ("lambda0", "lambdaV", "lambdaH", "tauV", "tauH", "pV", "pH", "p0")


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    pieces = text.split(",")
    if len(pieces) != count:
        raise ValueError(f"{what} needs {count} comma-separated values, got {text!r}")
    try:
        return tuple(float(piece) for piece in pieces)
    except ValueError:
        raise ValueError(f"{what} contains a non-numeric value: {text!r}") from None


def _parse_rect(text: str) -> Rect:
    x0, y0, x1, y1 = _parse_floats(text, 4, "--rect")
    return Rect(x0=x0, y0=y0, x1=x1, y1=y1)


def _resolve_model(args: argparse.Namespace) -> tuple[Params, float, float]:
    """Params plus boundary intensities from --preset/--params/--nu flags."""
    if args.preset is not None and args.params is not None:
        raise ValueError("give either --preset or --params, not both")
    if args.preset is not None:
        if args.preset == "bggs" and getattr(args, "bggs_alpha", None) is not None:
            preset = bggs(args.bggs_alpha)
        else:
            preset = get_preset(args.preset)
        params, nuH, nuV = preset.params, preset.nuH, preset.nuV
    elif args.params is not None:
        params = Params.from_tuple(_parse_floats(args.params, 8, "--params"))
        nuH = nuV = None
    else:
        raise ValueError("one of --preset or --params is required")
    if getattr(args, "nu", None) is not None:
        nuH, nuV = _parse_floats(args.nu, 2, "--nu")
    if nuH is None or nuV is None:
        raise ValueError("--nu is required when --params is given")
    return params, nuH, nuV


def _params_json(params: Params) -> dict:
    return dict(zip(_PARAM_ORDER, params.as_tuple()))


def _read_document(path: str) -> DiagramDocument:
    if path == "-":
        return decode_diagram(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return decode_diagram(handle.read())


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_simulate(args: argparse.Namespace) -> int:
    params, nuH, nuV = _resolve_model(args)
    law = PoissonLaw(nuH=nuH, nuV=nuV)
    rect = _parse_rect(args.rect)
    config = build_diagram(
        params,
        law,
        rect,
        RngStream(args.seed),
        max_events=args.max_events,
        kernel=args.kernel,
    )
    document = DiagramDocument(params=params, law=law, config=config, seed=args.seed)
    _emit(encode_diagram(document, include_stats=args.stats), args.out)
    if args.svg is not None:
        _emit(render_svg(config), args.svg)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    document = _read_document(args.infile)
    _emit(json.dumps(stats_to_json(extract_stats(document.config))), args.out)
    return 0


def _cmd_density(args: argparse.Namespace) -> int:
    document = _read_document(args.infile)
    params = document.params
    law = document.law
    if args.params is not None:
        params = Params.from_tuple(_parse_floats(args.params, 8, "--params"))
    if args.nu is not None:
        nuH, nuV = _parse_floats(args.nu, 2, "--nu")
        law = PoissonLaw(nuH=nuH, nuV=nuV)
    result = log_density(document.config, params, law)
    _emit(
        json.dumps({"value": result.value, "finiteSupport": result.finiteSupport}),
        args.out,
    )
    return 0


def _cmd_reverse(args: argparse.Namespace) -> int:
    params, _, _ = _resolve_model(args)
    outcome = reverse_under(SymmetryElement(args.g), params)
    if isinstance(outcome, NotApplicable):
        payload = {"applicable": False, "reason": outcome.reason}
    else:
        payload = {
            "applicable": True,
            "g": args.g,
            "sourceCorollary": outcome.sourceCorollary,
            "reverseParams": _params_json(outcome.reverseParams),
            "nuH": outcome.nuH,
            "nuV": outcome.nuV,
        }
    _emit(json.dumps(payload), args.out)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    params = Params.from_tuple(_parse_floats(args.params, 8, "--params"))
    reverse = Params.from_tuple(_parse_floats(args.reverse_params, 8, "--reverse-params"))
    nuH, nuV = _parse_floats(args.nu, 2, "--nu")
    if args.theorem == "pi":
        report = check_theorem_pi(params, reverse, nuH, nuV, tol=args.tol)
    else:
        report = check_theorem_pi2(params, reverse, nuV, tol=args.tol)
    payload = {
        "theorem": args.theorem,
        "overall": report.overall,
        "conditions": [dataclasses.asdict(c) for c in report.conditions],
    }
    _emit(json.dumps(payload), args.out)
    return 0 if report.overall else 1


def _reverse_side(
    args: argparse.Namespace, g: SymmetryElement, params: Params
) -> tuple[Params, float, float]:
    """Reverse-side model for a two-sided suite, derived when not given."""
    reverse_params: Params | None = None
    nuH = nuV = None
    if args.reverse_preset is not None:
        preset = get_preset(args.reverse_preset)
        reverse_params, nuH, nuV = preset.params, preset.nuH, preset.nuV
    elif args.reverse_params is not None:
        reverse_params = Params.from_tuple(
            _parse_floats(args.reverse_params, 8, "--reverse-params")
        )
    if args.reverse_nu is not None:
        nuH, nuV = _parse_floats(args.reverse_nu, 2, "--reverse-nu")
    if reverse_params is None:
        outcome = reverse_under(g, params)
        if isinstance(outcome, NotApplicable):
            raise ValueError(f"no reverse model under {g.value}: {outcome.reason}")
        reverse_params = outcome.reverseParams
        if nuH is None and outcome.nuH is not None:
            # reverse_under reports the forward stationary intensities; the
            # reverse side's own law swaps them under orientation-swapping g.
            if swaps_orientation(g):
                nuH, nuV = outcome.nuV, outcome.nuH
            else:
                nuH, nuV = outcome.nuH, outcome.nuV
    if nuH is None or nuV is None:
        raise ValueError("--reverse-nu is required when it cannot be derived")
    return reverse_params, nuH, nuV


def _cmd_verify(args: argparse.Namespace) -> int:
    params, nuH, nuV = _resolve_model(args)
    rect = _parse_rect(args.rect)
    n = args.replicates
    seed = args.seed

    if args.suite == "empty-probability":
        report = verify_empty_probability(params, nuH, nuV, rect, n, seed)
    elif args.suite == "stationarity":
        dx, dy = _parse_floats(args.shift, 2, "--shift")
        report = verify_stationarity(
            params, nuH, nuV, rect, (dx, dy), n, seed, alpha=args.alpha
        )
    elif args.suite == "density-identity-pi":
        reverse_params, _, _ = _reverse_side(args, SymmetryElement.PI, params)
        report = verify_density_identity_pi(
            params, reverse_params, nuH, nuV, rect, n, seed, tol=args.tol
        )
    elif args.suite == "density-identity-pi2":
        reverse_params, _, _ = _reverse_side(args, SymmetryElement.PI2, params)
        report = verify_density_identity_pi2(
            params, reverse_params, nuH, nuV, rect, n, seed, tol=args.tol
        )
    else:
        g = SymmetryElement(args.g)
        reverse_params, rev_nuH, rev_nuV = _reverse_side(args, g, params)
        report = verify_qr_distribution(
            g,
            params,
            reverse_params,
            (nuH, nuV),
            (rev_nuH, rev_nuV),
            rect,
            n,
            seed,
            alpha=args.alpha,
        )

    payload = dataclasses.asdict(report)
    payload["testStatistics"] = [list(item) for item in report.testStatistics]
    payload["pValues"] = [list(item) for item in report.pValues]
    _emit(json.dumps(payload), args.out)
    return 0 if report.passed else 1


def _cmd_render(args: argparse.Namespace) -> int:
    document = _read_document(args.infile)
    _emit(render_svg(document.config, scale=args.scale), args.out)
    return 0


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=preset_names(), help="named model")
    parser.add_argument("--bggs-alpha", type=float, default=None,
                        help="alpha for the bggs preset")
    parser.add_argument("--params", help="8 comma-separated parameter values, "
                        "order " + ",".join(_PARAM_ORDER))
    parser.add_argument("--nu", help="boundary intensities nuH,nuV")


def _add_reverse_side_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--reverse-preset", choices=preset_names(),
                        help="named reverse-side model")
    parser.add_argument("--reverse-params", help="8 comma-separated values")
    parser.add_argument("--reverse-nu", help="reverse-side intensities nuH,nuV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bulletlab",
        description="simulate, measure and reverse two-speed bullet models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="sample one diagram")
    _add_model_flags(sim)
    sim.add_argument("--rect", default="0,0,1,1", help="rectangle x0,y0,x1,y1")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--max-events", type=int, default=DEFAULT_MAX_EVENTS)
    sim.add_argument("--kernel", choices=("python", "compiled"), default=None)
    sim.add_argument("--stats", action="store_true", help="embed statistics")
    sim.add_argument("--out", default=None, help="output path, default stdout")
    sim.add_argument("--svg", default=None, help="also render to this path")
    sim.set_defaults(func=_cmd_simulate)

    stats = sub.add_parser("stats", help="statistics of a stored diagram")
    stats.add_argument("--in", dest="infile", required=True, help="'-' for stdin")
    stats.add_argument("--out", default=None)
    stats.set_defaults(func=_cmd_stats)

    density = sub.add_parser("density", help="log density of a stored diagram")
    density.add_argument("--in", dest="infile", required=True, help="'-' for stdin")
    density.add_argument("--params", help="override the document's parameters")
    density.add_argument("--nu", help="override the document's intensities")
    density.add_argument("--out", default=None)
    density.set_defaults(func=_cmd_density)

    reverse = sub.add_parser("reverse", help="reverse model under a symmetry")
    _add_model_flags(reverse)
    reverse.add_argument("--g", required=True,
                         choices=[g.value for g in SymmetryElement])
    reverse.add_argument("--out", default=None)
    reverse.set_defaults(func=_cmd_reverse)

    check = sub.add_parser("check", help="evaluate the reversibility conditions")
    check.add_argument("--theorem", choices=("pi", "pi2"), required=True)
    check.add_argument("--params", required=True)
    check.add_argument("--reverse-params", required=True)
    check.add_argument("--nu", required=True, help="forward intensities nuH,nuV")
    check.add_argument("--tol", type=float, default=1e-12)
    check.add_argument("--out", default=None)
    check.set_defaults(func=_cmd_check)

    verify = sub.add_parser("verify", help="run a seeded verification suite")
    verify.add_argument(
        "--suite",
        required=True,
        choices=(
            "density-identity-pi",
            "density-identity-pi2",
            "stationarity",
            "qr-distribution",
            "empty-probability",
        ),
    )
    _add_model_flags(verify)
    _add_reverse_side_flags(verify)
    verify.add_argument("--g", default="pi",
                        choices=("pi", "pi2"), help="symmetry for qr-distribution")
    verify.add_argument("--rect", default="0,0,1,1")
    verify.add_argument("--shift", default="0.5,0.5", help="stationarity shift dx,dy")
    verify.add_argument("--replicates", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--alpha", type=float, default=1e-3,
                        help="p-value threshold for statistical suites")
    verify.add_argument("--tol", type=float, default=1e-9,
                        help="tolerance for pointwise identity suites")
    verify.add_argument("--out", default=None)
    verify.set_defaults(func=_cmd_verify)

    render = sub.add_parser("render", help="render a stored diagram to SVG")
    render.add_argument("--in", dest="infile", required=True, help="'-' for stdin")
    render.add_argument("--scale", type=float, default=160.0)
    render.add_argument("--out", default=None)
    render.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
