"""Exact simulation and verification laboratory for two-speed bullet models.

A bullet model fills a rectangle with upward and rightward line segments:
lines enter through the edges or appear ex nihilo, split off and turn
into lines of the other orientation at exponential rates, and resolve
every vertical-horizontal meeting by a coin flip between four outcomes.
The package samples such diagrams exactly, evaluates their densities,
computes reverse models under the symmetries of the square, and ships
seeded suites that verify the stationarity and quasi-reversibility
properties these models satisfy.
"""

from .density import ElementaryCase, LogDensity, elementary_density_oracle, log_density
from .errors import RunawayDiagramError
from .geometry import (
    EDGE_REF,
    Skeleton,
    SkeletonSegment,
    SymmetryElement,
    apply_symmetry,
    canonical_configuration,
    compose,
    config_distance,
    forward_kind_map,
    inverse,
    map_point,
    map_rect,
    skeleton_of,
    stats_map_under_symmetry,
    swaps_orientation,
)
from .model import (
    Configuration,
    ConfigStats,
    Orientation,
    Params,
    PointKind,
    Rect,
    Segment,
    classify_points,
    extract_stats,
    restrict,
    validate_configuration,
)
from .presets import Preset, bggs, get_preset, preset_names
from .reversibility import (
    Condition,
    ConditionReport,
    NotApplicable,
    ReversePair,
    ReversibilityInvariants,
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
from .rng import RngStream
from .sampler import (
    DEFAULT_MAX_EVENTS,
    ExplicitLaw,
    InitialLaw,
    PoissonLaw,
    build_diagram,
    kernel_name,
    sample_initial_condition,
    sample_ppp_interval,
    sample_ppp_rectangle,
)
from .verify import (
    VerificationReport,
    verify_density_identity_pi,
    verify_density_identity_pi2,
    verify_empty_probability,
    verify_qr_distribution,
    verify_stationarity,
)

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "ConfigStats",
    "Condition",
    "ConditionReport",
    "DEFAULT_MAX_EVENTS",
    "EDGE_REF",
    "ElementaryCase",
    "ExplicitLaw",
    "InitialLaw",
    "LogDensity",
    "NotApplicable",
    "Orientation",
    "Params",
    "PointKind",
    "PoissonLaw",
    "Preset",
    "Rect",
    "ReversePair",
    "ReversibilityInvariants",
    "RngStream",
    "RunawayDiagramError",
    "Segment",
    "Skeleton",
    "SkeletonSegment",
    "SymmetryElement",
    "VerificationReport",
    "apply_symmetry",
    "bggs",
    "build_diagram",
    "canonical_configuration",
    "check_theorem_pi",
    "check_theorem_pi2",
    "classify_points",
    "compose",
    "config_distance",
    "corollary_pi",
    "corollary_pi2",
    "elementary_density_oracle",
    "extract_stats",
    "forward_kind_map",
    "get_preset",
    "invariants_of",
    "inverse",
    "kernel_name",
    "log_density",
    "map_point",
    "map_rect",
    "preset_names",
    "r_reverse",
    "random_params_satisfying_pi",
    "random_params_satisfying_pi2",
    "restrict",
    "reverse_under",
    "sample_initial_condition",
    "sample_ppp_interval",
    "sample_ppp_rectangle",
    "skeleton_of",
    "stats_map_under_symmetry",
    "swaps_orientation",
    "validate_configuration",
    "verify_density_identity_pi",
    "verify_density_identity_pi2",
    "verify_empty_probability",
    "verify_qr_distribution",
    "verify_stationarity",
]
