"""Executable verification suites and the statistics behind them.

Two families of checks live here.  The pointwise identities sample
diagrams, rotate them, and compare log densities under forward and
reverse parameters; when the five-condition algebra holds the equality is
exact up to floating error, so these suites use a tiny tolerance and no
statistical slack.  The distributional suites test consequences of
stationarity and of quasi-reversibility that only hold in law, via
chi-square and Kolmogorov-Smirnov tests on seeded replicates.

Every suite derives one substream per replicate from its seed, so reports
are byte-reproducible regardless of how the replicates are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.special import gammaincc, kolmogorov

from .density import log_density
from .geometry import SymmetryElement, apply_symmetry, map_rect
from .model import Configuration, Params, PointKind, Rect, extract_stats, restrict
from .rng import RngStream
from .sampler import PoissonLaw, build_diagram


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    replicates: int
    seed: int
    threshold: float
    passed: bool
    maxAbsDeviation: float | None = None
    supportViolations: int | None = None
    testStatistics: tuple[tuple[str, float], ...] = field(default=())
    pValues: tuple[tuple[str, float], ...] = field(default=())


def chisq_gof_poisson(counts: list[int], mean: float) -> tuple[float, float]:
    """Chi-square goodness of fit of integer counts against Poisson(mean).

    Bins {0}, {1}, ... are grown greedily until each holds expected mass
    of at least five, with the remaining tail merged into the last bin.
    Needs enough data for two bins.
    """
    if mean <= 0.0:
        raise ValueError(f"mean must be positive, got {mean}")
    size = len(counts)
    if size == 0:
        raise ValueError("no counts supplied")
    # bins as (lo, hi inclusive, probability); hi = -1 marks the tail
    bins: list[tuple[int, int, float]] = []
    pmf = math.exp(-mean)
    cumulative = pmf
    bin_lo = 0
    bin_prob = pmf
    k = 0
    while True:
        tail = 1.0 - cumulative
        if size * tail < 5.0:
            bins.append((bin_lo, -1, bin_prob + tail))
            break
        if size * bin_prob >= 5.0:
            bins.append((bin_lo, k, bin_prob))
            bin_lo = k + 1
            bin_prob = 0.0
        k += 1
        pmf *= mean / k
        cumulative += pmf
        bin_prob += pmf
    if len(bins) >= 2 and size * bins[-1][2] < 5.0:
        lo, _, prob = bins.pop(-2)
        last = bins.pop()
        bins.append((lo, -1, prob + last[2]))
    if len(bins) < 2:
        raise ValueError("too few samples to form two bins")

    observed = [0] * len(bins)
    for value in counts:
        for index, (lo, hi, _) in enumerate(bins):
            if value >= lo and (hi == -1 or value <= hi):
                observed[index] += 1
                break
    statistic = 0.0
    for index, (_, _, prob) in enumerate(bins):
        expected = size * prob
        diff = observed[index] - expected
        statistic += diff * diff / expected
    dof = len(bins) - 1
    return statistic, float(gammaincc(dof / 2.0, statistic / 2.0))


def ks_uniform(points: list[float], lo: float, hi: float) -> tuple[float, float]:
    """One-sample Kolmogorov-Smirnov test against Uniform(lo, hi)."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    size = len(points)
    if size == 0:
        raise ValueError("no points supplied")
    scaled = sorted((value - lo) / (hi - lo) for value in points)
    d_plus = max((i + 1) / size - u for i, u in enumerate(scaled))
    d_minus = max(u - i / size for i, u in enumerate(scaled))
    statistic = max(d_plus, d_minus)
    return statistic, float(kolmogorov(math.sqrt(size) * statistic))


def two_sample_ks(a: list[float], b: list[float]) -> tuple[float, float]:
    """Two-sample Kolmogorov-Smirnov test on real samples.

    Ties are expected (total lengths are exactly zero whenever a diagram
    has no segment of that orientation), so both cursors advance past a
    shared value before the gap is measured.
    """
    if not a or not b:
        raise ValueError("both samples must be nonempty")
    xs = sorted(a)
    ys = sorted(b)
    na, nb = len(xs), len(ys)
    i = j = 0
    statistic = 0.0
    while i < na and j < nb:
        value = xs[i] if xs[i] <= ys[j] else ys[j]
        while i < na and xs[i] == value:
            i += 1
        while j < nb and ys[j] == value:
            j += 1
        gap = abs(i / na - j / nb)
        if gap > statistic:
            statistic = gap
    effective = na * nb / (na + nb)
    return statistic, float(kolmogorov(math.sqrt(effective) * statistic))


def two_sample_chisq(
    features_a: list[tuple[int, ...]], features_b: list[tuple[int, ...]]
) -> tuple[float, float]:
    """Chi-square homogeneity test on two samples of integer vectors.

    Each distinct vector is a category; rare categories are pooled from
    the smallest up until every cell has expected count at least five.
    Raises when pooling leaves fewer than two categories, in which case no
    test is possible.
    """
    if not features_a or not features_b:
        raise ValueError("both feature lists must be nonempty")
    na, nb = len(features_a), len(features_b)
    total = na + nb
    counts: dict[tuple[int, ...], list[int]] = {}
    for vector in features_a:
        counts.setdefault(vector, [0, 0])[0] += 1
    for vector in features_b:
        counts.setdefault(vector, [0, 0])[1] += 1
    # Expected cell count for a category is category_total * n_side / total,
    # so the requirement is category_total >= 5 * total / min(na, nb).
    needed = 5.0 * total / min(na, nb)
    cells = sorted(
        ((a + b, a, b) for a, b in counts.values()), reverse=True
    )
    kept: list[tuple[int, int]] = []
    pooled_a = pooled_b = 0
    for cat_total, a, b in cells:
        if cat_total >= needed:
            kept.append((a, b))
        else:
            pooled_a += a
            pooled_b += b
    if pooled_a + pooled_b > 0:
        if pooled_a + pooled_b >= needed or not kept:
            kept.append((pooled_a, pooled_b))
        else:
            last_a, last_b = kept.pop()
            kept.append((last_a + pooled_a, last_b + pooled_b))
    if len(kept) < 2:
        raise ValueError("fewer than two categories after pooling")
    statistic = 0.0
    for a, b in kept:
        cat_total = a + b
        expected_a = cat_total * na / total
        expected_b = cat_total * nb / total
        statistic += (a - expected_a) ** 2 / expected_a
        statistic += (b - expected_b) ** 2 / expected_b
    dof = len(kept) - 1
    return statistic, float(gammaincc(dof / 2.0, statistic / 2.0))


def independence_z_test(xs: list[float], ys: list[float]) -> tuple[float, float]:
    """Fisher z-test of zero correlation between two paired samples."""
    size = len(xs)
    if size != len(ys):
        raise ValueError("paired samples must have equal length")
    if size <= 3:
        return 0.0, 1.0
    mean_x = sum(xs) / size
    mean_y = sum(ys) / size
    var_x = sum((v - mean_x) ** 2 for v in xs)
    var_y = sum((v - mean_y) ** 2 for v in ys)
    if var_x == 0.0 or var_y == 0.0:
        return 0.0, 1.0
    cov = sum((a - mean_x) * (b - mean_y) for a, b in zip(xs, ys))
    corr = max(-0.999999999999, min(0.999999999999, cov / math.sqrt(var_x * var_y)))
    z = math.atanh(corr) * math.sqrt(size - 3)
    return z, math.erfc(abs(z) / math.sqrt(2.0))


def _stats_vector(config: Configuration) -> tuple[int, ...]:
    return extract_stats(config).count_vector()


def verify_density_identity_pi(
    p: Params,
    pt: Params,
    nuH: float,
    nuV: float,
    rect: Rect,
    n: int,
    seed: int,
    tol: float = 1e-9,
) -> VerificationReport:
    """Pointwise half-turn density identity over n sampled diagrams.

    Each diagram's log density under (p, PPP(nuH, nuV)) must equal the log
    density of its half-turn image under (pt, same law).  Passing means
    the maximum absolute deviation stays within tol and every image lies
    in the reverse model's support.
    """
    law = PoissonLaw(nuH=nuH, nuV=nuV)
    rng = RngStream(seed)
    max_dev = 0.0
    violations = 0
    for i in range(n):
        diagram = build_diagram(p, law, rect, rng.substream(i))
        forward = log_density(diagram, p, law)
        image = apply_symmetry(SymmetryElement.PI, diagram)
        backward = log_density(image, pt, law)
        if not (forward.finiteSupport and backward.finiteSupport):
            violations += 1
            continue
        max_dev = max(max_dev, abs(forward.value - backward.value))
    return VerificationReport(
        kind="density-identity-pi",
        replicates=n,
        seed=seed,
        threshold=tol,
        passed=(violations == 0 and max_dev <= tol),
        maxAbsDeviation=max_dev,
        supportViolations=violations,
    )


def verify_density_identity_pi2(
    p: Params,
    pt: Params,
    nuH: float,
    nuV: float,
    rect: Rect,
    n: int,
    seed: int,
    tol: float = 1e-9,
) -> VerificationReport:
    """Pointwise quarter-turn density identity over n sampled diagrams.

    The image diagram lives on the rotated rectangle and its density is
    taken under (pt, PPP(nuV, nuH)): the quarter turn carries bottom-edge
    entries to the left edge and vice versa, so the intensities swap.
    """
    law = PoissonLaw(nuH=nuH, nuV=nuV)
    reverse_law = PoissonLaw(nuH=nuV, nuV=nuH)
    rng = RngStream(seed)
    max_dev = 0.0
    violations = 0
    for i in range(n):
        diagram = build_diagram(p, law, rect, rng.substream(i))
        forward = log_density(diagram, p, law)
        image = apply_symmetry(SymmetryElement.PI2, diagram)
        backward = log_density(image, pt, reverse_law)
        if not (forward.finiteSupport and backward.finiteSupport):
            violations += 1
            continue
        max_dev = max(max_dev, abs(forward.value - backward.value))
    return VerificationReport(
        kind="density-identity-pi2",
        replicates=n,
        seed=seed,
        threshold=tol,
        passed=(violations == 0 and max_dev <= tol),
        maxAbsDeviation=max_dev,
        supportViolations=violations,
    )


def verify_empty_probability(
    p: Params, nuH: float, nuV: float, rect: Rect, n: int, seed: int
) -> VerificationReport:
    """Monte Carlo check of the closed-form empty-diagram probability.

    The diagram is empty exactly when no entry and no creation occurs, so
    the target is exp(-nuV*w - nuH*h - lambda0*w*h); the suite passes when
    the empirical frequency is within four binomial standard deviations.
    """
    law = PoissonLaw(nuH=nuH, nuV=nuV)
    rng = RngStream(seed)
    empty = 0
    for i in range(n):
        diagram = build_diagram(p, law, rect, rng.substream(i))
        if not diagram.segments:
            empty += 1
    target = math.exp(
        -nuV * rect.width - nuH * rect.height - p.lambda0 * rect.width * rect.height
    )
    sigma = math.sqrt(target * (1.0 - target) / n)
    frequency = empty / n
    deviation = abs(frequency - target)
    return VerificationReport(
        kind="empty-probability",
        replicates=n,
        seed=seed,
        threshold=4.0 * sigma,
        passed=deviation <= 4.0 * sigma,
        maxAbsDeviation=deviation,
        testStatistics=(
            ("frequency", frequency),
            ("target", target),
            ("sigma", sigma),
        ),
    )


def verify_stationarity(
    p: Params,
    nuH: float,
    nuV: float,
    rect: Rect,
    shift: tuple[float, float],
    n: int,
    seed: int,
    alpha: float = 1e-3,
) -> VerificationReport:
    """Statistical test that PPP(nuH, nuV) is stationary for the model.

    Stationarity makes the diagram restricted to a shifted sub-rectangle
    a fresh diagram in law.  Two necessary consequences are tested over n
    replicates: the entry trace on the sub-rectangle's lower-left edges is
    again PPP(nuH, nuV) (Poisson counts, uniform positions, independent
    edges), and the full statistics vector of the restriction matches
    that of an independently simulated diagram of the same size.
    """
    dx, dy = shift
    if dx <= 0 or dy <= 0:
        raise ValueError("shift must be positive in both coordinates")
    sub = Rect(x0=rect.x0 + dx, y0=rect.y0 + dy, x1=rect.x1, y1=rect.y1)
    fresh_rect = Rect(
        x0=rect.x0, y0=rect.y0, x1=rect.x0 + sub.width, y1=rect.y0 + sub.height
    )
    law = PoissonLaw(nuH=nuH, nuV=nuV)
    rng = RngStream(seed)

    counts_h: list[int] = []
    counts_v: list[int] = []
    entry_ys: list[float] = []
    entry_xs: list[float] = []
    stats_restricted: list[tuple[int, ...]] = []
    stats_fresh: list[tuple[int, ...]] = []
    lv_restricted: list[float] = []
    lv_fresh: list[float] = []
    lh_restricted: list[float] = []
    lh_fresh: list[float] = []

    for i in range(n):
        diagram = build_diagram(p, law, rect, rng.substream(0, i))
        fresh = build_diagram(p, law, fresh_rect, rng.substream(1, i))
        clipped = restrict(diagram, sub)
        ys = [
            seg.anchor
            for seg in clipped.horizontals
            if seg.loKind is PointKind.HE
        ]
        xs = [
            seg.anchor for seg in clipped.verticals if seg.loKind is PointKind.VE
        ]
        counts_h.append(len(ys))
        counts_v.append(len(xs))
        entry_ys.extend(ys)
        entry_xs.extend(xs)
        stat_r = extract_stats(clipped)
        stat_f = extract_stats(fresh)
        stats_restricted.append(stat_r.count_vector())
        stats_fresh.append(stat_f.count_vector())
        lv_restricted.append(stat_r.LV)
        lv_fresh.append(stat_f.LV)
        lh_restricted.append(stat_r.LH)
        lh_fresh.append(stat_f.LH)

    statistics: list[tuple[str, float]] = []
    p_values: list[tuple[str, float]] = []

    def record(name: str, stat: float, p_value: float) -> None:
        statistics.append((name, stat))
        p_values.append((name, p_value))

    stat, p_value = chisq_gof_poisson(counts_h, nuH * sub.height)
    record("left-entry-counts-poisson", stat, p_value)
    stat, p_value = chisq_gof_poisson(counts_v, nuV * sub.width)
    record("bottom-entry-counts-poisson", stat, p_value)
    if entry_ys:
        stat, p_value = ks_uniform(entry_ys, sub.y0, sub.y1)
        record("left-entry-positions-uniform", stat, p_value)
    if entry_xs:
        stat, p_value = ks_uniform(entry_xs, sub.x0, sub.x1)
        record("bottom-entry-positions-uniform", stat, p_value)
    stat, p_value = independence_z_test(
        [float(c) for c in counts_h], [float(c) for c in counts_v]
    )
    record("entry-count-independence", stat, p_value)
    stat, p_value = two_sample_chisq(stats_restricted, stats_fresh)
    record("stats-vector-homogeneity", stat, p_value)
    stat, p_value = two_sample_ks(lv_restricted, lv_fresh)
    record("vertical-length-ks", stat, p_value)
    stat, p_value = two_sample_ks(lh_restricted, lh_fresh)
    record("horizontal-length-ks", stat, p_value)

    passed = all(value >= alpha for _, value in p_values)
    return VerificationReport(
        kind="stationarity",
        replicates=n,
        seed=seed,
        threshold=alpha,
        passed=passed,
        testStatistics=tuple(statistics),
        pValues=tuple(p_values),
    )


def verify_qr_distribution(
    g: SymmetryElement,
    p: Params,
    pt: Params,
    forwardNu: tuple[float, float],
    reverseNu: tuple[float, float],
    rect: Rect,
    n: int,
    seed: int,
    alpha: float = 1e-3,
) -> VerificationReport:
    """Two-sample test that g-images of (p)-diagrams match (pt)-diagrams.

    Samples n diagrams under (p, PPP(forwardNu)), applies g, and compares
    their statistics vectors and total lengths against n fresh diagrams
    under (pt, PPP(reverseNu)) on the g-image rectangle.
    """
    if g not in (SymmetryElement.PI, SymmetryElement.PI2):
        raise ValueError("distributional checks cover the half and quarter turns")
    forward_law = PoissonLaw(nuH=forwardNu[0], nuV=forwardNu[1])
    reverse_law = PoissonLaw(nuH=reverseNu[0], nuV=reverseNu[1])
    image_rect = map_rect(g, rect)
    rng = RngStream(seed)

    stats_image: list[tuple[int, ...]] = []
    stats_reverse: list[tuple[int, ...]] = []
    lv_image: list[float] = []
    lv_reverse: list[float] = []
    lh_image: list[float] = []
    lh_reverse: list[float] = []
    for i in range(n):
        diagram = build_diagram(p, forward_law, rect, rng.substream(0, i))
        image = apply_symmetry(g, diagram)
        other = build_diagram(pt, reverse_law, image_rect, rng.substream(1, i))
        stat_a = extract_stats(image)
        stat_b = extract_stats(other)
        stats_image.append(stat_a.count_vector())
        stats_reverse.append(stat_b.count_vector())
        lv_image.append(stat_a.LV)
        lv_reverse.append(stat_b.LV)
        lh_image.append(stat_a.LH)
        lh_reverse.append(stat_b.LH)

    statistics: list[tuple[str, float]] = []
    p_values: list[tuple[str, float]] = []
    stat, p_value = two_sample_chisq(stats_image, stats_reverse)
    statistics.append(("stats-vector-homogeneity", stat))
    p_values.append(("stats-vector-homogeneity", p_value))
    stat, p_value = two_sample_ks(lv_image, lv_reverse)
    statistics.append(("vertical-length-ks", stat))
    p_values.append(("vertical-length-ks", p_value))
    stat, p_value = two_sample_ks(lh_image, lh_reverse)
    statistics.append(("horizontal-length-ks", stat))
    p_values.append(("horizontal-length-ks", p_value))

    passed = all(value >= alpha for _, value in p_values)
    return VerificationReport(
        kind="qr-distribution",
        replicates=n,
        seed=seed,
        threshold=alpha,
        passed=passed,
        testStatistics=tuple(statistics),
        pValues=tuple(p_values),
    )
