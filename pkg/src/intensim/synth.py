"""Synthetic experiment machinery.

Two protocols live here.  Characteristic curves perturb a controlled
fraction of an intensity band and trace each metric's score against the
known similarity level.  Noise groups inject seeded noise into the
highest or lowest intensity band of reference images, score every metric
against the clean reference, and aggregate the sensitivity index into
per-group histograms and mean/SD summaries.

Everything is deterministic given the seeds.  The generator is numpy's
default PCG64; its name is recorded in report metadata because runs are
only reproducible when the same algorithm is used.
"""

import csv
import io
import json
from dataclasses import dataclass, replace

import numpy as np
from scipy import ndimage

from .errors import DegenerateInputError, UndefinedSensitivityError
from .image import as_image, intensity_mask, mask_pixel_count
from .indexes import sensi
from .metrics import MetricParams, compute_metric

RNG_ALGORITHM = "PCG64"
DEFAULT_FRACTION = 0.35
DEFAULT_COVERAGE = 0.5
DEFAULT_HISTOGRAM_BINS = 20

NOISE_CSV_COLUMNS = ("group", "distribution", "amplitude", "band",
                     "metric", "score", "sensi")
CURVE_CSV_COLUMNS = ("band", "similarity_level", "metric", "score")

_DISTRIBUTIONS = ("uniform", "gaussian", "rayleigh")
_BANDS = ("highest", "lowest")


def _group_name(band: str) -> str:
    return "high-intensity" if band == "highest" else "low-intensity"


def _check_normalized(x: np.ndarray, name: str) -> np.ndarray:
    x = as_image(x)
    if x.min() < 0.0 or x.max() > 1.0:
        raise ValueError(f"{name} must be normalized to [0, 1]")
    return x


@dataclass(frozen=True)
class NoiseSpec:
    """Recipe for one noise condition.

    distribution : "uniform" (additive on [-a, a]), "gaussian" (additive
        zero-mean, std a), or "rayleigh" (additive non-negative, scale a)
    amplitude : the parameter a; zero is allowed as the no-noise limit
    band : which intensity band receives noise, "highest" or "lowest"
    fraction : size of the band as a fraction of all pixels
    seed : RNG seed, 64-bit unsigned
    coverage : fraction of the band pixels that actually receive noise;
        1.0 noises the whole band, smaller values draw a random subset,
        which is how repeated runs get different noise positions
    """

    distribution: str
    amplitude: float
    band: str = "highest"
    fraction: float = DEFAULT_FRACTION
    seed: int = 0
    coverage: float = 1.0

    def __post_init__(self):
        if self.distribution not in _DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.band not in _BANDS:
            raise ValueError(f"band must be 'highest' or 'lowest', got {self.band!r}")
        if self.amplitude < 0.0:
            raise ValueError("amplitude must be non-negative")
        if not 0.0 < self.fraction < 1.0:
            raise ValueError("fraction must lie strictly between 0 and 1")
        if not 0.0 < self.coverage <= 1.0:
            raise ValueError("coverage must lie in (0, 1]")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


def inject_noise(x, spec: NoiseSpec) -> np.ndarray:
    """Add seeded noise to one intensity band of a normalized image.

    Pixels inside intensity_mask(x, spec.band, spec.fraction), or a
    seeded random subset of them when spec.coverage < 1, receive additive
    noise from the spec's distribution; the result is clamped to [0, 1].
    Pixels outside the noised set are bit-identical to the input.
    """
    x = _check_normalized(x, "input image")
    mask = intensity_mask(x, spec.band, spec.fraction)
    positions = np.flatnonzero(mask.ravel())
    rng = np.random.default_rng(int(spec.seed))
    if spec.coverage < 1.0:
        take = mask_pixel_count(spec.coverage, positions.size)
        positions = rng.choice(positions, size=take, replace=False)
    a = spec.amplitude
    if spec.distribution == "uniform":
        noise = rng.uniform(-a, a, size=positions.size)
    elif spec.distribution == "gaussian":
        noise = rng.normal(0.0, a, size=positions.size)
    else:
        noise = rng.rayleigh(a, size=positions.size) if a > 0.0 else np.zeros(positions.size)
    out = x.copy()
    flat = out.ravel()
    flat[positions] = np.clip(flat[positions] + noise, 0.0, 1.0)
    return out


def synthetic_reference(size: int = 64, seed: int = 0, blur: float = 2.0) -> np.ndarray:
    """Bundled synthetic reference: a smoothed random field on [0, 1].

    A seeded standard-normal field is Gaussian-blurred (width `blur`) and
    min-max rescaled, giving a smooth textured image with a full
    intensity range.  Used by the command line when no reference file is
    supplied.
    """
    if size < 2:
        raise ValueError("size must be at least 2")
    rng = np.random.default_rng(int(seed))
    field = rng.normal(size=(size, size))
    smooth = ndimage.gaussian_filter(field, sigma=blur, mode="reflect")
    lo = smooth.min()
    span = smooth.max() - lo
    if span <= 0.0:
        raise DegenerateInputError("smoothed field has no intensity range")
    return (smooth - lo) / span


# ---------------------------------------------------------------------------
# characteristic curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    """One point of a characteristic curve.

    similarity_level is the controlled ground truth: the fraction of band
    pixels left untouched.  scores maps metric identifier to its value on
    the (reference, perturbed) pair.
    """

    similarity_level: float
    band: str
    scores: dict


def generate_curve_pairs(base, levels, band: str = "highest", seed: int = 0,
                         fraction: float = DEFAULT_FRACTION):
    """Image pairs with controlled similarity levels inside one band.

    For each level s, a fraction (1 - s) of the pixels in the selected
    intensity band is replaced by seeded uniform noise on [0, 1); s = 1
    returns an identical pair.  Returns a list of (base, perturbed, s).

    All levels share a single pixel order and a single noise field, so
    the perturbed sets are nested: lowering s only replaces additional
    pixels and never changes already-replaced values.  That makes
    sweeps comparable point-to-point under one seed.
    """
    base = _check_normalized(base, "base image")
    levels = [float(s) for s in levels]
    if not levels:
        raise ValueError("levels must not be empty")
    if any(not 0.0 < s <= 1.0 for s in levels):
        raise ValueError("every level must lie in (0, 1]")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly increasing")
    mask = intensity_mask(base, band, fraction)
    positions = np.flatnonzero(mask.ravel())
    rng = np.random.default_rng(int(seed))
    order = rng.permutation(positions)
    noise = rng.uniform(0.0, 1.0, size=positions.size)
    pairs = []
    for s in levels:
        replaced = mask_pixel_count(1.0 - s, positions.size)
        perturbed = base.copy()
        perturbed.ravel()[order[:replaced]] = noise[:replaced]
        pairs.append((base, perturbed, s))
    return pairs


def run_characteristic_curves(base, metrics, levels, seed: int = 0,
                              params: MetricParams | None = None,
                              fraction: float = DEFAULT_FRACTION):
    """Trace every metric across similarity levels in both bands.

    Generates curve pairs for the highest and the lowest band with the
    same seed and scores each requested metric on each pair.  Returns
    CurvePoints ordered by band (highest first) then by level.
    """
    if not metrics:
        raise ValueError("at least one metric is required")
    points = []
    for band in _BANDS:
        for ref, perturbed, s in generate_curve_pairs(base, levels, band, seed, fraction):
            scores = {m: compute_metric(m, ref, perturbed, params).score
                      for m in metrics}
            points.append(CurvePoint(similarity_level=s, band=band, scores=scores))
    return points


def curve_points_csv(points) -> str:
    """CSV rendering of CurvePoints: band, similarity_level, metric, score."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CURVE_CSV_COLUMNS)
    for p in points:
        for metric, score in p.scores.items():
            writer.writerow([p.band, repr(float(p.similarity_level)),
                             metric, repr(float(score))])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# noise groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NoiseGroupReport:
    """Outcome of a noise-group run.

    rows : one dict per (reference, spec, repeat, metric) with keys
        matching NOISE_CSV_COLUMNS ("sensi" is None where the baseline
        saturated at 1 and the index is undefined)
    histograms : group -> metric -> {"bin_edges": [...], "counts": [...]}
    summary : group -> metric -> {"mean": float, "sd": float, "count": int,
        "undefined": int}
    metadata : run parameters sufficient to reproduce the report
    """

    rows: list
    histograms: dict
    summary: dict
    metadata: dict


def _derived_seed(seed: int, *key: int) -> int:
    ss = np.random.SeedSequence((int(seed),) + tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])


def run_noise_groups(refs, noise_specs, metrics, repeats: int = 10,
                     seed: int = 0, baseline: str = "ssim-windowed",
                     params: MetricParams | None = None,
                     coverage: float = DEFAULT_COVERAGE,
                     bins: int = DEFAULT_HISTOGRAM_BINS) -> NoiseGroupReport:
    """Noise-injection experiment with per-group sensitivity statistics.

    For every reference, noise spec, and repeat, a noisy image is built
    with a fresh derived seed and a fresh random choice of noised
    positions (`coverage` of the band; this is what varies between
    repeats), each metric is scored against the clean reference, and its
    sensitivity relative to the `baseline` metric is recorded.  Rows are
    grouped by the band into "high-intensity" and "low-intensity" and
    aggregated into histograms and mean/SD summaries per metric.

    A saturated baseline (score exactly 1) makes sensi undefined; such
    rows carry None instead of failing the run.
    """
    refs = [(_check_normalized(r, f"reference {i}")) for i, r in enumerate(refs)]
    if not refs:
        raise ValueError("at least one reference is required")
    if not noise_specs:
        raise ValueError("at least one noise spec is required")
    if not metrics:
        raise ValueError("at least one metric is required")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")

    rows = []
    values: dict = {}
    for ri, ref in enumerate(refs):
        for si, spec in enumerate(noise_specs):
            group = _group_name(spec.band)
            for rep in range(repeats):
                run_spec = replace(spec, coverage=coverage,
                                   seed=_derived_seed(seed, ri, si, rep))
                noisy = inject_noise(ref, run_spec)
                base_score = compute_metric(baseline, ref, noisy, params).score
                for metric in metrics:
                    score = compute_metric(metric, ref, noisy, params).score
                    try:
                        s = sensi(base_score, score)
                    except UndefinedSensitivityError:
                        s = None
                    rows.append({
                        "group": group,
                        "distribution": spec.distribution,
                        "amplitude": spec.amplitude,
                        "band": spec.band,
                        "metric": metric,
                        "score": score,
                        "sensi": s,
                    })
                    if s is not None:
                        values.setdefault(group, {}).setdefault(metric, []).append(s)

    histograms: dict = {}
    summary: dict = {}
    groups = sorted({r["group"] for r in rows})
    for group in groups:
        histograms[group] = {}
        summary[group] = {}
        for metric in metrics:
            vals = np.asarray(values.get(group, {}).get(metric, []),
                              dtype=np.float64)
            defined = vals.size
            total = sum(1 for r in rows
                        if r["group"] == group and r["metric"] == metric)
            if defined:
                counts, edges = np.histogram(vals, bins=bins)
                histograms[group][metric] = {
                    "bin_edges": [float(e) for e in edges],
                    "counts": [int(c) for c in counts],
                }
                mean = float(np.mean(vals))
                sd = float(np.std(vals, ddof=1)) if defined > 1 else 0.0
            else:
                histograms[group][metric] = {"bin_edges": [], "counts": []}
                mean = sd = None
            summary[group][metric] = {
                "mean": mean,
                "sd": sd,
                "count": int(defined),
                "undefined": int(total - defined),
            }

    metadata = {
        "rng": RNG_ALGORITHM,
        "seed": int(seed),
        "repeats": int(repeats),
        "coverage": float(coverage),
        "baseline": baseline,
        "bins": int(bins),
        "references": len(refs),
        "specs": [
            {"distribution": sp.distribution, "amplitude": sp.amplitude,
             "band": sp.band, "fraction": sp.fraction}
            for sp in noise_specs
        ],
    }
    return NoiseGroupReport(rows=rows, histograms=histograms,
                            summary=summary, metadata=metadata)


def noise_rows_csv(report: NoiseGroupReport) -> str:
    """CSV rendering of a noise-group report, one row per scored metric."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(NOISE_CSV_COLUMNS)
    for r in report.rows:
        writer.writerow([
            r["group"], r["distribution"], repr(float(r["amplitude"])),
            r["band"], r["metric"], repr(float(r["score"])),
            "" if r["sensi"] is None else repr(float(r["sensi"])),
        ])
    return buf.getvalue()


def histogram_json(report: NoiseGroupReport) -> str:
    """JSON rendering of the per-group histograms, summary, and metadata."""
    doc = {
        "metadata": report.metadata,
        "histograms": report.histograms,
        "summary": report.summary,
    }
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"
