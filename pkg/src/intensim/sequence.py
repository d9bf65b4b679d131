"""Time-ordered image-sequence analysis.

A sequence of registered frames is compared pairwise (adjacent frames,
or the first frame against each later one), per pair and per metric.
Each comparison yields a similarity, a direction sign from the raw
intensities, and a signed step direc * (1 - similarity); the running sum
of signed steps draws a polyline that rises while total intensity falls
and falls while it rises.  Frames can be split into a grid of regions
that are analyzed independently.  Reports serialize to CSV, JSON, or an
SVG chart.
"""

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .chart import render_line_chart
from .errors import DegenerateInputError, DimensionMismatchError
from .image import as_image, crop, normalize_joint
from .indexes import direc
from .metrics import MetricParams, compute_metric

SEQUENCE_CSV_COLUMNS = ("region", "step_index", "metric", "similarity",
                        "direc", "signed_step", "cumulative")
MODES = ("adjacent", "first-vs-each")
NORMALIZATIONS = ("per-pair", "sequence")


def _column_label(index: int) -> str:
    # spreadsheet-style letters: A..Z, AA, AB, ...
    label = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        label = chr(ord("A") + rem) + label
    return label


@dataclass(frozen=True)
class RegionGrid:
    """A rows x cols partition of the frame with per-cell labels.

    Default labels are spreadsheet-style, column letter then row number,
    so the cell in grid position (row 1, col 1) of a larger grid is "B2".
    Remainder pixels that do not divide evenly go to the last row/column.
    """

    rows: int
    cols: int
    labels: tuple | None = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid must have at least one row and one column")
        if self.labels is not None:
            if len(self.labels) != self.rows * self.cols:
                raise ValueError(
                    f"expected {self.rows * self.cols} labels, "
                    f"got {len(self.labels)}"
                )
            object.__setattr__(self, "labels", tuple(self.labels))

    def cell_labels(self) -> tuple:
        if self.labels is not None:
            return self.labels
        return tuple(
            f"{_column_label(c)}{r + 1}"
            for r in range(self.rows) for c in range(self.cols)
        )


def grid_cells(grid: RegionGrid, shape) -> list:
    """Cell boxes for a frame shape, row-major: (label, left, top, w, h)."""
    h, w = shape
    if grid.rows > h or grid.cols > w:
        raise ValueError(
            f"grid {grid.rows}x{grid.cols} does not fit a {w}x{h} frame"
        )
    row_h = h // grid.rows
    col_w = w // grid.cols
    labels = grid.cell_labels()
    cells = []
    for r in range(grid.rows):
        top = r * row_h
        cell_h = row_h if r < grid.rows - 1 else h - top
        for c in range(grid.cols):
            left = c * col_w
            cell_w = col_w if c < grid.cols - 1 else w - left
            cells.append((labels[r * grid.cols + c], left, top, cell_w, cell_h))
    return cells


@dataclass(frozen=True)
class SequenceStep:
    """One pairwise comparison inside a sequence report."""

    t: int
    similarity: dict
    direc: int
    signed_step: dict
    cumulative: dict


@dataclass(frozen=True)
class SequenceReport:
    """Ordered comparison steps for one region of a frame sequence."""

    region: str
    metrics: tuple
    mode: str
    normalization: str
    steps: tuple = field(default_factory=tuple)


def _check_frames(frames) -> list:
    arrays = [as_image(f) for f in frames]
    if len(arrays) < 2:
        raise ValueError("a sequence needs at least 2 frames")
    first = arrays[0]
    for a in arrays[1:]:
        if a.shape != first.shape:
            raise DimensionMismatchError(
                f"frame shapes differ: {first.shape} vs {a.shape}"
            )
    return arrays


def _pair_indices(n: int, mode: str) -> list:
    if mode == "adjacent":
        return [(i, i + 1) for i in range(n - 1)]
    if mode == "first-vs-each":
        return [(0, i) for i in range(1, n)]
    raise ValueError(f"unknown mode {mode!r}")


def compare_sequence(frames, metrics, mode: str = "adjacent",
                     params: MetricParams | None = None,
                     normalization: str = "per-pair",
                     region: str = "full") -> SequenceReport:
    """Pairwise comparison report over an ordered frame list.

    For each compared pair the direction sign is taken from the raw
    values (normalization can flip which frame is brighter), the pair is
    jointly normalized, every metric is scored, and the signed step
    direc * (1 - similarity) is accumulated into the cumulative value.
    `normalization` "per-pair" rescales each pair by its own joint
    extrema; "sequence" rescales all frames once by the sequence-wide
    extrema.  Steps are numbered from 1; the implicit starting point of
    the cumulative polyline is 0.
    """
    arrays = _check_frames(frames)
    if not metrics:
        raise ValueError("at least one metric is required")
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    pairs = _pair_indices(len(arrays), mode)

    normalized = arrays
    if normalization == "sequence":
        stack = np.concatenate([a.ravel() for a in arrays])
        lo = stack.min()
        span = stack.max() - lo
        if span <= 0.0:
            raise DegenerateInputError(
                "frames have no sequence-wide intensity range"
            )
        normalized = [(a - lo) / span for a in arrays]

    steps = []
    cumulative = dict.fromkeys(metrics, 0.0)
    for t, (i, j) in enumerate(pairs, start=1):
        d = direc(arrays[i], arrays[j])
        if normalization == "per-pair":
            a, b = normalize_joint(arrays[i], arrays[j])
        else:
            a, b = normalized[i], normalized[j]
        similarity = {m: compute_metric(m, a, b, params).score for m in metrics}
        signed = {m: d * (1.0 - similarity[m]) for m in metrics}
        cumulative = {m: cumulative[m] + signed[m] for m in metrics}
        steps.append(SequenceStep(t=t, similarity=similarity, direc=d,
                                  signed_step=signed, cumulative=dict(cumulative)))
    return SequenceReport(region=region, metrics=tuple(metrics), mode=mode,
                          normalization=normalization, steps=tuple(steps))


def compare_sequence_regions(frames, grid: RegionGrid, metrics,
                             mode: str = "adjacent",
                             params: MetricParams | None = None,
                             normalization: str = "per-pair") -> dict:
    """Run compare_sequence per grid cell; returns label -> report."""
    arrays = _check_frames(frames)
    reports = {}
    for label, left, top, w, h in grid_cells(grid, arrays[0].shape):
        crops = [crop(a, left, top, w, h) for a in arrays]
        reports[label] = compare_sequence(crops, metrics, mode, params,
                                          normalization, region=label)
    return reports


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

def _as_report_list(report) -> list:
    if isinstance(report, SequenceReport):
        reports = [report]
    elif isinstance(report, dict):
        reports = list(report.values())
    else:
        reports = list(report)
    if not reports or any(not r.steps for r in reports):
        raise ValueError("report has no steps to emit")
    return reports


def emit_report(report, format: str = "csv") -> bytes:
    """Serialize one report or a region map of reports.

    "csv" gives one row per (region, step, metric); "json" the full
    structure plus metadata; "svg" a chart with one cumulative polyline
    per metric per region and a legend naming each metric's stroke.
    """
    reports = _as_report_list(report)
    if format == "csv":
        return _emit_csv(reports)
    if format == "json":
        return _emit_json(reports)
    if format == "svg":
        return _emit_svg(reports)
    raise ValueError(f"unknown report format {format!r}")


def _emit_csv(reports) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SEQUENCE_CSV_COLUMNS)
    for rep in reports:
        for step in rep.steps:
            for m in rep.metrics:
                writer.writerow([
                    rep.region, step.t, m,
                    repr(float(step.similarity[m])),
                    step.direc,
                    repr(float(step.signed_step[m])),
                    repr(float(step.cumulative[m])),
                ])
    return buf.getvalue().encode("utf-8")


def _emit_json(reports) -> bytes:
    doc = {
        "mode": reports[0].mode,
        "normalization": reports[0].normalization,
        "metrics": list(reports[0].metrics),
        "regions": {
            rep.region: {
                "steps": [
                    {
                        "t": step.t,
                        "direc": step.direc,
                        "similarity": step.similarity,
                        "signed_step": step.signed_step,
                        "cumulative": step.cumulative,
                    }
                    for step in rep.steps
                ]
            }
            for rep in reports
        },
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _emit_svg(reports) -> bytes:
    panels = []
    for rep in reports:
        series = []
        for m in rep.metrics:
            points = [(0.0, 0.0)]
            points += [(float(step.t), step.cumulative[m]) for step in rep.steps]
            series.append((m, points))
        panels.append((f"region {rep.region}", series))
    return render_line_chart(panels).encode("utf-8")
