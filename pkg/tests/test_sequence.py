import json
from pathlib import Path

import numpy as np
import pytest

from helpers import textured_ref
from intensim import (
    DegenerateInputError,
    DimensionMismatchError,
    RegionGrid,
    SequenceReport,
    compare_sequence,
    compare_sequence_regions,
    emit_report,
    grid_cells,
    synthetic_reference,
)
from intensim.sequence import SEQUENCE_CSV_COLUMNS

DATA = Path(__file__).parent / "data"


def _drift_frames(seed=3, size=8, delta=0.25):
    """Brighten-then-dim trio: f2 adds a constant, f3 returns to f1."""
    f1 = synthetic_reference(size, seed=seed) * 0.6 + 0.1
    f2 = np.clip(f1 + delta, 0.0, 1.0)
    return [f1, f2, f1.copy()]


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

def test_region_grid_default_labels_column_letter_then_row():
    assert RegionGrid(2, 2).cell_labels() == ("A1", "B1", "A2", "B2")
    assert RegionGrid(1, 3).cell_labels() == ("A1", "B1", "C1")
    assert RegionGrid(3, 1).cell_labels() == ("A1", "A2", "A3")


def test_region_grid_labels_past_z_use_two_letters():
    labels = RegionGrid(1, 28).cell_labels()
    assert labels[0] == "A1"
    assert labels[25] == "Z1"
    assert labels[26] == "AA1"
    assert labels[27] == "AB1"


def test_region_grid_custom_labels():
    g = RegionGrid(1, 2, labels=["left", "right"])
    assert g.cell_labels() == ("left", "right")
    with pytest.raises(ValueError, match="labels"):
        RegionGrid(2, 2, labels=["only", "three", "here"])


def test_region_grid_validation():
    with pytest.raises(ValueError):
        RegionGrid(0, 2)
    with pytest.raises(ValueError):
        RegionGrid(2, -1)


def test_grid_cells_remainder_goes_to_last_row_and_column():
    cells = grid_cells(RegionGrid(2, 2), (5, 5))
    assert cells == [
        ("A1", 0, 0, 2, 2),
        ("B1", 2, 0, 3, 2),
        ("A2", 0, 2, 2, 3),
        ("B2", 2, 2, 3, 3),
    ]


def test_grid_cells_tile_the_frame_exactly():
    rng = np.random.default_rng(0)
    for _ in range(20):
        h = int(rng.integers(2, 30))
        w = int(rng.integers(2, 30))
        rows = int(rng.integers(1, h + 1))
        cols = int(rng.integers(1, w + 1))
        cover = np.zeros((h, w), dtype=int)
        for _, left, top, cw, ch in grid_cells(RegionGrid(rows, cols), (h, w)):
            cover[top:top + ch, left:left + cw] += 1
        assert np.all(cover == 1), (h, w, rows, cols)


def test_grid_cells_must_fit():
    with pytest.raises(ValueError, match="fit"):
        grid_cells(RegionGrid(5, 2), (4, 9))


# ---------------------------------------------------------------------------
# sequence comparison
# ---------------------------------------------------------------------------

def test_sequence_brighten_then_dim_signs():
    report = compare_sequence(_drift_frames(), ["ssim-global", "lisi"])
    assert isinstance(report, SequenceReport)
    assert [s.t for s in report.steps] == [1, 2]
    # intensity rises into frame 2 (direc -1), falls back after (direc +1)
    assert report.steps[0].direc == -1
    assert report.steps[1].direc == +1
    for m in ("ssim-global", "lisi"):
        assert report.steps[0].cumulative[m] < 0.0
        assert report.steps[1].cumulative[m] == pytest.approx(0.0, abs=1e-12)


def test_sequence_signed_step_and_cumulative_are_consistent():
    frames = [synthetic_reference(8, seed=s) for s in range(4)]
    report = compare_sequence(frames, ["ssim-global", "lisi"])
    for m in ("ssim-global", "lisi"):
        running = 0.0
        for step in report.steps:
            want = step.direc * (1.0 - step.similarity[m])
            assert step.signed_step[m] == want
            running += want
            assert step.cumulative[m] == running


def test_sequence_direc_uses_raw_values_not_normalized_ones():
    # after joint normalization both frames span [0, 1]; only the raw
    # values can tell which one was brighter
    f1 = synthetic_reference(8, seed=1) * 0.2
    f2 = synthetic_reference(8, seed=1) * 0.2 + 0.5
    report = compare_sequence([f1, f2], ["ssim-global"])
    assert report.steps[0].direc == -1


def test_sequence_identical_frames_are_a_flat_line():
    f = synthetic_reference(8, seed=2)
    report = compare_sequence([f, f.copy(), f.copy()], ["ssim-global"])
    for step in report.steps:
        assert step.direc == 0
        assert step.similarity["ssim-global"] == 1.0
        assert step.signed_step["ssim-global"] == 0.0
        assert step.cumulative["ssim-global"] == 0.0


def test_sequence_reversal_mirrors_steps():
    frames = [synthetic_reference(8, seed=s) * (0.5 + 0.1 * s) for s in range(4)]
    fwd = compare_sequence(frames, ["ssim-global"], mode="adjacent")
    rev = compare_sequence(frames[::-1], ["ssim-global"], mode="adjacent")
    n = len(frames)
    for t in range(1, n):
        f = fwd.steps[n - 1 - t]
        r = rev.steps[t - 1]
        assert r.direc == -f.direc
        assert r.similarity["ssim-global"] == pytest.approx(
            f.similarity["ssim-global"], abs=1e-12
        )


def test_sequence_first_vs_each_mode():
    frames = _drift_frames()
    report = compare_sequence(frames, ["ssim-global"], mode="first-vs-each")
    assert report.mode == "first-vs-each"
    assert len(report.steps) == 2
    # frame 3 equals frame 1, so the second comparison is an identity
    assert report.steps[1].similarity["ssim-global"] == 1.0
    assert report.steps[1].direc == 0


def test_sequence_normalization_modes_disagree_under_drift():
    f1 = synthetic_reference(8, seed=5) * 0.3
    frames = [f1, f1 + 0.2, f1 + 0.4]
    per_pair = compare_sequence(frames, ["ssim-global"], normalization="per-pair")
    whole = compare_sequence(frames, ["ssim-global"], normalization="sequence")
    assert whole.normalization == "sequence"
    a = per_pair.steps[0].similarity["ssim-global"]
    b = whole.steps[0].similarity["ssim-global"]
    assert a != b
    # direc comes from raw values either way
    assert per_pair.steps[0].direc == whole.steps[0].direc == -1


def test_sequence_normalization_degenerate_inputs():
    flat = np.full((4, 4), 0.5)
    with pytest.raises(DegenerateInputError):
        compare_sequence([flat, flat.copy()], ["ssim-global"])  # per-pair
    with pytest.raises(DegenerateInputError):
        compare_sequence([flat, flat.copy()], ["ssim-global"],
                         normalization="sequence")


def test_sequence_validation():
    f = synthetic_reference(8, seed=0)
    with pytest.raises(ValueError, match="2 frames"):
        compare_sequence([f], ["ssim-global"])
    with pytest.raises(DimensionMismatchError):
        compare_sequence([f, np.zeros((4, 4))], ["ssim-global"])
    with pytest.raises(ValueError, match="metric"):
        compare_sequence([f, f], [])
    with pytest.raises(ValueError, match="mode"):
        compare_sequence([f, f], ["ssim-global"], mode="pairwise")
    with pytest.raises(ValueError, match="normalization"):
        compare_sequence([f, f], ["ssim-global"], normalization="none")


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------

def test_single_cell_grid_matches_full_frame_analysis():
    frames = _drift_frames(size=10)
    full = compare_sequence(frames, ["ssim-global", "lisi"])
    regions = compare_sequence_regions(frames, RegionGrid(1, 1),
                                       ["ssim-global", "lisi"])
    assert list(regions) == ["A1"]
    only = regions["A1"]
    assert only.region == "A1"
    for got, want in zip(only.steps, full.steps):
        assert got.similarity == want.similarity
        assert got.direc == want.direc
        assert got.cumulative == want.cumulative


def test_regions_isolate_a_local_change():
    f1 = textured_ref(16, seed=4)
    f2 = f1.copy()
    f2[:8, :8] = np.clip(f2[:8, :8] + 0.3, 0.0, 1.0)  # only cell A1 changes
    reports = compare_sequence_regions([f1, f2], RegionGrid(2, 2),
                                       ["ssim-global"])
    assert set(reports) == {"A1", "B1", "A2", "B2"}
    assert reports["A1"].steps[0].similarity["ssim-global"] < 1.0
    assert reports["A1"].steps[0].direc == -1
    for label in ("B1", "A2", "B2"):
        step = reports[label].steps[0]
        assert step.similarity["ssim-global"] == 1.0
        assert step.direc == 0
        assert step.cumulative["ssim-global"] == 0.0


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def _golden_reports():
    frames = _drift_frames()
    return compare_sequence_regions(frames, RegionGrid(1, 2),
                                    ["ssim-global", "lisi"])


def test_emit_csv_layout():
    data = emit_report(_golden_reports(), "csv")
    assert isinstance(data, bytes)
    lines = data.decode("utf-8").splitlines()
    assert lines[0] == ",".join(SEQUENCE_CSV_COLUMNS)
    assert lines[0] == "region,step_index,metric,similarity,direc,signed_step,cumulative"
    assert len(lines) == 1 + 2 * 2 * 2  # regions * steps * metrics
    cells = lines[1].split(",")
    assert cells[0] == "A1"
    assert cells[1] == "1"
    assert cells[2] == "ssim-global"
    assert cells[4] == "-1"
    float(cells[3]), float(cells[5]), float(cells[6])


def test_emit_csv_matches_golden_bytes():
    golden = (DATA / "sequence_report.csv").read_bytes()
    assert emit_report(_golden_reports(), "csv") == golden


def test_emit_json_document():
    doc = json.loads(emit_report(_golden_reports(), "json"))
    assert doc["mode"] == "adjacent"
    assert doc["normalization"] == "per-pair"
    assert doc["metrics"] == ["ssim-global", "lisi"]
    assert set(doc["regions"]) == {"A1", "B1"}
    steps = doc["regions"]["A1"]["steps"]
    assert [s["t"] for s in steps] == [1, 2]
    assert steps[0]["direc"] == -1
    assert set(steps[0]) == {"t", "direc", "similarity", "signed_step",
                             "cumulative"}


def test_emit_svg_chart():
    data = emit_report(_golden_reports(), "svg")
    text = data.decode("utf-8")
    assert text.startswith("<svg")
    assert text.count("<polyline") == 2 * 2  # one line per region per metric
    assert "region A1" in text and "region B1" in text
    assert "ssim-global" in text and "lisi" in text


def test_emit_svg_matches_golden_bytes():
    golden = (DATA / "sequence_chart.svg").read_bytes()
    assert emit_report(_golden_reports(), "svg") == golden


def test_emit_is_deterministic():
    a = _golden_reports()
    b = _golden_reports()
    for fmt in ("csv", "json", "svg"):
        assert emit_report(a, fmt) == emit_report(b, fmt)


def test_emit_accepts_single_report_and_lists():
    frames = _drift_frames()
    rep = compare_sequence(frames, ["lisi"])
    single = emit_report(rep, "csv")
    listed = emit_report([rep], "csv")
    assert single == listed
    assert single.decode("utf-8").splitlines()[1].startswith("full,")


def test_emit_rejects_empty_and_unknown():
    rep = compare_sequence(_drift_frames(), ["lisi"])
    with pytest.raises(ValueError, match="format"):
        emit_report(rep, "yaml")
    with pytest.raises(ValueError, match="steps"):
        emit_report({}, "csv")
    empty = SequenceReport(region="full", metrics=("lisi",),
                           mode="adjacent", normalization="per-pair")
    with pytest.raises(ValueError, match="steps"):
        emit_report(empty, "csv")
