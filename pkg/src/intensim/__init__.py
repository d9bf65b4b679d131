"""Intensity-sensitive image similarity indexes.

Full-reference image quality assessment for low-information images:
images whose meaningful content sits in a small fraction of bright
pixels.  Alongside the classic SSIM family (global, windowed,
multi-scale, gradient), the package provides intensity-weighted SSIM
variants and the low-information similarity index, plus the sensitivity
and direction indexes, synthetic noise experiments, and sequential
change analysis.  The ``intensim`` command exposes all of it from the
shell.
"""

from .errors import (
    AllZeroWeightsWarning,
    ConfigError,
    DegenerateInputError,
    DimensionMismatchError,
    ImageLoadError,
    UndefinedSensitivityError,
)
from .image import (
    FORMATS,
    as_image,
    crop,
    intensity_mask,
    load_image,
    mask_pixel_count,
    normalize_joint,
    require_same_shape,
)
from .indexes import direc, sensi
from .metrics import (
    DEFAULT_WEIGHTINGS,
    METRIC_IDS,
    MetricParams,
    MetricResult,
    WeightingSpec,
    compute_metric,
    g_ssim,
    itw_ssim,
    lisi,
    ms_ssim,
    ssim_global,
    ssim_windowed,
    weighting_factors,
    weighting_function,
)
from .sequence import (
    RegionGrid,
    SequenceReport,
    SequenceStep,
    compare_sequence,
    compare_sequence_regions,
    emit_report,
    grid_cells,
)
from .synth import (
    CurvePoint,
    NoiseGroupReport,
    NoiseSpec,
    curve_points_csv,
    generate_curve_pairs,
    histogram_json,
    inject_noise,
    noise_rows_csv,
    run_characteristic_curves,
    run_noise_groups,
    synthetic_reference,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroWeightsWarning",
    "ConfigError",
    "CurvePoint",
    "DEFAULT_WEIGHTINGS",
    "DegenerateInputError",
    "DimensionMismatchError",
    "FORMATS",
    "ImageLoadError",
    "METRIC_IDS",
    "MetricParams",
    "MetricResult",
    "NoiseGroupReport",
    "NoiseSpec",
    "RegionGrid",
    "SequenceReport",
    "SequenceStep",
    "UndefinedSensitivityError",
    "WeightingSpec",
    "as_image",
    "compare_sequence",
    "compare_sequence_regions",
    "compute_metric",
    "crop",
    "curve_points_csv",
    "direc",
    "emit_report",
    "g_ssim",
    "generate_curve_pairs",
    "grid_cells",
    "histogram_json",
    "inject_noise",
    "intensity_mask",
    "itw_ssim",
    "lisi",
    "load_image",
    "mask_pixel_count",
    "ms_ssim",
    "noise_rows_csv",
    "normalize_joint",
    "require_same_shape",
    "run_characteristic_curves",
    "run_noise_groups",
    "sensi",
    "ssim_global",
    "ssim_windowed",
    "synthetic_reference",
    "weighting_factors",
    "weighting_function",
]
