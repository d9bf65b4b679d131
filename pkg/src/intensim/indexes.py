"""Auxiliary indexes derived from similarity scores and image pairs.

sensi quantifies how strongly a candidate metric reacts to a change that a
baseline metric barely registers; direc attaches a sign to the change so
sequence analysis can distinguish intensity gain from loss.
"""

import numpy as np

from .errors import UndefinedSensitivityError
from .image import as_image, require_same_shape

DIREC_TOLERANCE = 1e-12


def sensi(baseline: float, candidate: float) -> float:
    """Relative sensitivity of a candidate score against a baseline.

        sensi = (baseline - candidate) / (1 - baseline)

    Positive values mean the candidate metric dropped further than the
    baseline did, scaled by the headroom the baseline left; a value of 32
    reads as "32 times more sensitive than the baseline".  Undefined when
    the baseline saturates at exactly 1.
    """
    baseline = float(baseline)
    candidate = float(candidate)
    if baseline == 1.0:
        raise UndefinedSensitivityError(
            "sensitivity is undefined for a baseline score of exactly 1"
        )
    return (baseline - candidate) / (1.0 - baseline)


def direc(x, y) -> int:
    """Direction of the intensity change from x to y: +1, -1, or 0.

    Sign of sum(x_i - y_i), so +1 means the first image carries more
    total intensity.  Sums within 1e-12 per pixel of zero count as no
    change.  Inputs need the same shape but are otherwise unrestricted;
    in sequence analysis this is applied to the raw values on purpose,
    because joint normalization can flip which image is brighter.
    """
    x = as_image(x)
    y = as_image(y)
    require_same_shape(x, y)
    total = float(np.sum(x - y))
    if abs(total) <= DIREC_TOLERANCE * x.size:
        return 0
    return 1 if total > 0.0 else -1
