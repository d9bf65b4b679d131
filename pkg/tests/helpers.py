"""Shared image builders for the test suite.

These constructions are tuned so the behaviours under test are robust
across seeds rather than knife-edge accidents of one RNG draw.
"""

import numpy as np
from scipy import ndimage


def textured_ref(size, seed, bg=0.08, center=0.5, tex=0.17, blur=0.9):
    """Dark background with a bright textured disk centered near midgray.

    The disk holds roughly 40% of the pixels at intensities clustered
    around ``center``, with enough local texture that windowed SSIM
    stays responsive when noise lands inside the disk.
    """
    rng = np.random.default_rng(seed)
    img = np.full((size, size), bg) + rng.uniform(-0.02, 0.02, (size, size))
    yy, xx = np.mgrid[0:size, 0:size].astype(float)
    cy = size / 2 + rng.uniform(-5, 5)
    cx = size / 2 + rng.uniform(-5, 5)
    r = np.sqrt((yy - cy) ** 2 + (xx - cx) ** 2)
    disk = r < (0.40 * size * size / np.pi) ** 0.5
    texf = ndimage.gaussian_filter(rng.normal(0, 1, (size, size)), blur)
    texf = texf / texf.std() * tex
    img[disk] = center + texf[disk]
    return np.clip(img, 0.0, 1.0)


def strip_ref(size, seed, lo=0.30, mid=0.50, hi=0.70, tex=0.04, blur=0.8):
    """Three vertical strips: bright band, midgray, dark band.

    Both intensity bands are compact, equal in area, and equidistant
    from midgray, so band-targeted distortions perturb comparable
    amounts of image content on each side.
    """
    rng = np.random.default_rng(seed)
    img = np.full((size, size), mid)
    w_band = int(round(0.35 * size))
    img[:, :w_band] = hi
    img[:, size - w_band:] = lo
    texf = ndimage.gaussian_filter(rng.normal(0, 1, (size, size)), blur)
    texf = texf / texf.std() * tex
    return np.clip(img + texf, 0.0, 1.0)


def flat_shift_pair(seed, size=32, patch_lo=0.2, shift=0.5,
                    tex_amp=0.08, tex_blur=2.0):
    """Pair differing by a constant added to a flat interior square.

    x carries a zero-gradient square patch inside smooth texture; y is
    identical except the patch is shifted up by ``shift``. Gradient
    fields agree everywhere except at the patch border.
    """
    rng = np.random.default_rng(seed)
    tex = ndimage.gaussian_filter(rng.normal(0, 1, (size, size)), tex_blur)
    tex = 0.55 + tex / tex.std() * tex_amp
    x = np.clip(tex, 0.02, 0.98)
    q = size // 4
    x[q:3 * q, q:3 * q] = patch_lo
    y = x.copy()
    y[q:3 * q, q:3 * q] = patch_lo + shift
    return x, y


def random_pair(seed, shape=(16, 16)):
    """Independent uniform images on [0, 1], one seeded RNG."""
    rng = np.random.default_rng(seed)
    return rng.uniform(size=shape), rng.uniform(size=shape)
