"""Image representation, file I/O, joint normalization, and intensity-band masks.

Images are plain 2-D ``numpy.float64`` arrays of shape ``(height, width)``,
row-major, with every value finite and at least 2 pixels in total.  All
functions here are pure: inputs are never mutated and fresh arrays are
returned, so values can be shared freely across threads.
"""

import struct
from pathlib import Path

import numpy as np

from .errors import DegenerateInputError, DimensionMismatchError, ImageLoadError

FORMATS = ("png8", "png16", "text-matrix", "raw-f64")

_EXTENSION_FORMATS = {
    ".txt": "text-matrix",
    ".text": "text-matrix",
    ".mat": "text-matrix",
    ".raw": "raw-f64",
    ".f64": "raw-f64",
    ".bin": "raw-f64",
}


def as_image(a) -> np.ndarray:
    """Validate `a` as an image and return it as a float64 2-D array.

    Raises ValueError if the array is not 2-D, has fewer than 2 pixels,
    or contains non-finite values.
    """
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"image must be a 2-D array, got ndim={arr.ndim}")
    if arr.size < 2:
        raise ValueError(f"image must contain at least 2 pixels, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("image contains non-finite values (NaN or Inf)")
    return arr


def require_same_shape(x: np.ndarray, y: np.ndarray) -> None:
    """Raise DimensionMismatchError unless the two images have equal shape."""
    if x.shape != y.shape:
        raise DimensionMismatchError(
            f"image dimensions differ: {x.shape} vs {y.shape}"
        )


def load_image(path, fmt: str | None = None) -> np.ndarray:
    """Load a single-channel image from `path`.

    Supported formats:

    ``png8``
        8-bit grayscale PNG; codes divided by 255.
    ``png16``
        16-bit grayscale PNG; codes divided by 65535.
    ``text-matrix``
        Whitespace-separated values, one row per line, taken verbatim.
    ``raw-f64``
        Two little-endian uint32 (width, height) followed by
        width*height little-endian float64 values, row-major, verbatim.

    When `fmt` is None the format is inferred from the file extension
    (``.png`` is sniffed for bit depth).  Multi-channel files are
    rejected; inputs must be pre-converted to a single channel.
    """
    path = Path(path)
    if fmt is not None and fmt not in FORMATS:
        raise ImageLoadError(f"unknown image format {fmt!r}; expected one of {FORMATS}")
    if fmt is None:
        ext = path.suffix.lower()
        if ext == ".png":
            fmt = "png-auto"
        elif ext in _EXTENSION_FORMATS:
            fmt = _EXTENSION_FORMATS[ext]
        else:
            raise ImageLoadError(
                f"cannot infer format from extension {ext!r}; pass fmt explicitly"
            )

    try:
        if fmt in ("png8", "png16", "png-auto"):
            arr = _load_png(path, fmt)
        elif fmt == "text-matrix":
            arr = _load_text(path)
        else:
            arr = _load_raw_f64(path)
    except (OSError, ValueError) as exc:
        if isinstance(exc, ImageLoadError):
            raise
        raise ImageLoadError(f"failed to load {path}: {exc}") from exc

    try:
        return as_image(arr)
    except ValueError as exc:
        raise ImageLoadError(f"invalid image data in {path}: {exc}") from exc


def _load_png(path: Path, fmt: str) -> np.ndarray:
    from PIL import Image as PilImage

    with PilImage.open(path) as img:
        mode = img.mode
        if mode == "L":
            actual = "png8"
            arr = np.asarray(img, dtype=np.float64) / 255.0
        elif mode in ("I;16", "I;16B", "I"):
            actual = "png16"
            arr = np.asarray(img, dtype=np.float64) / 65535.0
        else:
            raise ImageLoadError(
                f"{path} has mode {mode!r}; only single-channel grayscale "
                "PNG is supported (convert color inputs first)"
            )
    if fmt != "png-auto" and fmt != actual:
        raise ImageLoadError(f"{path} is {actual}, not the declared {fmt}")
    return arr


def _load_text(path: Path) -> np.ndarray:
    return np.loadtxt(path, dtype=np.float64, ndmin=2)


def _load_raw_f64(path: Path) -> np.ndarray:
    blob = path.read_bytes()
    if len(blob) < 8:
        raise ImageLoadError(f"{path} is too short to hold the dimension header")
    width, height = struct.unpack("<II", blob[:8])
    expected = 8 + 8 * width * height
    if len(blob) != expected:
        raise ImageLoadError(
            f"{path} holds {len(blob)} bytes but {width}x{height} "
            f"requires {expected}"
        )
    data = np.frombuffer(blob[8:], dtype="<f8")
    return data.reshape(height, width).astype(np.float64)


def normalize_joint(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Normalize a pair of images together onto [0, 1].

    Both images are mapped through (v - jointmin) / (jointmax - jointmin),
    where the extrema are taken over the two images combined, so the
    relationship between the pair is preserved.  At least one output pixel
    equals 0 and one equals 1.

    Raises DegenerateInputError when the joint range is zero and
    DimensionMismatchError when shapes differ.
    """
    x = as_image(x)
    y = as_image(y)
    require_same_shape(x, y)
    jmin = min(float(x.min()), float(y.min()))
    jmax = max(float(x.max()), float(y.max()))
    span = jmax - jmin
    if not span > 0.0:
        raise DegenerateInputError(
            "degenerate input: joint intensity range is zero"
        )
    return (x - jmin) / span, (y - jmin) / span


def mask_pixel_count(fraction: float, n: int) -> int:
    """Number of pixels selected by a band fraction: round-half-up of fraction*n."""
    return int(np.floor(fraction * n + 0.5))


def intensity_mask(x, band: str, fraction: float) -> np.ndarray:
    """Boolean mask selecting the highest- or lowest-intensity pixels.

    Selects round(fraction * N) pixels (round half up).  Ties are broken by
    row-major pixel index, lowest index first, so the result is
    deterministic.

    Parameters
    ----------
    x : array_like
      Source image.
    band : {"highest", "lowest"}
      Which end of the intensity range to select.
    fraction : float
      Fraction of pixels to select, in the open interval (0, 1).
    """
    x = as_image(x)
    if band not in ("highest", "lowest"):
        raise ValueError(f"band must be 'highest' or 'lowest', got {band!r}")
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must lie in (0, 1), got {fraction}")
    flat = x.ravel()
    k = mask_pixel_count(fraction, flat.size)
    # stable sort keeps row-major order among equal intensities
    if band == "highest":
        order = np.argsort(-flat, kind="stable")
    else:
        order = np.argsort(flat, kind="stable")
    mask = np.zeros(flat.size, dtype=bool)
    mask[order[:k]] = True
    return mask.reshape(x.shape)


def crop(x, left: int, top: int, width: int, height: int) -> np.ndarray:
    """Extract the sub-image at (left, top) of size width x height.

    The rectangle must lie inside the image and cover at least 2 pixels.
    """
    x = as_image(x)
    h, w = x.shape
    if left < 0 or top < 0 or width < 1 or height < 1:
        raise ValueError(
            f"invalid crop rectangle (left={left}, top={top}, "
            f"width={width}, height={height})"
        )
    if left + width > w or top + height > h:
        raise ValueError(
            f"crop rectangle (left={left}, top={top}, width={width}, "
            f"height={height}) exceeds image bounds {w}x{h}"
        )
    if width * height < 2:
        raise ValueError("cropped area must cover at least 2 pixels")
    return x[top:top + height, left:left + width].copy()
