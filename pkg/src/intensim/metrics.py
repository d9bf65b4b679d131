"""Similarity indexes: global/windowed/multi-scale/gradient SSIM, the
intensity-weighted SSIM family, and the low-information similarity index.

Every metric is a pure function of two images and returns a plain float.
Inputs must already be jointly normalized onto [0, 1] (see
:func:`intensim.image.normalize_joint`); each metric rejects values outside
that range.  :func:`compute_metric` wraps any metric by identifier and
returns a :class:`MetricResult` carrying the configuration that produced
the score, which is what the CLI and the experiment drivers serialize.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .errors import AllZeroWeightsWarning, ConfigError
from .image import as_image, require_same_shape

DEFAULT_C1 = 1e-4
DEFAULT_C2 = 9e-4
DEFAULT_LISI_C1 = 1e-4
DEFAULT_LISI_C2 = 1e-4
DEFAULT_WINDOW = 11
DEFAULT_WINDOW_SIGMA = 1.5
DEFAULT_MS_LEVELS = 5

# per-level exponents of the standard 5-level multi-scale SSIM
MS_SSIM_EXPONENTS = (0.0448, 0.2856, 0.3001, 0.2363, 0.1333)

METRIC_IDS = (
    "ssim-windowed",
    "ssim-global",
    "ms-ssim",
    "g-ssim",
    "itw:gaussian",
    "itw:tanh",
    "itw:sigmoid",
    "lisi",
)


def _check_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = as_image(x)
    y = as_image(y)
    require_same_shape(x, y)
    for name, a in (("first", x), ("second", y)):
        if a.min() < 0.0 or a.max() > 1.0:
            raise ValueError(
                f"{name} input is not normalized to [0, 1]; "
                "run normalize_joint on the pair first"
            )
    return x, y


# ---------------------------------------------------------------------------
# weighting functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightingSpec:
    """Choice of intensity-weighting function plus its shape parameters.

    kind : {"gaussian", "tanh", "sigmoid"}
    sigma : width of the gaussian kind (peak fixed at z = 1)
    k : slope of the tanh/sigmoid kinds; None picks the kind's default
        (2.0 for tanh, 10.0 for sigmoid)
    center : midpoint of the sigmoid kind

    All three kinds are strictly increasing on (0, 1) with values in
    (0, 1) there, so brighter pixels always carry more weight.
    """

    kind: str
    sigma: float = 0.5
    k: float | None = None
    center: float = 0.5

    def __post_init__(self):
        if self.kind not in ("gaussian", "tanh", "sigmoid"):
            raise ValueError(f"unknown weighting kind {self.kind!r}")
        if self.sigma <= 0.0:
            raise ValueError("sigma must be positive")
        if self.k is not None and self.k <= 0.0:
            raise ValueError("slope k must be positive")

    @property
    def slope(self) -> float:
        if self.k is not None:
            return self.k
        return 2.0 if self.kind == "tanh" else 10.0

    def config(self) -> dict:
        if self.kind == "gaussian":
            return {"kind": "gaussian", "sigma": self.sigma}
        if self.kind == "tanh":
            return {"kind": "tanh", "k": self.slope}
        return {"kind": "sigmoid", "k": self.slope, "center": self.center}


DEFAULT_WEIGHTINGS = {
    "gaussian": WeightingSpec("gaussian"),
    "tanh": WeightingSpec("tanh"),
    "sigmoid": WeightingSpec("sigmoid"),
}


def _resolve_weighting(weighting):
    """Accept a kind name, a WeightingSpec, or a custom callable g(z)."""
    if isinstance(weighting, str):
        try:
            return DEFAULT_WEIGHTINGS[weighting]
        except KeyError:
            raise ConfigError(f"unknown weighting {weighting!r}") from None
    return weighting


def weighting_function(z, spec="gaussian"):
    """Evaluate the weighting function g(z) for z in [0, 1].

    `spec` may be a kind name, a :class:`WeightingSpec`, or any callable;
    callables are applied as-is (useful for custom or constant weightings).
    Scalar input gives a float, array input an array.
    """
    spec = _resolve_weighting(spec)
    z_arr = np.asarray(z, dtype=np.float64)
    if z_arr.min() < 0.0 or z_arr.max() > 1.0:
        raise ValueError("weighting function argument must lie in [0, 1]")
    if callable(spec):
        g = np.asarray(spec(z_arr), dtype=np.float64)
    elif spec.kind == "gaussian":
        g = np.exp(-((z_arr - 1.0) ** 2) / (2.0 * spec.sigma**2))
    elif spec.kind == "tanh":
        g = np.tanh(spec.slope * z_arr)
    else:
        g = 1.0 / (1.0 + np.exp(-spec.slope * (z_arr - spec.center)))
    if np.isscalar(z) or np.ndim(z) == 0:
        return float(g)
    return g


def weighting_factors(x, spec="gaussian") -> np.ndarray:
    """Per-pixel weighting factors f(x_i) = g(x_i) / sum_j g(x_j).

    The factors sum to 1, which keeps the weighted statistics consistent
    with the probabilistic model behind the unweighted ones.  If g
    vanishes on every pixel (possible only for an all-zero image under a
    kind with g(0) = 0), uniform factors 1/N are substituted and an
    AllZeroWeightsWarning is emitted.
    """
    x = as_image(x)
    g = weighting_function(x, spec)
    total = float(np.sum(g))
    if total <= 0.0:
        warnings.warn(
            "weighting function is zero on every pixel; using uniform weights",
            AllZeroWeightsWarning,
            stacklevel=2,
        )
        return np.full(x.shape, 1.0 / x.size)
    return g / total


# ---------------------------------------------------------------------------
# global metrics
# ---------------------------------------------------------------------------

def ssim_global(x, y, c1: float = DEFAULT_C1, c2: float = DEFAULT_C2) -> float:
    """Structural similarity computed from whole-image statistics.

    Means, variances, and the cross covariance are taken over all N pixels
    at once; variance and covariance use the sample (N - 1) convention so
    that the intensity-weighted index reduces to this one exactly under a
    constant weighting function.  Result lies in [-1, 1] and equals 1 for
    identical inputs.
    """
    x, y = _check_pair(x, y)
    n = x.size
    mx = float(np.mean(x))
    my = float(np.mean(y))
    xc = x.ravel() - mx
    yc = y.ravel() - my
    vx = float(np.sum(xc * xc)) / (n - 1)
    vy = float(np.sum(yc * yc)) / (n - 1)
    cxy = float(np.sum(xc * yc)) / (n - 1)
    return ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) / (
        (mx**2 + my**2 + c1) * (vx + vy + c2)
    )


def itw_ssim(
    x,
    y,
    weighting="gaussian",
    c1: float = DEFAULT_C1,
    c2: float = DEFAULT_C2,
) -> float:
    """Intensity-weighted structural similarity over the whole image.

    Each image weighs its own pixels by the factors from
    :func:`weighting_factors`, so high-intensity pixels dominate the
    statistics.  With N pixels and factors f:

        mu    = sum_i f(x_i) x_i
        var   = sum_i (f(x_i) N x_i - mu)^2 / (N - 1)
        cov   = sum_i (f(x_i) N x_i - mu_x)(f(y_i) N y_i - mu_y) / (N - 1)

    assembled into the usual SSIM quotient.  No sliding window is used;
    the index is defined globally.  Result lies in [-1, 1] and equals 1
    for identical inputs.  `weighting` accepts a kind name, a
    WeightingSpec, or a custom callable g(z).
    """
    x, y = _check_pair(x, y)
    n = x.size
    fx = weighting_factors(x, weighting).ravel()
    fy = weighting_factors(y, weighting).ravel()
    xf = x.ravel()
    yf = y.ravel()
    mx = float(np.sum(fx * xf))
    my = float(np.sum(fy * yf))
    u = fx * n * xf - mx
    v = fy * n * yf - my
    vx = float(np.sum(u * u)) / (n - 1)
    vy = float(np.sum(v * v)) / (n - 1)
    cxy = float(np.sum(u * v)) / (n - 1)
    return ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) / (
        (mx**2 + my**2 + c1) * (vx + vy + c2)
    )


def lisi(
    x,
    y,
    c1: float = DEFAULT_LISI_C1,
    c2: float = DEFAULT_LISI_C2,
) -> float:
    """Low-information similarity index.

    Rewards pixel pairs that are close in value *and* jointly bright,
    relative to the total amount of bright content:

        lisi = D * sum_i |x_i + y_i| / (|x_i - y_i| + c1)
                 / (max(sum x, sum y) + c2),   D = c1 / 2

    The D = c1/2 factor makes identical inputs score S / (S + c2) with
    S = sum x, approaching 1 as the image carries more intensity, while
    two all-zero (pure noise floor) images score 0.  The score always
    lies in [0, 1).
    """
    x, y = _check_pair(x, y)
    d = c1 / 2.0
    terms = np.abs(x + y) / (np.abs(x - y) + c1)
    num = d * float(np.sum(terms))
    den = max(float(np.sum(x)), float(np.sum(y))) + c2
    return num / den


# ---------------------------------------------------------------------------
# windowed metrics
# ---------------------------------------------------------------------------

def _gaussian_kernel_1d(window: int, sigma: float) -> np.ndarray:
    half = (window - 1) / 2.0
    offsets = np.arange(window, dtype=np.float64) - half
    k = np.exp(-(offsets**2) / (2.0 * sigma**2))
    return k / k.sum()


def _check_window(x: np.ndarray, window: int) -> None:
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be a positive odd integer, got {window}")
    if window > min(x.shape):
        raise ValueError(
            f"window {window} exceeds the smallest image dimension "
            f"{min(x.shape)}"
        )


def _local_means(a: np.ndarray, k1: np.ndarray) -> np.ndarray:
    # zero-fill boundary; truncated window weights are renormalized by the
    # in-bounds kernel mass computed in _window_mass
    out = ndimage.correlate1d(a, k1, axis=0, mode="constant", cval=0.0)
    return ndimage.correlate1d(out, k1, axis=1, mode="constant", cval=0.0)


def _window_mass(shape: tuple, k1: np.ndarray) -> np.ndarray:
    ones = np.ones(shape, dtype=np.float64)
    return _local_means(ones, k1)


def _local_ssim_maps(x, y, window, sigma, c1, c2):
    """Per-pixel luminance and contrast-structure maps.

    Windows are truncated at the borders and their weights renormalized,
    so every pixel has a local value.
    """
    k1 = _gaussian_kernel_1d(window, sigma)
    w = _window_mass(x.shape, k1)
    mx = _local_means(x, k1) / w
    my = _local_means(y, k1) / w
    vx = _local_means(x * x, k1) / w - mx * mx
    vy = _local_means(y * y, k1) / w - my * my
    cxy = _local_means(x * y, k1) / w - mx * my
    lum = (2.0 * mx * my + c1) / (mx * mx + my * my + c1)
    cs = (2.0 * cxy + c2) / (vx + vy + c2)
    return lum, cs


def ssim_windowed(
    x,
    y,
    c1: float = DEFAULT_C1,
    c2: float = DEFAULT_C2,
    window: int = DEFAULT_WINDOW,
    sigma: float = DEFAULT_WINDOW_SIGMA,
) -> float:
    """Mean local structural similarity under a Gaussian sliding window.

    A `window` x `window` Gaussian of width `sigma` weighs each local
    statistic; border windows are truncated with their weights
    renormalized.  The score is the plain mean of the per-pixel SSIM map.
    """
    x, y = _check_pair(x, y)
    _check_window(x, window)
    lum, cs = _local_ssim_maps(x, y, window, sigma, c1, c2)
    return float(np.mean(lum * cs))


def g_ssim(
    x,
    y,
    c1: float = DEFAULT_C1,
    c2: float = DEFAULT_C2,
    window: int = DEFAULT_WINDOW,
    sigma: float = DEFAULT_WINDOW_SIGMA,
) -> float:
    """Gradient-based structural similarity.

    Luminance is compared on the original intensities while contrast and
    structure are compared on Sobel gradient-magnitude maps, which makes
    the index track edge content rather than flat-region changes.
    Windowing matches :func:`ssim_windowed`.  Requires at least 3x3 input
    for the Sobel stencils.
    """
    x, y = _check_pair(x, y)
    if min(x.shape) < 3:
        raise ValueError("gradient similarity requires at least a 3x3 image")
    _check_window(x, window)
    gx = _sobel_magnitude(x)
    gy = _sobel_magnitude(y)
    k1 = _gaussian_kernel_1d(window, sigma)
    w = _window_mass(x.shape, k1)
    mx = _local_means(x, k1) / w
    my = _local_means(y, k1) / w
    lum = (2.0 * mx * my + c1) / (mx * mx + my * my + c1)
    mgx = _local_means(gx, k1) / w
    mgy = _local_means(gy, k1) / w
    vgx = _local_means(gx * gx, k1) / w - mgx * mgx
    vgy = _local_means(gy * gy, k1) / w - mgy * mgy
    cg = _local_means(gx * gy, k1) / w - mgx * mgy
    cs = (2.0 * cg + c2) / (vgx + vgy + c2)
    return float(np.mean(lum * cs))


def _sobel_magnitude(a: np.ndarray) -> np.ndarray:
    dy = ndimage.sobel(a, axis=0, mode="reflect")
    dx = ndimage.sobel(a, axis=1, mode="reflect")
    return np.hypot(dx, dy)


def _downsample2(a: np.ndarray) -> np.ndarray:
    # 2x2 mean pooling; odd trailing row/column is dropped
    h, w = a.shape
    h2, w2 = h // 2, w // 2
    return a[: 2 * h2, : 2 * w2].reshape(h2, 2, w2, 2).mean(axis=(1, 3))


def ms_ssim(
    x,
    y,
    c1: float = DEFAULT_C1,
    c2: float = DEFAULT_C2,
    levels: int = DEFAULT_MS_LEVELS,
    window: int = DEFAULT_WINDOW,
    sigma: float = DEFAULT_WINDOW_SIGMA,
) -> float:
    """Multi-scale structural similarity.

    Contrast-structure terms are evaluated at `levels` dyadic scales
    (2x2 mean-filter downsampling between scales) and the luminance term
    only at the coarsest; the terms combine as a product with the
    standard per-level exponents, renormalized to sum 1 over the levels
    in use (levels=1 therefore equals the single-scale windowed score).
    Negative mean contrast-structure values are clamped to zero before
    exponentiation.

    Requires min(width, height) >= window * 2**(levels - 1).
    """
    x, y = _check_pair(x, y)
    if not 1 <= levels <= len(MS_SSIM_EXPONENTS):
        raise ValueError(
            f"levels must lie in [1, {len(MS_SSIM_EXPONENTS)}], got {levels}"
        )
    _check_window(x, window)
    if min(x.shape) < window * 2 ** (levels - 1):
        raise ValueError(
            f"image of size {x.shape[1]}x{x.shape[0]} is too small for "
            f"{levels} levels with window {window}"
        )
    exponents = np.asarray(MS_SSIM_EXPONENTS[:levels], dtype=np.float64)
    exponents = exponents / exponents.sum()

    score = 1.0
    for level in range(levels):
        if level > 0:
            x = _downsample2(x)
            y = _downsample2(y)
        lum, cs = _local_ssim_maps(x, y, window, sigma, c1, c2)
        if level < levels - 1:
            term = float(np.mean(cs))
        else:
            term = float(np.mean(lum * cs))
        score *= max(term, 0.0) ** exponents[level]
    return float(score)


# ---------------------------------------------------------------------------
# metric registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricParams:
    """Resolved numeric configuration shared by all metrics."""

    c1: float = DEFAULT_C1
    c2: float = DEFAULT_C2
    lisi_c1: float = DEFAULT_LISI_C1
    lisi_c2: float = DEFAULT_LISI_C2
    window: int = DEFAULT_WINDOW
    window_sigma: float = DEFAULT_WINDOW_SIGMA
    ms_levels: int = DEFAULT_MS_LEVELS
    gaussian_sigma: float = 0.5
    tanh_k: float = 2.0
    sigmoid_k: float = 10.0
    sigmoid_c: float = 0.5

    def __post_init__(self):
        for name in ("c1", "c2", "lisi_c1", "lisi_c2"):
            if getattr(self, name) <= 0.0:
                raise ConfigError(f"{name} must be positive")

    def weighting(self, kind: str) -> WeightingSpec:
        if kind == "gaussian":
            return WeightingSpec("gaussian", sigma=self.gaussian_sigma)
        if kind == "tanh":
            return WeightingSpec("tanh", k=self.tanh_k)
        return WeightingSpec("sigmoid", k=self.sigmoid_k, center=self.sigmoid_c)


@dataclass(frozen=True)
class MetricResult:
    """A named metric score plus the configuration that produced it."""

    metric: str
    score: float
    config: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"metric": self.metric, "score": self.score, "config": self.config}


def compute_metric(metric_id: str, x, y, params: MetricParams | None = None) -> MetricResult:
    """Evaluate the metric named by `metric_id` on a normalized pair.

    Known identifiers are listed in ``METRIC_IDS``.  The returned
    MetricResult records the parameter values that affected the score.
    """
    p = params or MetricParams()
    if metric_id == "ssim-global":
        score = ssim_global(x, y, p.c1, p.c2)
        config = {"c1": p.c1, "c2": p.c2}
    elif metric_id == "ssim-windowed":
        score = ssim_windowed(x, y, p.c1, p.c2, p.window, p.window_sigma)
        config = {"c1": p.c1, "c2": p.c2, "window": p.window,
                  "window_sigma": p.window_sigma}
    elif metric_id == "ms-ssim":
        score = ms_ssim(x, y, p.c1, p.c2, p.ms_levels, p.window, p.window_sigma)
        config = {"c1": p.c1, "c2": p.c2, "levels": p.ms_levels,
                  "window": p.window, "window_sigma": p.window_sigma}
    elif metric_id == "g-ssim":
        score = g_ssim(x, y, p.c1, p.c2, p.window, p.window_sigma)
        config = {"c1": p.c1, "c2": p.c2, "window": p.window,
                  "window_sigma": p.window_sigma}
    elif metric_id.startswith("itw:"):
        kind = metric_id.split(":", 1)[1]
        if kind not in DEFAULT_WEIGHTINGS:
            raise ConfigError(f"unknown metric {metric_id!r}")
        spec = p.weighting(kind)
        score = itw_ssim(x, y, spec, p.c1, p.c2)
        config = {"c1": p.c1, "c2": p.c2, "weighting": spec.config()}
    elif metric_id == "lisi":
        score = lisi(x, y, p.lisi_c1, p.lisi_c2)
        config = {"c1": p.lisi_c1, "c2": p.lisi_c2, "d": p.lisi_c1 / 2.0}
    else:
        raise ConfigError(f"unknown metric {metric_id!r}")
    return MetricResult(metric=metric_id, score=float(score), config=config)
