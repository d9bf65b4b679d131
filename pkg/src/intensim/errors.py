"""Exception and warning types shared across the package."""


class DimensionMismatchError(ValueError):
    """Two images that must share dimensions do not."""


class DegenerateInputError(ValueError):
    """Joint intensity range of an image pair is zero; nothing to normalize."""


class ImageLoadError(ValueError):
    """File could not be read or parsed in the declared format."""


class UndefinedSensitivityError(ValueError):
    """Sensitivity index is undefined because the baseline score equals 1."""


class ConfigError(ValueError):
    """Invalid run configuration (unknown metric, bad constant, bad flag)."""


class AllZeroWeightsWarning(UserWarning):
    """Weighting function vanished on every pixel; uniform weights substituted."""
