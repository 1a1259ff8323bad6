"""Exception hierarchy.

Every input-validation failure derives from :class:`SpectrumError`, itself a
``ValueError``, so callers can catch one type at the boundary.
"""


class SpectrumError(ValueError):
    pass


class NegativeCoefficientError(SpectrumError):
    pass


class EmptySpectrumError(SpectrumError):
    pass


class NotNormalizableError(SpectrumError):
    pass


class NonpositiveWeightError(SpectrumError):
    pass


class DimensionTooLargeError(SpectrumError):
    pass


class CopyCountZeroError(SpectrumError):
    pass


class CopyCountTooSmallError(SpectrumError):
    pass


class InvalidProbabilityError(SpectrumError):
    pass


class RankExceedsKError(SpectrumError):
    pass


class RankDeficientCatalystError(SpectrumError):
    pass


class UnsupportedDimensionError(SpectrumError):
    pass


class CrossCheckError(RuntimeError):
    """Two independent routes to the same quantity disagreed."""
