"""Exceptions shared across the package."""


class DegreeMismatchError(ValueError):
    """Inputs that must live in a single degree d do not."""


class SizeBoundError(ValueError):
    """An enumeration was requested beyond its configured size bound."""


class UndefinedProductError(ValueError):
    """The requested product has no exponential direct-sum decomposition."""


class ConsistencyError(RuntimeError):
    """An exact-arithmetic identity failed; indicates a bug, never rounded away."""
