"""Exception types raised by the toolkit."""


class TropError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(TropError, ValueError):
    pass


class PositiveCycle(TropError, ValueError):
    """A directed cycle has positive weight, so the Kleene star diverges."""


class DimensionTooLarge(TropError, ValueError):
    pass


class DimensionTooSmall(TropError, ValueError):
    pass


class InvalidDimension(TropError, ValueError):
    pass


class NotConnected(TropError, ValueError):
    """The map is not a connected function."""


class NonUniqueEigenvector(TropError):
    """The eigenpair is not locally linear at this matrix (degenerate input)."""


class NotSkew(TropError, ValueError):
    def __init__(self, i, j, msg=None):
        self.i, self.j = i, j
        super().__init__(msg or f"a[{i}][{j}] + a[{j}][{i}] != 0")


class NotAKite(TropError, ValueError):
    pass
