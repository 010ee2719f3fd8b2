"""Exception types shared across the package."""


class OrbitClosureError(Exception):
    pass


class NotATopology(OrbitClosureError, ValueError):
    def __init__(self, message: str, pair=None):
        super().__init__(message if pair is None else f"{message}: {pair[0]} and {pair[1]}")
        self.pair = pair


class EmptyCarrier(OrbitClosureError, ValueError):
    pass


class CapExceeded(OrbitClosureError, ValueError):
    pass


class DimensionMismatch(OrbitClosureError, ValueError):
    pass


class NotAnEquivalence(OrbitClosureError, ValueError):
    pass


class NotABijection(OrbitClosureError, ValueError):
    pass


class InvalidGenerator(OrbitClosureError, ValueError):
    pass


class UnsupportedSetShape(OrbitClosureError, TypeError):
    pass


class NotOpen(OrbitClosureError, ValueError):
    pass


class PointNotInU(OrbitClosureError, ValueError):
    pass


class OutsideDisk(OrbitClosureError, ValueError):
    pass


class NonPeriodic(OrbitClosureError, RuntimeError):
    pass


class ConsistencyError(OrbitClosureError, AssertionError):
    """Two code paths that must agree did not."""
