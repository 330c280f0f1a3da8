"""Exception types raised across the package."""


class DarcaisError(Exception):
    """Base class for all errors raised by this package."""


class NotNormalized(DarcaisError, ValueError):
    pass


class TableOutOfRange(DarcaisError, IndexError):
    pass


class NotPrime(DarcaisError, ValueError):
    pass


class ZeroPolynomial(DarcaisError, ValueError):
    pass


class NonMonic(DarcaisError, ValueError):
    pass


class ConductorMismatch(DarcaisError, ValueError):
    pass


class NotCongruent(DarcaisError, ValueError):
    pass


class NotPrimitive(DarcaisError, ValueError):
    pass


class NonSquareRatio(DarcaisError, ArithmeticError):
    """disc(Min_alpha) / disc(K) was not a perfect square; always a bug."""


class HypothesisViolated(DarcaisError, ValueError):
    pass


class BoundExceeded(DarcaisError, ValueError):
    pass


class NoConvergence(DarcaisError, ArithmeticError):
    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
