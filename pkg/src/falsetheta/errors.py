"""Exception hierarchy shared by all modules."""


class FalseThetaError(ValueError):
    """Base class for invalid-argument errors raised by this package."""


class NotCoprime(FalseThetaError):
    pass


class EvenArgument(FalseThetaError):
    pass


class EvenModulus(FalseThetaError):
    pass


class OddModulus(FalseThetaError):
    pass


class NonPositiveC(FalseThetaError):
    pass


class UndefinedCase(FalseThetaError):
    pass


class IndexOutOfRange(FalseThetaError):
    pass


class NotUnimodular(FalseThetaError):
    pass


class OrderOutOfRange(FalseThetaError):
    pass


class PoleOutsideInterval(FalseThetaError):
    pass


class PoleOnBoundary(FalseThetaError):
    pass


class InvalidN(FalseThetaError):
    """N = 6m^2: the exact formula needs sqrt(N/6) to be a non-integer."""


class ZeroN(FalseThetaError):
    """n = 0 is outside the range where the convergent series holds."""
