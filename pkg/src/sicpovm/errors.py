"""Exception types raised across the package."""


class SicError(Exception):
    """Base class for all package errors."""


class NotInvertible(SicError, ValueError):
    pass


class InvalidModulus(SicError, ValueError):
    pass


class BadDeterminant(SicError, ValueError):
    pass


class PrimeInput(SicError, ValueError):
    pass


class DimensionMismatch(SicError, ValueError):
    pass


class OrderOverflow(SicError, RuntimeError):
    pass


class CapExceeded(SicError, RuntimeError):
    pass


class NonIntegerTrace(SicError, ArithmeticError):
    pass


class NonDivisible(SicError, ArithmeticError):
    pass


class UnknownRecipe(SicError, ValueError):
    pass


class NotNormalized(SicError, ValueError):
    pass


class ParseError(SicError, ValueError):
    pass


class NormError(SicError, ValueError):
    pass
