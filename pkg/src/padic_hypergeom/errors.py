"""Exception hierarchy shared by every module of the package."""


class PadicError(Exception):
    """Base class for all errors raised by padic_hypergeom."""


class NotPrime(PadicError, ValueError):
    pass


class PrimeTooSmall(PadicError, ValueError):
    pass


class BadPrecision(PadicError, ValueError):
    pass


class BadParameters(PadicError, ValueError):
    pass


class ZeroArgument(PadicError, ValueError):
    pass


class ZeroPolynomial(PadicError, ValueError):
    pass


class NonIntegralRational(PadicError, ValueError):
    pass


class DivisionByZero(PadicError, ZeroDivisionError):
    pass


class PrecisionExhausted(PadicError, ArithmeticError):
    """A comparison asked for more digits than the operands carry."""


class ClassMismatch(PadicError, ArithmeticError):
    """Addition of pi-monomials lying in different pi-classes."""


class AmbiguousMatch(PadicError, ValueError):
    """More than one recognition candidate agrees at the working precision."""
