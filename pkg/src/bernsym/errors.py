class BernsymError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(BernsymError, ValueError):
    """An argument violates an operation's stated precondition."""


class DegenerateDivisorError(BernsymError, ZeroDivisionError):
    """A division whose divisor vanishes (or vanishes to the wrong order)."""


class PrecisionExhaustedError(BernsymError, ArithmeticError):
    """A p-adic operation would leave fewer than one significant digit."""
