"""Exception hierarchy shared by every tilegf module."""


class TilingError(Exception):
    """Base class for all errors raised by tilegf."""


class RegimeMismatch(TilingError, ValueError):
    """Parameters fall outside the range in which a formula is proved."""


class BudgetExceeded(TilingError):
    """An enumeration would exceed its configured node or memory cap."""


class UnnormalizedGF(TilingError, ValueError):
    """Denominator constant term is not +1 or -1."""


class ZeroConstantTerm(TilingError, ValueError):
    """Multivariate denominator has no invertible constant term."""


class NonzeroConstant(TilingError, ValueError):
    """A fault-free series must vanish at x = 0."""


class OddArea(TilingError, ValueError):
    pass


class RoundingUnsafe(TilingError, ArithmeticError):
    pass


class NoRootInUnitInterval(TilingError, ArithmeticError):
    pass


class ParseError(TilingError, ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class AlignmentAmbiguous(TilingError, ValueError):
    pass


class OracleDisagreement(TilingError, AssertionError):
    """Two independent counting routes returned different numbers."""
