"""Exception hierarchy.

Most of these signal an internal inconsistency (an arithmetic identity that
must hold exactly did not), so they derive from ``ArithmeticError`` rather
than ``ValueError``.
"""


class DimerError(Exception):
    """Base class for every error raised by this package."""


class NotAPerfectSquare(DimerError, ArithmeticError):
    pass


class InexactDivision(DimerError, ArithmeticError):
    pass


class DivisibilityFailure(InexactDivision):
    """``2**n`` does not divide a tiling count."""


class HalvingNotExact(InexactDivision):
    pass


class InexactNewtonDivision(InexactDivision):
    pass


class OddCoefficientNonzero(DimerError, ArithmeticError):
    pass


class UnexpectedU(DimerError, ArithmeticError):
    pass


class NonPositive(DimerError, ArithmeticError):
    pass


class InternalMismatch(DimerError, ArithmeticError):
    pass


class ZeroPolynomial(DimerError, ValueError):
    pass


class NotMonic(DimerError, ValueError):
    pass


class WidthCapExceeded(DimerError, ValueError):
    def __init__(self, width, cap):
        super().__init__(
            f"board width {width} exceeds the configured cap {cap}; "
            "raise the cap explicitly to run this size"
        )
        self.width = width
        self.cap = cap


class RouteMismatch(DimerError, ArithmeticError):
    """Two routes to B_n disagreed.  ``values`` maps route name to result."""

    def __init__(self, n, values):
        pretty = ", ".join(f"{k}={v}" for k, v in sorted(values.items()))
        super().__init__(f"routes disagree for n={n}: {pretty}")
        self.n = n
        self.values = dict(values)


class SchemaError(DimerError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CacheConflict(DimerError):
    def __init__(self, n, old, new):
        super().__init__(f"cache holds B_{n}={old} but got {new}")
        self.n = n
        self.old = old
        self.new = new


class InsufficientData(DimerError, ValueError):
    pass
