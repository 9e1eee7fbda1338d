"""Exception types shared across the workbench.

Every failure mode that callers are expected to handle gets its own class so
tests can assert on the precise condition.  All of them derive from
``WorkbenchError``.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class ZeroInput(WorkbenchError):
    """An argument that must be nonzero was zero."""


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    """Division by the zero polynomial or zero series."""


class BothZero(WorkbenchError):
    """gcd of (0, 0) requested."""


class NotCoprime(WorkbenchError):
    """Arguments violate a coprimality precondition."""


class NotCoprimeModuli(WorkbenchError):
    """Moduli passed to a CRT-style operation are not pairwise coprime."""


class NotIrreducible(WorkbenchError):
    """A modulus that must be irreducible is composite."""


class NotAPower(WorkbenchError):
    """Modulus is not a proper power as required."""


class NotASquare(WorkbenchError):
    """Square root of a non-square requested."""


class BadFactor(WorkbenchError):
    """Supplied factorization of a modulus does not multiply back."""


class PrecisionError(WorkbenchError):
    """A truncated series does not carry enough certified coefficients
    to decide the requested question."""


class CapExceeded(WorkbenchError):
    """An enumeration or evaluation would exceed the configured budget."""


class BadAlphaShape(WorkbenchError):
    """Quadratic coefficient is not of the required c*t^-eps shape."""


class BadArgs(WorkbenchError):
    """Arguments violate a stated precondition."""


class DomainError(WorkbenchError):
    """Parameters lie outside the stated validity range of a formula."""


class BadConfig(WorkbenchError):
    """Invalid command-line or run configuration."""


class UndecidableComparison(WorkbenchError):
    """Interval arithmetic could not separate two magnitudes."""
