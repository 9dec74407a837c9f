"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`LCDError`,
so callers (the CLI in particular) can map failure classes to exit codes.
"""


class LCDError(Exception):
    """Base class for all package errors."""


# fields
class NotPrime(LCDError, ValueError):
    pass


class ReducibleModulus(LCDError, ValueError):
    pass


class NoCanonicalModulus(LCDError, LookupError):
    pass


class FieldMismatch(LCDError, TypeError):
    pass


class DivisionByZero(LCDError, ZeroDivisionError):
    pass


class NotAQuadraticExtension(LCDError, ValueError):
    pass


# matrices
class NotSquare(LCDError, ValueError):
    pass


class IndexOutOfRange(LCDError, IndexError):
    pass


class DimensionMismatch(LCDError, ValueError):
    pass


# codes
class ZeroCode(LCDError, ValueError):
    pass


class HermitianNeedsSquareOrder(LCDError, ValueError):
    pass


class ZeroScalarNotAllowed(LCDError, ValueError):
    pass


class RankDropped(LCDError, ValueError):
    """Degenerate scaling collapsed the dimension; ``code`` holds the re-reduced result."""

    def __init__(self, msg, code=None):
        super().__init__(msg)
        self.code = code


class BudgetExceeded(LCDError, RuntimeError):
    """Exhaustive enumeration would exceed the caller's budget."""

    def __init__(self, msg, required=None, budget=None):
        super().__init__(msg)
        self.required = required
        self.budget = budget


# constructions
class FieldTooSmall(LCDError, ValueError):
    pass


class SearchBudgetExceeded(BudgetExceeded):
    pass


class AlreadyLCD(LCDError, ValueError):
    pass


class DecompositionViolated(LCDError, ValueError):
    pass


# bounds
class OutOfDomain(LCDError, ValueError):
    pass


class InvalidParameters(LCDError, ValueError):
    pass


# files / verification
class ParseError(LCDError, ValueError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line


class VerificationFailed(LCDError):
    """Certificate check failed; ``field`` names the first mismatching entry."""

    def __init__(self, field, msg):
        super().__init__(f"{field}: {msg}")
        self.field = field
