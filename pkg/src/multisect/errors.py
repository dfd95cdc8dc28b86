"""Exception types shared across the package.

Exit-code mapping used by the CLI: domain errors (subclasses of
:class:`DomainError`) map to exit code 1, syntax problems to 2, and
:class:`InternalInvariantError` to 3.
"""


class MultisectError(Exception):
    """Base class for all package errors."""


class DomainError(MultisectError):
    """A request that is well formed but mathematically rejected."""


class InternalInvariantError(MultisectError):
    """An internal consistency check failed; always a bug, never user error."""


# -- exact arithmetic ------------------------------------------------------

class OrderMismatch(DomainError):
    """Arithmetic between cyclotomic values of different orders, or an
    operation that requires rational coefficients got cyclotomic ones."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NotRational(DomainError):
    """A cyclotomic value outside the rational subfield was coerced."""


class ZeroDenominator(DomainError, ZeroDivisionError):
    pass


class CoercionFailure(InternalInvariantError):
    """A multisection produced non-rational coefficients where Galois
    invariance guarantees rational ones."""


# -- transforms and orbits -------------------------------------------------

class NotWithinBound(DomainError):
    """An iteration bound was exhausted before the sought event occurred."""


class InvalidParts(DomainError):
    pass


class NotFixed(DomainError):
    pass


class BoundExceeded(InternalInvariantError):
    """Orbit classification ran past a bound that theory says suffices."""


# -- integer dynamics ------------------------------------------------------

class OutOfRange(DomainError, ValueError):
    pass


# -- limit selection -------------------------------------------------------

class WrongGcd(DomainError):
    pass


class NotInBackwardOrbit(DomainError):
    pass


class NotOnCycle(DomainError):
    pass


class ResidueOutOfRange(DomainError, ValueError):
    pass


# -- fixed points ----------------------------------------------------------

class PolesNotRootsOfUnity(DomainError):
    pass


class MultiplePoles(DomainError):
    pass


# -- expression parsing ----------------------------------------------------

class ExprSyntaxError(MultisectError):
    """Parse failure with a byte offset and a description of what was expected."""

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"at offset {position}: expected {expected}")


class ExponentNotInteger(ExprSyntaxError):
    def __init__(self, position: int):
        super().__init__(position, "an integer exponent")
