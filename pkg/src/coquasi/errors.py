"""Exception types shared across the toolkit."""


class CoquasiError(Exception):
    pass


class DivisionByZero(CoquasiError, ZeroDivisionError):
    """Division by the zero element of the coefficient field."""


class NotInvertible(CoquasiError):
    """A convolution or algebra inverse does not exist; carries a diagnostic."""


class ArityMismatch(CoquasiError):
    """A functional was applied to a tensor of the wrong arity or shape."""


class InvalidSystem(CoquasiError):
    """A crossed system failed its defining identities."""


class InvalidCleaving(CoquasiError):
    """A cleaving system failed its defining identities."""


class InvalidDatum(CoquasiError):
    """Low-dimensional cleft datum failed its finite condition list."""


class MissingSigmaInverse(CoquasiError):
    """An operation needs the cocycle inverse but none is attached."""


class NoSolution(CoquasiError):
    """A constrained linear solve has no admissible solution."""


class UnknownName(CoquasiError, KeyError):
    """Unknown builtin structure name."""


class SchemaError(CoquasiError):
    """A document does not conform to the interchange schema."""
