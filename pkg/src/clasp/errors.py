"""Exception hierarchy shared by all clasp modules."""


class ClaspError(Exception):
    """Base class for every error raised by the library."""


class DimensionError(ClaspError, ValueError):
    """Operands have mismatched variable counts or matrix sizes."""


class DomainError(ClaspError, ValueError):
    """An evaluation point lies outside the allowed domain."""


class InconsistencyError(ClaspError, ValueError):
    """Input data contradicts itself (e.g. a transpose conflict)."""


class UnsupportedInputError(ClaspError, ValueError):
    """Input is well formed but outside what the library models."""


class SingularPresentationError(ClaspError, ArithmeticError):
    """The presentation matrix has vanishing determinant."""


class InternalConsistencyError(ClaspError, AssertionError):
    """A post-hoc verification of an exact computation failed."""
