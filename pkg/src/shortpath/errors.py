"""Exception types raised across the package."""


class ShortPathError(Exception):
    """Base class for all package errors."""


class ParameterError(ShortPathError, ValueError):
    """A model or driver parameter violates its constraints."""


class DomainError(ShortPathError, ValueError):
    """An argument lies outside the domain of the operation."""


class BracketError(ShortPathError, ValueError):
    """A minimization bracket does not enclose an interior minimum."""


class NumericalError(ShortPathError, ArithmeticError):
    """An eigensolve or root search failed numerically."""


class NotFoundError(ShortPathError, LookupError):
    """A requested crossing or minimum does not exist in the search interval."""


class NotApplicableError(ShortPathError, ValueError):
    """A closed-form estimate does not apply to the given parameters."""


class NoDataError(ShortPathError, ValueError):
    """No system size produced a usable measurement."""
