"""Exception hierarchy for hermint."""


class HermintError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HermintError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParityError(DomainError):
    """An operation that needs an even index sum received an odd one."""


class UnavailableDegreeError(HermintError, LookupError):
    """A polynomial provider cannot supply the requested degree."""


class SeriesTruncationError(HermintError, ValueError):
    """Requested coefficient lies beyond the truncation order of a series."""


class RankDeficiencyError(HermintError, ArithmeticError):
    """An exact linear system does not determine its unknowns uniquely."""

    def __init__(self, message, nullity):
        super().__init__(message)
        self.nullity = nullity


class CatalogueError(HermintError, KeyError):
    """Unknown label in a fixed catalogue."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""
