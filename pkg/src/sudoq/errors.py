"""Exception hierarchy shared by all sudoq modules."""


class SudoqError(Exception):
    """Base class for all errors raised by this package."""


class BadToken(SudoqError):
    """A grid token is not a valid symbol for the given size."""


class BadLength(SudoqError):
    """Grid text does not contain exactly N*N tokens."""


class DimensionMismatch(SudoqError):
    """Two objects with incompatible dimensions were combined."""


class NotFull(SudoqError):
    """An operation requiring a completely filled grid got an empty cell."""


class NotNormalized(SudoqError):
    """A cell vector is not unit norm within tolerance."""


class BudgetExceeded(SudoqError):
    """An exhaustive computation would exceed its enumeration budget."""


class InfeasibleClues(SudoqError):
    """Two clues in the same constraint carry the same symbol."""


class RankMismatch(SudoqError):
    """The two operands of the scaling transformation have different ranks."""


class NotPSD(SudoqError):
    """A matrix expected to be positive semidefinite has a negative eigenvalue."""


class WrongClass(SudoqError):
    """A grid does not belong to the class required by a campaign."""
