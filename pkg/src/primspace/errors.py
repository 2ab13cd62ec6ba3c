"""Exception types shared across the package."""


class PrimspaceError(Exception):
    """Base class for every error raised by this package."""


class OutOfRangeError(PrimspaceError):
    """A table cell, map entry, or element index lies outside [0, n)."""


class NonAssociativeError(PrimspaceError):
    """A Cayley table fails associativity; carries the first bad triple."""

    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(
            f"associativity fails at ({i},{j},{k}): (i*j)*k != i*(j*k)"
        )


class BoundExceededError(PrimspaceError):
    """A requested computation exceeds a configured size bound."""


class NotHomomorphismError(PrimspaceError):
    """A map between semigroups is not multiplicative; carries the first bad pair."""

    def __init__(self, s: int, t: int):
        self.pair = (s, t)
        super().__init__(f"map is not multiplicative at pair ({s},{t})")


class EmptyGeneratorError(PrimspaceError):
    """Ideal generation was asked for the empty set (ideals are nonempty here)."""


class NotAnIdealError(PrimspaceError):
    """A subset claimed to be an ideal is empty or not closed under translation."""


class NotProperError(PrimspaceError):
    """An operation requiring a proper ideal received the whole semigroup."""


class DimensionMismatchError(PrimspaceError):
    """An action witness does not match the semigroup order or module shape."""


class BudgetExceededError(PrimspaceError):
    """An action search exceeded its exploration budget."""


class SemigroupMismatchError(PrimspaceError):
    """Data built over one semigroup was combined with a different one."""


class UniqueGenericPointViolationError(PrimspaceError):
    """An irreducible closed set has no, or more than one, generic point."""


class ComponentMismatchError(PrimspaceError):
    """Connected components disagree with hulls of minimal points."""
