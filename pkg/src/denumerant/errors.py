"""Exception types raised by the denumerant library."""


class DenumerantError(Exception):
    """Base class for every error raised by this package."""


class EmptySet(DenumerantError):
    """A part set was constructed from an empty collection."""


class NonPositivePart(DenumerantError):
    """A part set was given an entry smaller than 1 (or not an integer)."""


class NegativeBound(DenumerantError):
    """A count table was requested up to a negative upper index."""


class OracleBoundExceeded(DenumerantError):
    """Exhaustive enumeration would produce more partitions than the guard allows."""


class PartNotInSet(DenumerantError):
    """The requested part does not belong to the part set."""


class PartExceedsN(DenumerantError):
    """The part to split on is larger than the target number."""


class GcdNotOne(DenumerantError):
    """The operation requires a part set with gcd 1."""


class WrongCardinality(DenumerantError):
    """The operation requires a part set of a specific size."""


class BelowValidityBound(DenumerantError):
    """The recurrence is only guaranteed above its validity threshold."""


class ResidualNonZero(DenumerantError):
    """An over-determination sample did not lie on the fitted constituent.

    Carries the residue class and the sample index at which the fit failed,
    so the caller can report exactly where the polynomial model broke down.
    """

    def __init__(self, residue: int, l: int, expected, actual):
        self.residue = residue
        self.l = l
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"constituent for residue {residue} misses the sample at l={l}: "
            f"polynomial gives {actual}, exact count is {expected}"
        )


class NonIntegerValue(DenumerantError):
    """A quasi-polynomial evaluation produced a non-integer rational."""
