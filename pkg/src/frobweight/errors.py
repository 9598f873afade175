"""Exception types shared across the package."""


class FrobweightError(Exception):
    """Base class for all errors raised by this package."""


class AxiomViolation(FrobweightError):
    """A structure failed one of its defining axioms during verification."""


class CapExceeded(FrobweightError):
    """A construction or search would exceed a configured size cap."""


class NotIrreducible(FrobweightError):
    """The given polynomial factors over its prime field."""


class DimensionMismatch(FrobweightError):
    """Matrix or vector shapes are incompatible."""


class NotAbelian(FrobweightError):
    """The given operation table is not a finite abelian group."""


class NotASubgroup(FrobweightError):
    """The given subset is not closed as a subgroup."""


class NotASubmodule(FrobweightError):
    """The given subset is not closed under addition and scalar action."""


class NotAGroup(FrobweightError):
    """The given subset is not closed as a group of units or matrices."""


class NotGenerating(FrobweightError):
    """The supplied character fails the generating-character test."""


class NotFrobenius(FrobweightError):
    """The operation requires a Frobenius bimodule and none is available."""


class NonIntegerSum(FrobweightError):
    """A character sum expected to be a rational integer was not."""


class SingularSystem(FrobweightError):
    """The axiom system for the homogeneous weight has no unique solution."""


class UniverseMismatch(FrobweightError):
    """A partition or map refers to a universe of the wrong size."""


class NoLocalRepresentation(FrobweightError):
    """A map is not representable pointwise by matrices from the family."""
