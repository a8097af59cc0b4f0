"""Exception types shared across the package."""

from __future__ import annotations


class LatticeRcError(Exception):
    """Base class for all package errors."""


class EmptyInputError(LatticeRcError):
    pass


class DimensionMismatchError(LatticeRcError):
    pass


class UnboundedPolyhedronError(LatticeRcError):
    """Raised when an operation requires a bounded polyhedron."""


class NotLatticeConvexError(LatticeRcError):
    pass


class NotParityCompleteError(LatticeRcError):
    pass


class LowerDimensionalError(LatticeRcError):
    pass


class DependentVectorsError(LatticeRcError):
    pass


class OverlapError(LatticeRcError):
    """X and the set to separate from it share a point."""


class NonParallelLinesError(LatticeRcError):
    pass


class WidthMismatchError(LatticeRcError):
    pass


class FinitenessNotCertifiedError(LatticeRcError):
    pass


class BudgetExceededError(LatticeRcError):
    """Search budget ran out before the computation could be completed.

    Carries whatever partial information was gathered so callers can
    still report honest bounds.
    """

    def __init__(self, message, /, observers_found=None, lower_bound=None):
        super().__init__(message)
        self.observers_found = observers_found
        self.lower_bound = lower_bound


class KMaxExceededError(LatticeRcError):
    """No separating system with at most k_max inequalities exists.

    ``lower_bound`` is the best certified lower bound on the minimal k.
    """

    def __init__(self, message, /, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


class FormulaSyntaxError(LatticeRcError):
    pass
