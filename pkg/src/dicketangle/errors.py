"""Exception types shared across the package."""


class DicketangleError(Exception):
    """Base class for all package-specific errors."""


class NonFiniteError(DicketangleError, ValueError):
    """A matrix or vector entry is NaN or infinite."""


class NotSymmetricError(DicketangleError, ValueError):
    """A matrix required to be symmetric is not, beyond tolerance."""


class WrongDimensionError(DicketangleError, ValueError):
    """A matrix has the wrong dimension for the requested operation."""


class NoConvergenceError(DicketangleError, ArithmeticError):
    """An iterative eigensolver failed to converge."""


class OutOfRangeError(DicketangleError, ValueError):
    """An index argument lies outside its admissible range."""


class InvalidParamsError(DicketangleError, ValueError):
    """State parameters (N, k, a) or derived quantities violate their constraints."""


class CapExceededError(DicketangleError, ValueError):
    """A requested qubit count exceeds the configured dense-state cap."""


class NotDensityMatrixError(DicketangleError, ValueError):
    """A matrix fails the density-matrix checks (trace one, positive semidefinite)."""


class NumericalInstabilityError(DicketangleError, ArithmeticError):
    """A computed quantity left its mathematically guaranteed range by more than tolerance."""


class ZeroStateError(DicketangleError, ArithmeticError):
    """A state vector underflowed to numerically zero norm before normalization."""
