"""Entanglement tangles of one-parameter Dicke-class symmetric multiqubit states.

The package computes one- and two-qubit reduced density matrices of the
canonical states |D_{N-k,k}> in closed form, derives the concurrence
tangle tau and the negativity tangle xi, and validates everything against
a brute-force full-state oracle at small N.
"""

from .dicke import AmplitudeVector, CgTriple, DickeParams, amplitudes, cg_coefficients
from .errors import (
    CapExceededError,
    DicketangleError,
    InvalidParamsError,
    NoConvergenceError,
    NonFiniteError,
    NotDensityMatrixError,
    NotSymmetricError,
    NumericalInstabilityError,
    OutOfRangeError,
    WrongDimensionError,
    ZeroStateError,
)
from .marginals import (
    SingleQubitMarginal,
    TwoQubitMarginal,
    marginal_matrix,
    partial_transpose,
    single_qubit_marginal,
    two_qubit_marginal,
)
from .measures import (
    TangleRecord,
    concurrence_two_qubit,
    negativity_two_qubit,
    one_vs_rest,
    tangle_record,
)
from .oracle import (
    FullState,
    Spinor,
    dicke_basis_vector,
    expand_state,
    partial_trace_to_one,
    partial_trace_to_two,
    symmetrize_two_spinors,
)
from .smallmat import SmallMatrix, det2, general_eigenvalues, sym_eigenvalues, trace_norm_symmetric

__version__ = "0.1.0"

__all__ = [
    "AmplitudeVector",
    "CapExceededError",
    "CgTriple",
    "DickeParams",
    "DicketangleError",
    "FullState",
    "InvalidParamsError",
    "NoConvergenceError",
    "NonFiniteError",
    "NotDensityMatrixError",
    "NotSymmetricError",
    "NumericalInstabilityError",
    "OutOfRangeError",
    "SingleQubitMarginal",
    "SmallMatrix",
    "Spinor",
    "TangleRecord",
    "TwoQubitMarginal",
    "WrongDimensionError",
    "ZeroStateError",
    "amplitudes",
    "cg_coefficients",
    "concurrence_two_qubit",
    "det2",
    "dicke_basis_vector",
    "expand_state",
    "general_eigenvalues",
    "marginal_matrix",
    "negativity_two_qubit",
    "one_vs_rest",
    "partial_trace_to_one",
    "partial_trace_to_two",
    "partial_transpose",
    "single_qubit_marginal",
    "sym_eigenvalues",
    "symmetrize_two_spinors",
    "tangle_record",
    "trace_norm_symmetric",
    "two_qubit_marginal",
    "__version__",
]
