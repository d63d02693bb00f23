"""Closed-form one- and two-qubit reductions of Dicke-class states.

Tracing all but two qubits out of |Psi> = sum_r beta_r |N/2, N/2 - r>
lands in the triplet subspace span{|00>, |psi+>, |11>}, so the whole 4x4
marginal is fixed by six real numbers A..F. Each is a short weighted sum
of amplitude products with the pair-removal Clebsch-Gordan coefficients;
no 2^N object is ever formed, which is what makes N ~ 100 trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dicke import DickeParams, amplitudes, cg_coefficients
from .errors import InvalidParamsError, NotDensityMatrixError
from .smallmat import SmallMatrix

_SQRT1_2 = math.sqrt(0.5)


@dataclass(frozen=True)
class TwoQubitMarginal:
    """The six independent elements of a symmetric two-qubit marginal.

    In the computational basis (|00>, |01>, |10>, |11>) the matrix is

        [[A, B, B, C],
         [B, D, D, E],
         [B, D, D, E],
         [C, E, E, F]].
    """

    params: DickeParams
    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        elems = (self.A, self.B, self.C, self.D, self.E, self.F)
        if not all(math.isfinite(x) for x in elems):
            raise InvalidParamsError("marginal elements must be finite")
        if self.A < 0.0 or self.D < 0.0 or self.F < 0.0:
            raise InvalidParamsError("diagonal elements A, D, F must be nonnegative")
        trace = self.A + 2.0 * self.D + self.F
        if abs(trace - 1.0) > 1e-12:
            raise InvalidParamsError(f"marginal must have unit trace, got {trace!r}")


@dataclass(frozen=True)
class SingleQubitMarginal:
    """A one-qubit reduced density matrix."""

    params: DickeParams
    rho: SmallMatrix

    def __post_init__(self):
        if self.rho.dim != 2:
            raise NotDensityMatrixError("single-qubit marginal must be 2x2")
        e = self.rho.entries
        if abs(e[1] - e[2]) > 1e-12:
            raise NotDensityMatrixError("single-qubit marginal must be symmetric")
        if abs(e[0] + e[3] - 1.0) > 1e-12:
            raise NotDensityMatrixError(f"single-qubit marginal must have unit trace, got {e[0] + e[3]!r}")
        if e[0] < -1e-12 or e[3] < -1e-12 or e[0] * e[3] - e[1] * e[2] < -1e-10:
            raise NotDensityMatrixError("single-qubit marginal must be positive semidefinite")


def two_qubit_marginal(params: DickeParams) -> TwoQubitMarginal:
    """Two-qubit marginal elements A..F for a canonical Dicke-class state.

    With c_m^(r) = cg_coefficients(N, r) and beta from amplitudes(params):

        A = sum_{r=0}^{k}   beta_r^2        (c_+1^(r))^2
        B = (1/sqrt 2) sum_{r=0}^{k-1} beta_r beta_{r+1} c_+1^(r) c_0^(r+1)
        C = sum_{r=0}^{k-2} beta_r beta_{r+2} c_+1^(r) c_-1^(r+2)
        D = (1/2) sum_{r=1}^{k} beta_r^2    (c_0^(r))^2
        E = (1/sqrt 2) sum_{r=0}^{k-1} beta_r beta_{r+1} c_0^(r) c_-1^(r+1)
        F = sum_{r=0}^{k}   beta_r^2        (c_-1^(r))^2

    Empty sums (small k) are zero.
    """
    k = params.degeneracy
    beta = amplitudes(params).beta
    cg = [cg_coefficients(params.n_qubits, r) for r in range(k + 1)]
    A = math.fsum(beta[r] ** 2 * cg[r].c_plus ** 2 for r in range(k + 1))
    B = _SQRT1_2 * math.fsum(
        beta[r] * beta[r + 1] * cg[r].c_plus * cg[r + 1].c_zero for r in range(k)
    )
    C = math.fsum(
        beta[r] * beta[r + 2] * cg[r].c_plus * cg[r + 2].c_minus for r in range(k - 1)
    )
    D = 0.5 * math.fsum(beta[r] ** 2 * cg[r].c_zero ** 2 for r in range(1, k + 1))
    E = _SQRT1_2 * math.fsum(
        beta[r] * beta[r + 1] * cg[r].c_zero * cg[r + 1].c_minus for r in range(k)
    )
    F = math.fsum(beta[r] ** 2 * cg[r].c_minus ** 2 for r in range(k + 1))
    return TwoQubitMarginal(params, A, B, C, D, E, F)


def marginal_matrix(m: TwoQubitMarginal) -> SmallMatrix:
    """Assemble the 4x4 two-qubit density matrix in the computational basis."""
    A, B, C, D, E, F = m.A, m.B, m.C, m.D, m.E, m.F
    return SmallMatrix.from_rows(
        [
            [A, B, B, C],
            [B, D, D, E],
            [B, D, D, E],
            [C, E, E, F],
        ]
    )


def partial_transpose(m: TwoQubitMarginal) -> SmallMatrix:
    """Partial transpose (over one qubit) of the two-qubit marginal.

    Transposing the second tensor factor swaps the coherences: the corner
    pair (C) moves onto the middle block and the middle diagonal (D) onto
    the corners, giving

        [[A, B, B, D],
         [B, D, C, E],
         [B, C, D, E],
         [D, E, E, F]].
    """
    A, B, C, D, E, F = m.A, m.B, m.C, m.D, m.E, m.F
    return SmallMatrix.from_rows(
        [
            [A, B, B, D],
            [B, D, C, E],
            [B, C, D, E],
            [D, E, E, F],
        ]
    )


def single_qubit_marginal(m: TwoQubitMarginal) -> SingleQubitMarginal:
    """Trace one more qubit out of the two-qubit marginal."""
    p = m.A + m.D
    off = m.B + m.E
    q = m.D + m.F
    return SingleQubitMarginal(m.params, SmallMatrix(2, (p, off, off, q)))
