"""Pairwise and one-vs-rest entanglement measures, and the two tangles.

For a pure symmetric N-qubit state every qubit pair carries the same
marginal, so the monogamy combination needs just three numbers per
parameter point: the Wootters concurrence C2 of the pair, the doubled
negativity N2 of the pair, and the one-vs-rest entanglement C1 = N1 =
2 sqrt(det rho_1). The tangles are

    tau = C1^2 - (N-1) C2^2        (concurrence tangle)
    xi  = C1^2 - (N-1) N2^2        (negativity tangle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dicke import DickeParams
from .errors import (
    InvalidParamsError,
    NotDensityMatrixError,
    NotSymmetricError,
    NumericalInstabilityError,
    WrongDimensionError,
)
from .marginals import (
    SingleQubitMarginal,
    TwoQubitMarginal,
    marginal_matrix,
    partial_transpose,
    single_qubit_marginal,
    two_qubit_marginal,
)
from .smallmat import SmallMatrix, det2, general_eigenvalues, sym_eigenvalues, trace_norm_symmetric

# (sigma_y x sigma_y) = s_j on the antidiagonal; conjugating a real rho by it
# sends entry (i, j) to s_i * s_j * rho[3-i][3-j].
_FLIP_SIGN = (-1.0, 1.0, 1.0, -1.0)

_IMAG_ABORT = 1e-8
_RANGE_TOL = 1e-10

# rho @ rho~ always has an exact zero eigenvalue (the marginal is rank <= 3),
# which the eigensolver returns as O(eps)-scale noise. Anything below this
# relative floor is indistinguishable from 0, and letting it through would
# inject sqrt(noise) ~ 1e-8 into the concurrence.
_EIG_FLOOR = 1e-12


@dataclass(frozen=True)
class TangleRecord:
    """All measures of one (N, k, a) parameter point."""

    params: DickeParams
    c1_sq: float
    c2_sq: float
    tau: float
    n2: float
    xi: float

    def __post_init__(self):
        n = self.params.n_qubits
        for name, value in (("c1_sq", self.c1_sq), ("c2_sq", self.c2_sq), ("n2", self.n2)):
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise InvalidParamsError(f"{name} must lie in [0, 1], got {value!r}")
        if abs(self.tau - (self.c1_sq - (n - 1) * self.c2_sq)) > 1e-12:
            raise InvalidParamsError("tau is inconsistent with c1_sq and c2_sq")
        if abs(self.xi - (self.c1_sq - (n - 1) * self.n2 ** 2)) > 1e-12:
            raise InvalidParamsError("xi is inconsistent with c1_sq and n2")


def _check_density_matrix(rho: SmallMatrix) -> None:
    trace = rho.trace()
    if abs(trace - 1.0) > _RANGE_TOL:
        raise NotDensityMatrixError(f"trace must be 1, got {trace!r}")
    try:
        low = sym_eigenvalues(rho)[-1]
    except NotSymmetricError as exc:
        raise NotDensityMatrixError(f"matrix is not symmetric: {exc}") from exc
    if low < -_RANGE_TOL:
        raise NotDensityMatrixError(f"matrix is not PSD, smallest eigenvalue {low!r}")


def _spin_flipped(rho: SmallMatrix) -> SmallMatrix:
    s = _FLIP_SIGN
    return SmallMatrix.from_rows(
        [[s[i] * s[j] * rho.entry(3 - i, 3 - j) for j in range(4)] for i in range(4)]
    )


def concurrence_two_qubit(rho: SmallMatrix) -> float:
    """Wootters concurrence of a real symmetric two-qubit density matrix.

    Builds the spin-flipped rho~ = (sy x sy) rho (sy x sy) (conjugation is a
    no-op for real rho), takes the eigenvalues of rho @ rho~, and returns
    max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with the sqrt values
    sorted descending. The exact spectrum is real nonnegative; tiny
    imaginary parts and negatives are clamped, anything beyond tolerance
    aborts rather than silently propagating garbage.
    """
    if rho.dim != 4:
        raise WrongDimensionError(f"concurrence needs a 4x4 matrix, got dim {rho.dim}")
    _check_density_matrix(rho)
    product = SmallMatrix.from_rows((rho.to_array() @ _spin_flipped(rho).to_array()).tolist())
    floor = _EIG_FLOOR * product.max_abs()
    lams = []
    for lam in general_eigenvalues(product):
        if abs(lam.imag) > _IMAG_ABORT:
            raise NumericalInstabilityError(f"complex eigenvalue of rho @ rho~: {lam!r}")
        if lam.real < -_RANGE_TOL:
            raise NumericalInstabilityError(f"negative eigenvalue of rho @ rho~: {lam!r}")
        lams.append(lam.real if lam.real >= floor else 0.0)
    roots = sorted((math.sqrt(x) for x in lams), reverse=True)
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def one_vs_rest(rho1: SingleQubitMarginal) -> float:
    """One-vs-rest entanglement 2 sqrt(det rho_1); for pure global states C1 = N1."""
    value = 2.0 * math.sqrt(max(0.0, det2(rho1.rho)))
    if value > 1.0 + _RANGE_TOL:
        raise NumericalInstabilityError(f"one-vs-rest measure left [0, 1]: {value!r}")
    return min(1.0, value)


def negativity_two_qubit(m: TwoQubitMarginal) -> float:
    """Doubled negativity ||rho_2^T_B||_1 - 1 of the two-qubit marginal, in [0, 1]."""
    value = trace_norm_symmetric(partial_transpose(m)) - 1.0
    if value < -_RANGE_TOL or value > 1.0 + _RANGE_TOL:
        raise NumericalInstabilityError(f"doubled negativity left [0, 1]: {value!r}")
    return min(1.0, max(0.0, value))


def tangle_record(params: DickeParams) -> TangleRecord:
    """Concurrence and negativity tangles for one canonical Dicke-class state."""
    marg = two_qubit_marginal(params)
    c2 = concurrence_two_qubit(marginal_matrix(marg))
    n2 = negativity_two_qubit(marg)
    c1 = one_vs_rest(single_qubit_marginal(marg))
    n = params.n_qubits
    c1_sq = c1 * c1
    c2_sq = c2 * c2
    return TangleRecord(
        params,
        c1_sq=c1_sq,
        c2_sq=c2_sq,
        tau=c1_sq - (n - 1) * c2_sq,
        n2=n2,
        xi=c1_sq - (n - 1) * n2 * n2,
    )
