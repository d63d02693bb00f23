"""Canonical one-parameter Dicke-class states.

A pure symmetric state of N qubits built from two spinors (one repeated
N-k times, the other k times) can always be brought by local unitaries to
the canonical form

    |Psi> = sum_{r=0}^{k} beta_r |N/2, N/2 - r>,

where |N/2, N/2 - r> is the Dicke state with r excitations and the real,
nonnegative amplitudes beta_r depend on a single overlap parameter
a = |<eps1|eps2>| in [0, 1] (b = sqrt(1 - a^2)). This module evaluates
those amplitudes stably for N into the hundreds, plus the specialized
Clebsch-Gordan coefficients that couple one qubit (j2 = 1/2 twice, i.e.
j2 = 1 for a pair) out of the symmetric multiplet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParamsError, OutOfRangeError

# log(n!) table, grown on demand; index n holds lgamma(n + 1)
_LOG_FACT: list[float] = [0.0]


def _log_fact(n: int) -> float:
    while len(_LOG_FACT) <= n:
        _LOG_FACT.append(math.lgamma(len(_LOG_FACT) + 1))
    return _LOG_FACT[n]


@dataclass(frozen=True)
class DickeParams:
    """Parameters (N, k, a) of a canonical Dicke-class state."""

    n_qubits: int
    degeneracy: int
    non_orthogonality: float

    def __post_init__(self):
        n, k = self.n_qubits, self.degeneracy
        if n != int(n) or k != int(k):
            raise InvalidParamsError("n_qubits and degeneracy must be integers")
        n, k = int(n), int(k)
        a = float(self.non_orthogonality)
        if n < 2:
            raise InvalidParamsError(f"need at least 2 qubits, got {n}")
        if not 1 <= k <= n // 2:
            raise InvalidParamsError(f"degeneracy k must satisfy 1 <= k <= N//2 = {n // 2}, got {k}")
        if not (math.isfinite(a) and 0.0 <= a <= 1.0):
            raise InvalidParamsError(f"non-orthogonality a must lie in [0, 1], got {a}")
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "degeneracy", k)
        object.__setattr__(self, "non_orthogonality", a)

    @property
    def a(self) -> float:
        return self.non_orthogonality

    @property
    def b(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.a * self.a))


@dataclass(frozen=True)
class CgTriple:
    """Coefficients (c_+1, c_0, c_-1) coupling a qubit pair off the symmetric multiplet."""

    c_plus: float
    c_zero: float
    c_minus: float

    def __post_init__(self):
        triple = (self.c_plus, self.c_zero, self.c_minus)
        if not all(0.0 <= c <= 1.0 for c in triple):
            raise InvalidParamsError(f"coefficients must lie in [0, 1], got {triple}")
        norm = sum(c * c for c in triple)
        if abs(norm - 1.0) > 1e-14:
            raise InvalidParamsError(f"coefficients must be normalized, got sum of squares {norm!r}")


@dataclass(frozen=True)
class AmplitudeVector:
    """Canonical amplitudes beta_0..beta_k of a Dicke-class state."""

    params: DickeParams
    beta: tuple[float, ...]

    def __post_init__(self):
        k = self.params.degeneracy
        beta = tuple(float(x) for x in self.beta)
        if len(beta) != k + 1:
            raise InvalidParamsError(f"expected {k + 1} amplitudes, got {len(beta)}")
        if not all(math.isfinite(x) and x >= 0.0 for x in beta):
            raise InvalidParamsError("amplitudes must be finite and nonnegative")
        norm = math.fsum(x * x for x in beta)
        if abs(norm - 1.0) > 1e-12:
            raise InvalidParamsError(f"amplitudes must be normalized, got sum of squares {norm!r}")
        object.__setattr__(self, "beta", beta)


def cg_coefficients(n_qubits: int, r: int) -> CgTriple:
    """Clebsch-Gordan triple (c_+1^(r), c_0^(r), c_-1^(r)) for N qubits.

    These are the three coefficients of <j1 = N/2 - 1; j2 = 1 | N/2> needed
    to split a pair of qubits off the Dicke state with r excitations:

        c_+1 = sqrt((N-r)(N-r-1) / (N(N-1)))
        c_0  = sqrt(2 r (N-r)    / (N(N-1)))
        c_-1 = sqrt(r (r-1)      / (N(N-1)))

    The numerators are integer products, so the degenerate cases (r = 0, 1
    for c_-1; r = N-1, N for c_+1) come out exactly zero.
    """
    n = int(n_qubits)
    if n < 2:
        raise OutOfRangeError(f"need at least 2 qubits, got {n}")
    if not 0 <= r <= n:
        raise OutOfRangeError(f"excitation number r must satisfy 0 <= r <= {n}, got {r}")
    denom = n * (n - 1)
    plus = max(0, (n - r) * (n - r - 1))
    zero = 2 * r * (n - r)
    minus = max(0, r * (r - 1))
    return CgTriple(
        math.sqrt(plus / denom),
        math.sqrt(zero / denom),
        math.sqrt(minus / denom),
    )


def amplitudes(params: DickeParams) -> AmplitudeVector:
    """Canonical amplitudes beta_r, r = 0..k, for the given (N, k, a).

    Up to normalization,

        beta_r  ~  sqrt(N! (N-r)! / r!) * a^(k-r) * b^r / ((N-k)! (k-r)!),

    evaluated in log space (log-gamma) so that N in the hundreds neither
    overflows nor loses precision; the vector is then renormalized to unit
    Euclidean norm. The endpoints degenerate exactly: a = 0 leaves only
    beta_k (the Dicke state itself), a = 1 only beta_0 (a product state).
    """
    n, k, a, b = params.n_qubits, params.degeneracy, params.a, params.b
    if a == 0.0:
        return AmplitudeVector(params, (0.0,) * k + (1.0,))
    if a == 1.0:
        return AmplitudeVector(params, (1.0,) + (0.0,) * k)
    log_a, log_b = math.log(a), math.log(b)
    logs = [
        0.5 * (_log_fact(n) + _log_fact(n - r) - _log_fact(r))
        - _log_fact(n - k)
        - _log_fact(k - r)
        + (k - r) * log_a
        + r * log_b
        for r in range(k + 1)
    ]
    shift = max(logs)
    raw = [math.exp(x - shift) for x in logs]
    norm = math.sqrt(math.fsum(x * x for x in raw))
    return AmplitudeVector(params, tuple(x / norm for x in raw))
