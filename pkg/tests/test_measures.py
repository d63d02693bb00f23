import math

import numpy as np
import pytest

from dicketangle.dicke import DickeParams
from dicketangle.errors import (
    InvalidParamsError,
    NotDensityMatrixError,
    NumericalInstabilityError,
    WrongDimensionError,
)
from dicketangle.marginals import (
    SingleQubitMarginal,
    TwoQubitMarginal,
    marginal_matrix,
    partial_transpose,
    single_qubit_marginal,
    two_qubit_marginal,
)
from dicketangle.measures import (
    TangleRecord,
    concurrence_two_qubit,
    negativity_two_qubit,
    one_vs_rest,
    tangle_record,
)
from dicketangle.smallmat import SmallMatrix


def _corner_only_concurrence(m):
    """Closed form for marginals with no single-excitation coherence.

    At a = 0 the marginal has B = E = 0, i.e. X structure, for which
    the concurrence is 2 max(0, D - sqrt(A F), C - D).
    """
    return 2.0 * max(0.0, m.D - math.sqrt(m.A * m.F), m.C - m.D)


def test_concurrence_of_bell_projector():
    bell = SmallMatrix.from_rows(
        [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.5, 0.5, 0.0],
            [0.0, 0.5, 0.5, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]
    )
    assert concurrence_two_qubit(bell) == pytest.approx(1.0, abs=1e-12)


def test_concurrence_of_w_marginal():
    rho = marginal_matrix(two_qubit_marginal(DickeParams(3, 1, 0.0)))
    assert concurrence_two_qubit(rho) == pytest.approx(2 / 3, abs=1e-12)


def test_concurrence_of_product_projector_is_zero():
    rho = SmallMatrix.from_rows(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]
    )
    assert concurrence_two_qubit(rho) == 0.0


def test_concurrence_matches_corner_closed_form():
    # at a = 0 an independent closed form exists; the eigenvalue route must agree
    for n in range(2, 13):
        for k in range(1, n // 2 + 1):
            m = two_qubit_marginal(DickeParams(n, k, 0.0))
            got = concurrence_two_qubit(marginal_matrix(m))
            assert got == pytest.approx(_corner_only_concurrence(m), abs=1e-12), (n, k)


def test_concurrence_input_checks():
    with pytest.raises(WrongDimensionError):
        concurrence_two_qubit(SmallMatrix(2, (0.5, 0.0, 0.0, 0.5)))
    with pytest.raises(NotDensityMatrixError):
        concurrence_two_qubit(SmallMatrix(4, tuple(np.eye(4).ravel())))  # trace 4
    bad_psd = np.diag([1.5, -0.5, 0.0, 0.0])
    with pytest.raises(NotDensityMatrixError):
        concurrence_two_qubit(SmallMatrix(4, tuple(bad_psd.ravel())))
    lop = np.diag([0.5, 0.5, 0.0, 0.0])
    lop[0, 1] = 0.3
    with pytest.raises(NotDensityMatrixError):
        concurrence_two_qubit(SmallMatrix(4, tuple(lop.ravel())))


def test_one_vs_rest_values():
    p = DickeParams(4, 2, 0.5)
    assert one_vs_rest(SingleQubitMarginal(p, SmallMatrix(2, (0.5, 0.0, 0.0, 0.5)))) == 1.0
    got = one_vs_rest(SingleQubitMarginal(p, SmallMatrix(2, (2 / 3, 0.0, 0.0, 1 / 3))))
    assert got == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-15)
    assert one_vs_rest(SingleQubitMarginal(p, SmallMatrix(2, (1.0, 0.0, 0.0, 0.0)))) == 0.0


def test_negativity_of_bell_marginal_is_maximal():
    m = two_qubit_marginal(DickeParams(2, 1, 0.0))
    assert negativity_two_qubit(m) == pytest.approx(1.0, abs=1e-12)


def test_negativity_of_w_marginal():
    m = two_qubit_marginal(DickeParams(3, 1, 0.0))
    assert negativity_two_qubit(m) == pytest.approx((math.sqrt(5) - 1) / 3, abs=1e-12)


def test_negativity_of_product_marginal_is_zero():
    assert negativity_two_qubit(two_qubit_marginal(DickeParams(6, 3, 1.0))) == 0.0


def test_negativity_matches_numpy_spectrum():
    rng = np.random.default_rng(31)
    for n in rng.integers(2, 13, size=40):
        n = int(n)
        k = int(rng.integers(1, n // 2 + 1))
        a = float(rng.uniform(0.0, 1.0))
        m = two_qubit_marginal(DickeParams(n, k, a))
        vals = np.linalg.eigvalsh(partial_transpose(m).to_array())
        want = float(np.abs(vals).sum()) - 1.0
        assert negativity_two_qubit(m) == pytest.approx(max(0.0, want), abs=1e-13)


def test_negativity_aborts_on_garbage_marginal():
    # unit trace but wildly unphysical coherences: the [0, 1] guard must trip
    m = TwoQubitMarginal(DickeParams(4, 2, 0.5), 0.0, 0.0, 5.0, 0.25, 5.0, 0.5)
    with pytest.raises(NumericalInstabilityError):
        negativity_two_qubit(m)


def test_tangle_record_w_state():
    rec = tangle_record(DickeParams(3, 1, 0.0))
    assert rec.c1_sq == pytest.approx(8 / 9, abs=1e-12)
    assert rec.c2_sq == pytest.approx(4 / 9, abs=1e-12)
    assert rec.tau == pytest.approx(0.0, abs=1e-12)
    assert rec.n2 == pytest.approx((math.sqrt(5) - 1) / 3, abs=1e-12)
    assert rec.xi == pytest.approx((4 * math.sqrt(5) - 4) / 9, abs=1e-12)


def test_tangle_record_half_filled_four_qubits():
    rec = tangle_record(DickeParams(4, 2, 0.0))
    assert rec.c1_sq == pytest.approx(1.0, abs=1e-12)
    assert rec.c2_sq == pytest.approx(1 / 9, abs=1e-12)
    assert rec.tau == pytest.approx(2 / 3, abs=1e-12)
    assert rec.n2 == pytest.approx(1 / 3, abs=1e-12)
    assert rec.xi == pytest.approx(2 / 3, abs=1e-12)


def test_tangle_record_product_point_is_exactly_zero():
    rec = tangle_record(DickeParams(7, 3, 1.0))
    assert (rec.c1_sq, rec.c2_sq, rec.tau, rec.n2, rec.xi) == (0.0, 0.0, 0.0, 0.0, 0.0)


def test_tau_rises_when_leaving_the_half_filled_point():
    """tau is not monotone in N at fixed k: N = 2k -> 2k + 1 increases it."""
    low = tangle_record(DickeParams(4, 2, 0.0)).tau
    high = tangle_record(DickeParams(5, 2, 0.0)).tau
    assert low == pytest.approx(2 / 3, abs=1e-12)
    assert high == pytest.approx(9.6 * math.sqrt(0.03) - 0.96, abs=1e-12)
    assert high > low + 0.036


def test_monogamy_and_ordering_on_small_grid():
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            for a in np.linspace(0.0, 1.0, 11):
                rec = tangle_record(DickeParams(n, k, float(a)))
                assert rec.tau >= -1e-10, rec
                assert rec.xi >= -1e-10, rec
                assert rec.xi >= rec.tau - 1e-10, rec
                if k == 1:
                    assert abs(rec.tau) <= 1e-9, rec


def test_tangle_record_validation():
    p = DickeParams(3, 1, 0.5)
    with pytest.raises(InvalidParamsError):
        TangleRecord(p, c1_sq=0.5, c2_sq=0.1, tau=0.5, n2=0.1, xi=0.48)
    with pytest.raises(InvalidParamsError):
        TangleRecord(p, c1_sq=1.5, c2_sq=0.0, tau=1.5, n2=0.0, xi=1.5)
    TangleRecord(p, c1_sq=0.5, c2_sq=0.1, tau=0.3, n2=0.2, xi=0.42)
