import math

import numpy as np
import pytest

from dicketangle.dicke import DickeParams
from dicketangle.errors import InvalidParamsError, NotDensityMatrixError
from dicketangle.marginals import (
    SingleQubitMarginal,
    TwoQubitMarginal,
    marginal_matrix,
    partial_transpose,
    single_qubit_marginal,
    two_qubit_marginal,
)
from dicketangle.smallmat import SmallMatrix, sym_eigenvalues


def _grid_params(n_max=10, a_steps=11):
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            for a in np.linspace(0.0, 1.0, a_steps):
                yield DickeParams(n, k, float(a))


def test_w_state_marginal():
    m = two_qubit_marginal(DickeParams(3, 1, 0.0))
    assert m.A == pytest.approx(1 / 3, abs=1e-15)
    assert m.D == pytest.approx(1 / 3, abs=1e-15)
    assert m.B == 0.0
    assert m.C == 0.0
    assert m.E == 0.0
    assert m.F == 0.0


def test_half_filled_four_qubit_marginal():
    m = two_qubit_marginal(DickeParams(4, 2, 0.0))
    assert m.A == pytest.approx(1 / 6, abs=1e-15)
    assert m.D == pytest.approx(1 / 3, abs=1e-15)
    assert m.F == pytest.approx(1 / 6, abs=1e-15)
    assert m.B == 0.0
    assert m.C == 0.0
    assert m.E == 0.0


@pytest.mark.parametrize("n,k", [(2, 1), (5, 2), (9, 4), (50, 25)])
def test_product_state_marginal_is_pure(n, k):
    # a = 1 collapses the state to |0...0>, whose pair marginal is |00><00|
    m = two_qubit_marginal(DickeParams(n, k, 1.0))
    assert m.A == 1.0
    assert (m.B, m.C, m.D, m.E, m.F) == (0.0, 0.0, 0.0, 0.0, 0.0)


def test_marginal_matrix_layout():
    m = TwoQubitMarginal(DickeParams(4, 2, 0.5), 0.4, 0.05, 0.01, 0.2, 0.02, 0.2)
    assert marginal_matrix(m).rows() == [
        [0.4, 0.05, 0.05, 0.01],
        [0.05, 0.2, 0.2, 0.02],
        [0.05, 0.2, 0.2, 0.02],
        [0.01, 0.02, 0.02, 0.2],
    ]


def test_partial_transpose_of_half_filled_point():
    m = two_qubit_marginal(DickeParams(4, 2, 0.0))
    want = [
        [1 / 6, 0.0, 0.0, 1 / 3],
        [0.0, 1 / 3, 0.0, 0.0],
        [0.0, 0.0, 1 / 3, 0.0],
        [1 / 3, 0.0, 0.0, 1 / 6],
    ]
    assert np.allclose(partial_transpose(m).rows(), want, atol=1e-15, rtol=0.0)


def test_partial_transpose_matches_axis_swap():
    """Element shuffle agrees with transposing the second tensor factor."""
    for params in _grid_params(n_max=8, a_steps=5):
        m = two_qubit_marginal(params)
        arr = marginal_matrix(m).to_array()
        swapped = arr.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
        assert np.array_equal(partial_transpose(m).to_array(), swapped)


def test_marginal_is_density_matrix_across_grid():
    for params in _grid_params():
        m = two_qubit_marginal(params)
        rho = marginal_matrix(m)
        assert rho.trace() == pytest.approx(1.0, abs=1e-12)
        low = sym_eigenvalues(rho)[-1]
        assert low >= -1e-12, f"{params}: eigenvalue {low}"


def test_single_qubit_examples():
    w = single_qubit_marginal(two_qubit_marginal(DickeParams(3, 1, 0.0)))
    assert np.allclose(w.rho.rows(), [[2 / 3, 0.0], [0.0, 1 / 3]], atol=1e-15, rtol=0.0)

    half = single_qubit_marginal(two_qubit_marginal(DickeParams(4, 2, 0.0)))
    assert np.allclose(half.rho.rows(), [[1 / 2, 0.0], [0.0, 1 / 2]], atol=1e-15, rtol=0.0)

    prod = single_qubit_marginal(two_qubit_marginal(DickeParams(4, 2, 1.0)))
    assert prod.rho.rows() == [[1.0, 0.0], [0.0, 0.0]]


def test_single_qubit_consistent_with_tracing_the_matrix():
    for params in _grid_params(n_max=9, a_steps=7):
        m = two_qubit_marginal(params)
        arr = marginal_matrix(m).to_array()
        contracted = np.trace(arr.reshape(2, 2, 2, 2), axis1=1, axis2=3)
        rho1 = single_qubit_marginal(m).rho.to_array()
        assert np.allclose(rho1, contracted, atol=1e-15, rtol=0.0)


def test_two_qubit_marginal_validation():
    p = DickeParams(4, 2, 0.5)
    with pytest.raises(InvalidParamsError):
        TwoQubitMarginal(p, 0.4, 0.0, 0.0, 0.2, 0.0, 0.3)  # trace 1.1
    with pytest.raises(InvalidParamsError):
        TwoQubitMarginal(p, -0.2, 0.0, 0.0, 0.5, 0.0, 0.2)
    with pytest.raises(InvalidParamsError):
        TwoQubitMarginal(p, math.nan, 0.0, 0.0, 0.3, 0.0, 0.4)


def test_single_qubit_marginal_validation():
    p = DickeParams(4, 2, 0.5)
    with pytest.raises(NotDensityMatrixError):
        SingleQubitMarginal(p, SmallMatrix(2, (0.5, 0.1, -0.1, 0.5)))
    with pytest.raises(NotDensityMatrixError):
        SingleQubitMarginal(p, SmallMatrix(2, (0.7, 0.0, 0.0, 0.7)))
    with pytest.raises(NotDensityMatrixError):
        SingleQubitMarginal(p, SmallMatrix(2, (1.4, 0.0, 0.0, -0.4)))
    with pytest.raises(NotDensityMatrixError):
        SingleQubitMarginal(p, SmallMatrix(3, (0.0,) * 9))
