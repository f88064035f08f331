import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from conftest import random_complex, random_hermitian
from sep_core.exceptions import DimensionMismatch, InvariantViolation, NonFiniteEntries, NotHermitian
from sep_core.matlin import (
    TOL_SVD,
    DensityState,
    SubsystemDims,
    as_cmatrix,
    from_entries,
    hermitian_eigenvalues,
    identity,
    kron,
    partial_trace,
    reduced_states,
    singular_values,
    svd,
    trace_norm,
    unvec,
    vec,
)
from sep_core.states import horodecki_3x3, random_unitary, werner

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


def test_kron_identity():
    np.testing.assert_array_equal(kron(identity(2), identity(2)), identity(4))


def test_kron_permutation_blocks():
    x = as_cmatrix([[0, 1], [1, 0]])
    expected = np.zeros((4, 4))
    expected[0, 2] = expected[1, 3] = expected[2, 0] = expected[3, 1] = 1
    np.testing.assert_array_equal(kron(x, identity(2)), expected)


def test_kron_entry_formula(rng):
    a, b = random_complex(rng, 2, 2), random_complex(rng, 2, 2)
    assert kron(a, b)[3, 2] == pytest.approx(a[1, 1] * b[1, 0])


def test_vec_stacks_columns():
    a = from_entries(2, 2, [11, 12, 21, 22])
    np.testing.assert_array_equal(vec(a).ravel(), [11, 21, 12, 22])
    np.testing.assert_array_equal(vec(identity(2)).ravel(), [1, 0, 0, 1])
    np.testing.assert_array_equal(vec(as_cmatrix([[1, 2, 3]])).ravel(), [1, 2, 3])


def test_unvec_inverts_vec(rng):
    a = random_complex(rng, 3, 4)
    np.testing.assert_array_equal(unvec(vec(a), 3, 4), a)
    with pytest.raises(DimensionMismatch):
        unvec(vec(a), 5, 5)


@given(arrays(np.float64, (3, 3), elements=finite), arrays(np.float64, (3, 3), elements=finite),
       arrays(np.float64, (3, 3), elements=finite))
def test_vec_of_triple_product(x, y, z):
    lhs = vec(x @ y @ z)
    rhs = kron(z.T.astype(np.complex128), x.astype(np.complex128)) @ vec(y.astype(np.complex128))
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-9)


def test_trace_norm_values(werner_entangled):
    from sep_core.gptops import realign
    assert trace_norm(identity(3)) == pytest.approx(3)
    assert trace_norm(as_cmatrix(np.diag([1, -2]))) == pytest.approx(3)
    assert trace_norm(realign(werner_entangled.mat, werner_entangled.dims)) == pytest.approx(5 / 3, abs=1e-12)


@given(arrays(np.float64, (2, 3), elements=finite), arrays(np.float64, (3, 2), elements=finite))
def test_trace_norm_is_multiplicative_over_kron(a, b):
    expected = trace_norm(as_cmatrix(a)) * trace_norm(as_cmatrix(b))
    assert trace_norm(kron(as_cmatrix(a), as_cmatrix(b))) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_svd_diagonal_and_zero():
    _, sigma, _ = svd(as_cmatrix(np.diag([3, 4])))
    np.testing.assert_allclose(sigma, [4, 3])
    np.testing.assert_array_equal(singular_values(np.zeros((3, 3), dtype=np.complex128)), 0)


@pytest.mark.parametrize('seed', range(100))
def test_svd_reconstructs(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 82, size=2)
    m = random_complex(rng, rows, cols)
    u, sigma, v = svd(m)
    k = min(rows, cols)
    assert u.shape == (rows, k) and v.shape == (cols, k)
    assert np.all(np.diff(sigma) <= 0) and np.all(sigma >= 0)
    assert np.linalg.norm(u @ np.diag(sigma) @ v.conj().T - m) <= TOL_SVD
    assert np.linalg.norm(u.conj().T @ u - identity(k)) <= TOL_SVD
    assert np.linalg.norm(v.conj().T @ v - identity(k)) <= TOL_SVD


@pytest.mark.parametrize('seed', range(20))
def test_trace_norm_is_unitarily_invariant(seed):
    rng = np.random.default_rng(seed)
    m = random_complex(rng, 6, 6)
    u, w = random_unitary(6, seed), random_unitary(6, seed + 1000)
    assert trace_norm(u @ m @ w) == pytest.approx(trace_norm(m), rel=1e-12)


@pytest.mark.parametrize('seed', range(20))
def test_hermitian_spectrum(seed):
    m = random_hermitian(np.random.default_rng(seed), 5)
    eigenvalues = hermitian_eigenvalues(m)
    assert np.all(np.diff(eigenvalues) >= 0)
    assert eigenvalues.sum() == pytest.approx(np.trace(m).real, abs=1e-10)
    assert trace_norm(m) == pytest.approx(np.abs(eigenvalues).sum(), abs=1e-10)


def test_hermitian_eigenvalues():
    np.testing.assert_allclose(hermitian_eigenvalues(identity(3)), [1, 1, 1])
    np.testing.assert_allclose(hermitian_eigenvalues(as_cmatrix([[0, 1], [1, 0]])), [-1, 1])
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(as_cmatrix([[0, 1], [0, 0]]))


def test_as_cmatrix_rejects_bad_input():
    with pytest.raises(NonFiniteEntries):
        as_cmatrix([[1, np.nan]])
    with pytest.raises(DimensionMismatch):
        as_cmatrix(np.zeros((2, 2, 2)))
    with pytest.raises(DimensionMismatch):
        from_entries(2, 2, [1, 2, 3])


def test_density_state_is_read_only_copy():
    source = identity(4) / 4
    rho = DensityState(SubsystemDims(2, 2), source)
    source[0, 0] = 7
    assert rho.mat[0, 0] == 0.25
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1


@pytest.mark.parametrize('mat, message', [
    (np.diag([0.5, 0.5, 0.5, 0.5]), 'Trace'),
    (np.diag([1.5, -0.5, 0, 0]), 'positive'),
    (np.array([[0.5, 1], [0, 0.5]]), 'Hermitian'),
])
def test_density_state_validation(mat, message):
    dims = SubsystemDims(2, 2) if mat.shape[0] == 4 else SubsystemDims(1, 2)
    with pytest.raises(InvariantViolation, match=message):
        DensityState(dims, mat)
    DensityState(dims, mat, checked=False)


def test_density_state_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        DensityState(SubsystemDims(2, 3), identity(4) / 4)
    with pytest.raises(DimensionMismatch):
        SubsystemDims(0, 2)


def test_partial_trace_of_product(rng):
    a, b = random_hermitian(rng, 2), random_hermitian(rng, 3)
    rho = DensityState(SubsystemDims(2, 3), kron(a, b), checked=False)
    np.testing.assert_allclose(partial_trace(rho, 'B'), a * np.trace(b), atol=1e-12)
    np.testing.assert_allclose(partial_trace(rho, 'A'), b * np.trace(a), atol=1e-12)
    with pytest.raises(ValueError):
        partial_trace(rho, 'C')


@pytest.mark.parametrize('f', [-1, -0.5, 0, 0.5, 1])
def test_partial_trace_of_werner(f):
    rho_a, rho_b = reduced_states(werner(3, f).state)
    np.testing.assert_allclose(rho_a, identity(3) / 3, atol=1e-14)
    np.testing.assert_allclose(rho_b, identity(3) / 3, atol=1e-14)


def test_partial_trace_of_horodecki():
    c = 0.3
    rho_a, rho_b = reduced_states(horodecki_3x3(c).state)
    for reduced in (rho_a, rho_b):
        np.testing.assert_allclose(reduced, reduced.conj().T)
        assert np.trace(reduced) == pytest.approx(1)
    np.testing.assert_allclose(np.diag(rho_a).real, np.array([3 * c, 3 * c, 1 + 2 * c]) / (8 * c + 1), atol=1e-14)
