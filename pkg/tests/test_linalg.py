import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import general_samples, hermitian_samples
from genpow.errors import DimensionMismatch, NoConvergence, NotHermitian
from genpow.harness.generate import complex_gaussian, from_basis, random_hermitian, random_unitary
from genpow.linalg import (
    DEFAULT_TOL,
    Tolerances,
    add,
    adjoint,
    as_cmatrix,
    commutes,
    hermitian_eigendecompose,
    identity,
    is_hermitian,
    is_positive_definite,
    loewner_leq,
    mul,
    operator_norm,
    scale,
)

N = np.array([[0, 1], [0, 0]], dtype=complex)


# -- arithmetic ---------------------------------------------------------------

def test_adjoint_is_an_involution(rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    np.testing.assert_array_equal(adjoint(adjoint(a)), a)


def test_identity_is_neutral(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    np.testing.assert_array_equal(mul(identity(3), a), a)


def test_adjoint_of_real_nilpotent():
    np.testing.assert_array_equal(adjoint(N), [[0, 0], [1, 0]])


def test_adjoint_conjugates():
    np.testing.assert_array_equal(adjoint([[1j, 2], [3, 4 - 1j]]), [[-1j, 3], [2, 4 + 1j]])


def test_add_and_scale():
    np.testing.assert_array_equal(add(identity(2), N), [[1, 1], [0, 1]])
    np.testing.assert_array_equal(scale(2j, N), [[0, 2j], [0, 0]])


@pytest.mark.parametrize("op", [add, mul])
def test_binary_ops_reject_mismatched_dimensions(op):
    with pytest.raises(DimensionMismatch):
        op(identity(2), identity(3))


@pytest.mark.parametrize("bad", [np.zeros((2, 3)), np.zeros((0, 0)), np.zeros(4)])
def test_as_cmatrix_rejects_non_square(bad):
    with pytest.raises(DimensionMismatch):
        as_cmatrix(bad)


def test_as_cmatrix_rejects_nan():
    with pytest.raises(ValueError):
        as_cmatrix([[1, np.nan], [0, 1]])


def test_identity_rejects_zero_dimension():
    with pytest.raises(DimensionMismatch):
        identity(0)


# -- predicates -----------------------------------------------------------------

@pytest.mark.parametrize(
    "m, expected",
    [
        (np.diag([1.0, 2.0]), True),
        (N, False),
        (np.array([[0, 1j], [-1j, 0]]), True),
        (np.zeros((3, 3)), True),
    ],
)
def test_is_hermitian(m, expected):
    assert is_hermitian(m) is expected


@pytest.mark.parametrize(
    "m, expected",
    [
        (np.diag([1.0, 2.0]), True),
        (np.diag([0.0, 1.0]), False),
        (np.array([[2.0, 1.0], [1.0, 2.0]]), True),
        (np.array([[1.0, 2.0], [2.0, 1.0]]), False),
        (N + np.eye(2), False),
    ],
)
def test_is_positive_definite(m, expected):
    assert is_positive_definite(m) is expected


def test_commutes_examples(rng):
    a = random_hermitian(rng, 4)
    assert commutes(a, identity(4))
    assert not commutes(np.diag([1.0, 2.0]), N)
    # the commutator of the example pair
    d = np.diag([1.0, 2.0])
    np.testing.assert_array_equal(d @ N - N @ d, [[0, -1], [0, 0]])


def test_polynomials_in_one_matrix_commute(rng):
    a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    p = 3 * a @ a - 2j * a + np.eye(5)
    q = a @ a @ a + 0.5 * a
    assert commutes(p, q)


def test_commutes_rejects_mismatch():
    with pytest.raises(DimensionMismatch):
        commutes(identity(2), identity(3))


def test_loewner_examples(rng):
    assert loewner_leq(np.diag([1.0, 1.0]), np.diag([2.0, 3.0]))
    assert not loewner_leq(np.diag([2.0, 0.0]), np.diag([1.0, 1.0]))
    a = random_hermitian(rng, 4)
    assert loewner_leq(a, a)


def test_loewner_requires_hermitian():
    with pytest.raises(NotHermitian):
        loewner_leq(N, identity(2))


def _seeded_hermitian(seed, n):
    return random_hermitian(np.random.default_rng(seed), n)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6))
def test_loewner_antisymmetry(seed, n):
    a = _seeded_hermitian(seed, n)
    r = np.random.default_rng(seed + 1)
    b = a + from_basis(random_unitary(r, n), r.uniform(-1.0, 1.0, n))
    if loewner_leq(a, b) and loewner_leq(b, a):
        assert np.linalg.norm(a - b) < 1e-6


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6))
def test_loewner_transitivity(seed, n):
    r = np.random.default_rng(seed)
    a = random_hermitian(r, n)
    # increments with spectrum clear of zero by far more than 10 * tol_psd
    p = from_basis(random_unitary(r, n), r.uniform(0.01, 2.0, n))
    q = from_basis(random_unitary(r, n), r.uniform(0.01, 2.0, n))
    b, c = a + p, a + p + q
    assert loewner_leq(a, b) and loewner_leq(b, c)
    assert loewner_leq(a, c)


# -- eigendecomposition -----------------------------------------------------------

def test_eig_of_diagonal_is_trivial():
    dec = hermitian_eigendecompose(np.diag([1.0, 2.0]))
    np.testing.assert_array_equal(dec.eigenvalues, [1.0, 2.0])
    np.testing.assert_array_equal(dec.eigenvectors, np.eye(2))


def test_eig_of_two_by_two_matches_characteristic_polynomial():
    # lambda^2 - 4 lambda + 3 = 0
    disc = math.sqrt(4**2 - 4 * 3)
    expected = [(4 - disc) / 2, (4 + disc) / 2]
    dec = hermitian_eigendecompose(np.array([[2.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(dec.eigenvalues, expected, atol=1e-14)


def test_eig_sorted_and_deterministic(rng):
    h = random_hermitian(rng, 6)
    d1, d2 = hermitian_eigendecompose(h), hermitian_eigendecompose(h)
    assert np.all(np.diff(d1.eigenvalues) >= 0)
    np.testing.assert_array_equal(d1.eigenvalues, d2.eigenvalues)
    np.testing.assert_array_equal(d1.eigenvectors, d2.eigenvectors)


def test_eig_reconstruction_on_500_matrices():
    tol = DEFAULT_TOL
    for h in hermitian_samples(500, seed=7):
        dec = hermitian_eigendecompose(h)
        v = dec.eigenvectors
        assert np.linalg.norm(dec.reconstruct() - h) <= tol.tol_recon * np.linalg.norm(h)
        assert np.linalg.norm(v.conj().T @ v - np.eye(len(h))) <= tol.tol_recon


def test_eig_matches_lapack():
    for h in hermitian_samples(100, seed=8):
        dec = hermitian_eigendecompose(h)
        np.testing.assert_allclose(dec.eigenvalues, np.linalg.eigvalsh(h), atol=1e-12 * np.linalg.norm(h))


def test_eig_degenerate_spectrum(rng):
    v = random_unitary(rng, 5)
    h = from_basis(v, [1.0, 1.0, 1.0, -2.0, -2.0])
    dec = hermitian_eigendecompose(h)
    np.testing.assert_allclose(dec.eigenvalues, [-2, -2, 1, 1, 1], atol=1e-13)
    np.testing.assert_allclose(dec.reconstruct(), h, atol=1e-13)


def test_eig_zero_matrix():
    dec = hermitian_eigendecompose(np.zeros((3, 3)))
    np.testing.assert_array_equal(dec.eigenvalues, 0.0)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigendecompose(N)


def test_eig_sweep_cap(rng):
    with pytest.raises(NoConvergence):
        hermitian_eigendecompose(random_hermitian(rng, 6), Tolerances(max_sweeps=1))


@pytest.mark.parametrize("kwargs", [{"tol_herm": 0.0}, {"tol_psd": -1.0}, {"max_sweeps": 0}])
def test_tolerances_validate(kwargs):
    with pytest.raises(ValueError):
        Tolerances(**kwargs)


# -- operator norm ------------------------------------------------------------------

@pytest.mark.parametrize(
    "m, expected",
    [(np.eye(3), 1.0), (np.diag([1.0, -5.0]), 5.0), (N, 1.0)],
)
def test_operator_norm_examples(m, expected):
    assert operator_norm(m) == pytest.approx(expected, rel=1e-14)


def test_operator_norm_matches_svd():
    for a in general_samples(100, seed=9):
        assert operator_norm(a) == pytest.approx(np.linalg.norm(a, 2), rel=1e-12)


def test_operator_norm_submultiplicative_and_adjoint_invariant():
    r = np.random.default_rng(10)
    for i in range(200):
        n = 2 + i % 7
        a, b = complex_gaussian(r, n), complex_gaussian(r, n)
        na, nb = operator_norm(a), operator_norm(b)
        assert operator_norm(a @ b) <= na * nb + 1e-9 * na * nb
        assert abs(operator_norm(adjoint(a)) - na) <= 1e-10 * na


def test_operator_norm_of_hermitian_is_spectral_radius():
    for h in hermitian_samples(50, seed=11):
        assert operator_norm(h) == pytest.approx(np.max(np.abs(np.linalg.eigvalsh(h))), rel=1e-12)
