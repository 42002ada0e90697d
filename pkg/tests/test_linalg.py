import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qcorr import linalg
from qcorr.states import random_density, xstate_matrix

finite = st.floats(-1, 1, allow_nan=False, allow_infinity=False)


def hermitian_from(re, im):
    a = re + 1j * im
    return 0.5 * (a + a.conj().T)


@st.composite
def hermitian_matrices(draw, n=4):
    re = draw(arrays(float, (n, n), elements=finite))
    im = draw(arrays(float, (n, n), elements=finite))
    return hermitian_from(re, im)


def test_identity_spectrum():
    w, v = linalg.hermitian_eig(np.eye(4))
    np.testing.assert_array_equal(w, np.ones(4))
    np.testing.assert_allclose(v, np.eye(4))


def test_diagonal_spectrum():
    w, _ = linalg.hermitian_eig(np.diag([0.5, 0, 0, 0.5]))
    np.testing.assert_allclose(w, [0, 0, 0.5, 0.5], atol=1e-15)


def test_bell_partial_transpose_spectrum():
    # characteristic polynomial (2x - 1)^3 (2x + 1) / 16, computed symbolically
    pt = linalg.partial_transpose(xstate_matrix(0.0, 0.0))
    w = linalg.eigvalsh(pt)
    np.testing.assert_allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_family_partial_transpose_spectrum_matches_charpoly():
    # roots of (2x-1)(2x+1-4r)(2x-1+2r-2s)(2x-1+2r+2s)
    for r, s in [(0.15, 0.07), (0.3, 0.1), (0.32, 0.3), (0.45, -0.2)]:
        w = linalg.eigvalsh(linalg.partial_transpose(xstate_matrix(r, s)))
        roots = sorted([0.5, 2 * r - 0.5, 0.5 - r + s, 0.5 - r - s])
        np.testing.assert_allclose(w, roots, atol=1e-12)


def test_rejects_non_hermitian():
    a = np.array([[1, 1], [0, 1]], dtype=complex)
    with pytest.raises(linalg.NotHermitianError):
        linalg.hermitian_eig(a)


@settings(max_examples=200, deadline=None)
@given(hermitian_matrices())
def test_eig_reconstruction_and_orthonormality(a):
    w, v = linalg.hermitian_eig(a)
    assert np.all(np.diff(w) >= 0)
    np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, a, atol=1e-10)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(4), atol=1e-10)
    assert abs(w.sum() - np.trace(a).real) < 1e-10
    assert abs((w ** 2).sum() - np.trace(a @ a).real) < 1e-10


@settings(max_examples=100, deadline=None)
@given(hermitian_matrices())
def test_eig_agrees_with_lapack(a):
    np.testing.assert_allclose(linalg.eigvalsh(a), np.linalg.eigvalsh(a), atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(arrays(float, (3, 3), elements=finite))
def test_real_symmetric_three_by_three(a):
    a = 0.5 * (a + a.T)
    w, v = linalg.hermitian_eig(a)
    assert v.dtype == float
    np.testing.assert_allclose(v @ np.diag(w) @ v.T, a, atol=1e-10)


def test_phase_convention_is_deterministic(rng):
    a = np.asarray(random_density(rng))
    w1, v1 = linalg.hermitian_eig(a)
    w2, v2 = linalg.hermitian_eig(a.copy())
    assert w1.tobytes() == w2.tobytes()
    assert v1.tobytes() == v2.tobytes()
    for k in range(4):
        col = v1[:, k]
        first = col[np.flatnonzero(np.abs(col) > 1e-12)[0]]
        assert first.imag == 0 and first.real > 0


def test_sqrt_of_scalar_and_diagonal():
    np.testing.assert_allclose(linalg.matrix_sqrt_psd(np.eye(4) / 4), np.eye(4) / 2, atol=1e-15)
    root = linalg.matrix_sqrt_psd(np.diag([0.5, 0, 0, 0.5]))
    np.testing.assert_allclose(root, np.diag([np.sqrt(0.5), 0, 0, np.sqrt(0.5)]), atol=1e-15)


def test_sqrt_of_family_state():
    rho = xstate_matrix(0.15, 0.07)
    root = linalg.matrix_sqrt_psd(rho)
    np.testing.assert_allclose(root @ root, rho, atol=1e-9)
    assert linalg.hermitian_defect(root) == 0
    assert linalg.eigvalsh(root)[0] >= -1e-12


def test_sqrt_random_psd(rng):
    for _ in range(100):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        a = g.conj().T @ g
        a /= np.trace(a).real
        root = linalg.matrix_sqrt_psd(a)
        np.testing.assert_allclose(root @ root, a, atol=1e-9)
        np.testing.assert_allclose(root, scipy.linalg.sqrtm(a), atol=1e-9)


def test_sqrt_clamps_roundoff_and_rejects_negative():
    a = np.diag([0.5, 0.5, -1e-12, 0.0])
    np.testing.assert_allclose(linalg.matrix_sqrt_psd(a), np.diag([np.sqrt(.5)] * 2 + [0, 0]))
    with pytest.raises(linalg.NotPSDError):
        linalg.matrix_sqrt_psd(np.diag([0.6, 0.6, -0.1, -0.1]))


def test_partial_transpose_fixes_diagonal():
    d = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
    np.testing.assert_array_equal(linalg.partial_transpose(d), d)
    np.testing.assert_array_equal(linalg.partial_transpose(d, "B"), d)


def test_partial_transpose_involution_trace_hermiticity(rng):
    for _ in range(100):
        rho = np.asarray(random_density(rng))
        for sub in "AB":
            pt = linalg.partial_transpose(rho, sub)
            np.testing.assert_array_equal(linalg.partial_transpose(pt, sub), rho)
            assert np.trace(pt) == np.trace(rho)
            assert linalg.hermitian_defect(pt) == linalg.hermitian_defect(rho)


def test_partial_transpose_a_and_b_related_by_full_transpose(rng):
    rho = np.asarray(random_density(rng))
    np.testing.assert_array_equal(linalg.partial_transpose(rho, "A"),
                                  linalg.partial_transpose(rho, "B").T)


def test_partial_transpose_on_product_operator():
    a = np.array([[1, 2j], [3, 4]])
    b = np.array([[5, 6], [7j, 8]])
    np.testing.assert_array_equal(linalg.partial_transpose(np.kron(a, b), "A"), np.kron(a.T, b))
    np.testing.assert_array_equal(linalg.partial_transpose(np.kron(a, b), "B"), np.kron(a, b.T))


def test_partial_transpose_bad_subsystem():
    with pytest.raises(ValueError):
        linalg.partial_transpose(np.eye(4), "C")


def test_kron_identities():
    np.testing.assert_array_equal(linalg.kron(linalg.IDENTITY2, linalg.IDENTITY2), np.eye(4))
    zsum = linalg.kron(linalg.SIGMA_Z, linalg.IDENTITY2) + linalg.kron(linalg.IDENTITY2, linalg.SIGMA_Z)
    np.testing.assert_array_equal(zsum, np.diag([2, 0, 0, -2]))
    np.testing.assert_array_equal(linalg.kron(linalg.SIGMA_X, linalg.SIGMA_X), np.fliplr(np.eye(4)))
