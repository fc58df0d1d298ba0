import importlib

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dqspectra import _jacobi_py
from dqspectra import qarray as qa
from dqspectra import quat_kernel as qk
from dqspectra.errors import NoConvergence, NotHermitian

seeds = st.integers(0, 2**32 - 1)


def rand_quat(rng, m, n):
    return rng.standard_normal((m, n, 4))


def rand_herm(rng, n):
    R = rand_quat(rng, n, n)
    return (R + qa.qherm(R)) / 2


def reconstruct(U, vals):
    return qa.qmatmul(qa.qreal_scale_cols(U, vals), qa.qherm(U))


def unitarity(U):
    return qa.qfro(qa.qmatmul(qa.qherm(U), U) - qa.qeye(U.shape[1]))


# complex adjoint

def test_adjoint_examples():
    i = np.array([[[0, 1, 0, 0]]], float)
    j = np.array([[[0, 0, 1, 0]]], float)
    np.testing.assert_array_equal(qk.complex_adjoint(i), np.diag([1j, -1j]))
    np.testing.assert_array_equal(qk.complex_adjoint(j), np.array([[0, 1], [-1, 0]]))


@given(seeds, st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_adjoint_multiplicative_and_star_preserving(seed, m, k, n):
    rng = np.random.default_rng(seed)
    A, B = rand_quat(rng, m, k), rand_quat(rng, k, n)
    lhs = qk.complex_adjoint(qa.qmatmul(A, B))
    rhs = qk.complex_adjoint(A) @ qk.complex_adjoint(B)
    assert np.abs(lhs - rhs).max() <= 1e-12 * (1 + np.abs(lhs).max())
    np.testing.assert_allclose(qk.complex_adjoint(qa.qherm(A)), qk.complex_adjoint(A).conj().T, atol=1e-15)


# complex Jacobi

def test_complex_herm_eig_examples():
    V, w = qk.complex_herm_eig(np.array([[0, 1], [1, 0]]))
    np.testing.assert_allclose(w, [1, -1], atol=1e-15)
    V, w = qk.complex_herm_eig(np.diag([3.0, 1.0]))
    np.testing.assert_array_equal(w, [3, 1])
    np.testing.assert_array_equal(V, np.eye(2))
    V, w = qk.complex_herm_eig(np.array([[2, 1j], [-1j, 2]]))
    np.testing.assert_allclose(w, [3, 1], atol=1e-14)


def test_complex_herm_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        qk.complex_herm_eig(np.array([[0, 1], [0, 0]]))
    with pytest.raises(NotHermitian):
        qk.complex_herm_eig(np.zeros((2, 3)))


def test_no_convergence_when_sweeps_exhausted():
    rng = np.random.default_rng(0)
    Z = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    with pytest.raises(NoConvergence):
        qk.complex_herm_eig(Z + Z.conj().T, max_sweeps=1)


def test_max_sweeps_environment_override(monkeypatch):
    monkeypatch.setenv("DQSPECTRA_MAX_SWEEPS", "1")
    rng = np.random.default_rng(0)
    Z = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    with pytest.raises(NoConvergence):
        qk.complex_herm_eig(Z + Z.conj().T)


@given(seeds, st.integers(1, 12))
def test_complex_herm_eig_matches_numpy(seed, n):
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    H = Z + Z.conj().T
    V, w = qk.complex_herm_eig(H)
    ref = np.linalg.eigvalsh(H)[::-1]
    scale = np.linalg.norm(H)
    assert np.abs(w - ref).max() <= 1e-12 * scale
    assert np.linalg.norm(V.conj().T @ H @ V - np.diag(w)) <= 1e-12 * n * scale
    assert np.linalg.norm(V.conj().T @ V - np.eye(n)) <= 1e-12 * n


@pytest.mark.skipif(qk.BACKEND != "cython", reason="compiled kernel not built")
@given(seeds, st.integers(1, 10))
def test_backends_agree(seed, n):
    from dqspectra import _jacobi
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    H = Z + Z.conj().T
    w1, V1, s1, c1 = _jacobi.jacobi_eigh(H.copy(), 1e-14, 64)
    w2, V2, s2, c2 = _jacobi_py.jacobi_eigh(H.copy(), 1e-14, 64)
    assert c1 and c2
    np.testing.assert_allclose(np.sort(w1), np.sort(w2), atol=1e-12 * np.linalg.norm(H))


def test_pure_python_switch(monkeypatch):
    monkeypatch.setenv("DQSPECTRA_PURE_PYTHON", "1")
    mod = importlib.reload(qk)
    try:
        assert mod.BACKEND == "python"
        _, w = mod.complex_herm_eig(np.array([[2, 1j], [-1j, 2]]))
        np.testing.assert_allclose(w, [3, 1], atol=1e-14)
    finally:
        monkeypatch.delenv("DQSPECTRA_PURE_PYTHON")
        importlib.reload(qk)


# quaternion Hermitian eigendecomposition

def test_quat_herm_eig_examples():
    A = np.zeros((2, 2, 4))
    A[0, 0, 0], A[1, 1, 0] = 2, 1
    U, lam = qk.quat_herm_eig(A)
    np.testing.assert_allclose(lam, [2, 1], atol=1e-15)

    A = np.zeros((2, 2, 4))
    A[0, 1, 1], A[1, 0, 1] = 1, -1  # [[0, i], [-i, 0]]
    U, lam = qk.quat_herm_eig(A)
    np.testing.assert_allclose(lam, [1, -1], atol=1e-14)
    assert qa.qfro(reconstruct(U, lam) - A) <= 1e-14

    U, lam = qk.quat_herm_eig(qa.qeye(4))
    np.testing.assert_allclose(lam, np.ones(4), atol=1e-15)
    assert unitarity(U) <= 1e-14


def test_quat_herm_eig_rejects_non_hermitian():
    A = np.zeros((2, 2, 4))
    A[0, 1, 0] = 1
    with pytest.raises(NotHermitian):
        qk.quat_herm_eig(A)


@given(seeds, st.integers(1, 16))
def test_quat_herm_eig_reconstruction(seed, n):
    A = rand_herm(np.random.default_rng(seed), n)
    U, lam = qk.quat_herm_eig(A)
    norm = qa.qfro(A)
    assert qa.qfro(A - reconstruct(U, lam)) <= 1e-9 * n * norm
    assert unitarity(U) <= 1e-10 * n
    assert np.all(np.diff(lam) <= 0)


@given(seeds, st.integers(1, 10))
def test_quat_eigenvalues_match_adjoint_oracle(seed, n):
    """The adjoint spectrum from LAPACK lists each quaternion eigenvalue twice."""
    A = rand_herm(np.random.default_rng(seed), n)
    _, lam = qk.quat_herm_eig(A)
    ref = np.linalg.eigvalsh(qk.complex_adjoint(A))[::-1]
    norm = qa.qfro(A)
    assert np.abs(ref[0::2] - ref[1::2]).max() <= 1e-8 * norm
    assert np.abs(lam - ref[0::2]).max() <= 1e-12 * n * norm


@given(seeds, st.integers(2, 8), st.data())
def test_quat_herm_eig_degenerate_spectrum(seed, n, data):
    rng = np.random.default_rng(seed)
    Q, _ = qk.quat_herm_eig(rand_herm(rng, n))
    k = data.draw(st.integers(1, n))
    vals = np.sort(rng.integers(-2, 3, size=n).astype(float))[::-1]
    vals[:k] = vals[0]
    A = reconstruct(Q, vals)
    A = (A + qa.qherm(A)) / 2
    U, lam = qk.quat_herm_eig(A)
    np.testing.assert_allclose(lam, vals, atol=1e-12 * n * (1 + qa.qfro(A)))
    assert qa.qfro(A - reconstruct(U, lam)) <= 1e-9 * n * (1 + qa.qfro(A))
    assert unitarity(U) <= 1e-10 * n


def test_phase_fixed_columns():
    A = rand_herm(np.random.default_rng(5), 6)
    U, _ = qk.quat_herm_eig(A)
    mags = qa.qabs2(U)
    idx = np.argmax(mags, axis=0)
    piv = U[idx, np.arange(6)]
    assert np.all(piv[:, 0] > 0)
    assert np.all(piv[:, 1:] == 0)


def test_quat_herm_eig_deterministic():
    A = rand_herm(np.random.default_rng(9), 7)
    U1, l1 = qk.quat_herm_eig(A)
    U2, l2 = qk.quat_herm_eig(A.copy())
    assert np.array_equal(U1, U2) and np.array_equal(l1, l2)


# quaternion SVD

def test_quat_svd_examples():
    j = np.array([[[0, 0, 1, 0]]], float)
    np.testing.assert_allclose(qk.quat_svd(j).s, [1.0])
    res = qk.quat_svd(np.zeros((2, 3, 4)))
    np.testing.assert_array_equal(res.s, [0, 0])
    assert unitarity(res.W1) <= 1e-14 and unitarity(res.W2) <= 1e-14
    G = np.zeros((2, 2, 4))
    G[0, 0, 0] = G[0, 1, 0] = 1
    np.testing.assert_allclose(qk.quat_svd(G).s, [np.sqrt(2), 0], atol=1e-14)


@given(seeds, st.integers(1, 8), st.integers(1, 8))
def test_quat_svd_reconstruction(seed, p, q):
    G = rand_quat(np.random.default_rng(seed), p, q)
    W1, s, W2 = qk.quat_svd(G)
    D = qk.QuatSvd(W1, s, W2).D
    R = qa.qmatmul(qa.qmatmul(W1, D), qa.qherm(W2))
    assert qa.qfro(G - R) <= 1e-9 * max(p, q) * qa.qfro(G)
    assert unitarity(W1) <= 1e-10 * p and unitarity(W2) <= 1e-10 * q
    assert np.all(s >= 0) and np.all(np.diff(s) <= 0)
    ref = np.linalg.svd(qk.complex_adjoint(G), compute_uv=False)[0::2]
    np.testing.assert_allclose(s, ref[:len(s)], atol=1e-12 * max(p, q) * qa.qfro(G))


@given(seeds, st.integers(1, 6), st.integers(1, 6), st.integers(0, 6))
def test_quat_rank_of_low_rank_products(seed, m, n, k):
    rng = np.random.default_rng(seed)
    X, Y = rand_quat(rng, m, k), rand_quat(rng, n, k)
    G = qa.qmatmul(X, qa.qherm(Y)) if k else np.zeros((m, n, 4))
    assert qk.quat_rank(G, 1e-8) == min(k, m, n)
