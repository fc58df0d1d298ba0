"""Quaternion Hermitian eigendecomposition and SVD via the complex adjoint.

A quaternion matrix ``A = A1 + A2 j`` is represented by the complex matrix

    chi(A) = [[A1, A2], [-conj(A2), conj(A1)]]

which is multiplicative and preserves conjugate transposes.  Eigenvalues of
``chi(A)`` for Hermitian ``A`` come in equal pairs; an eigenvector
``(v1; v2)`` maps to the quaternion eigenvector ``v1 - conj(v2) j``.

The Jacobi sweep runs in the compiled ``_jacobi`` extension when it is
available and in ``_jacobi_py`` otherwise; set ``DQSPECTRA_PURE_PYTHON=1`` to
force the fallback.
"""

import os
from typing import NamedTuple

import numpy as np

from . import qarray as qa
from .config import default_max_sweeps
from .errors import CompletionFailure, NoConvergence, NotHermitian

if os.environ.get("DQSPECTRA_PURE_PYTHON"):
    from ._jacobi_py import jacobi_eigh as _jacobi_eigh
    BACKEND = "python"
else:
    try:
        from ._jacobi import jacobi_eigh as _jacobi_eigh
        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._jacobi_py import jacobi_eigh as _jacobi_eigh
        BACKEND = "python"

JACOBI_TOL = 1e-14
HERM_TOL = 1e-10
# relative gap under which adjoint eigenvalues are treated as one cluster
GROUP_TOL = 1e-10


class QuatEig(NamedTuple):
    U: np.ndarray  # (n, n, 4) unitary
    values: np.ndarray  # (n,) descending


class QuatSvd(NamedTuple):
    W1: np.ndarray  # (p, p, 4)
    s: np.ndarray  # (min(p, q),) descending, nonnegative
    W2: np.ndarray  # (q, q, 4)

    @property
    def D(self):
        p, q = self.W1.shape[0], self.W2.shape[0]
        D = np.zeros((p, q, 4))
        k = len(self.s)
        D[np.arange(k), np.arange(k), 0] = self.s
        return D


def complex_adjoint(A):
    """The ``2m x 2n`` complex adjoint of an ``(m, n, 4)`` quaternion array."""
    A1, A2 = qa.to_complex(A)
    return np.block([[A1, A2], [-A2.conj(), A1.conj()]])


def complex_herm_eig(H, tol=JACOBI_TOL, max_sweeps=None, herm_tol=HERM_TOL):
    """Eigenvalues (descending) and unitary eigenvectors of a complex Hermitian matrix.

    Runs cyclic Jacobi until the off-diagonal Frobenius norm is at most
    ``tol * ||H||_F``.  ``H`` must be Hermitian to ``herm_tol`` relative to its norm.
    """
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {H.shape}")
    norm = np.linalg.norm(H)
    if np.linalg.norm(H - H.conj().T) > herm_tol * max(norm, 1.0):
        raise NotHermitian("matrix is not Hermitian")
    if max_sweeps is None:
        max_sweeps = default_max_sweeps()
    H = (H + H.conj().T) / 2
    w, V, sweeps, converged = _jacobi_eigh(H, tol, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    order = np.argsort(-w, kind="stable")
    return V[:, order], w[order]


def _project(Q, X):
    """Remove the span of orthonormal columns ``Q`` from ``X`` (twice)."""
    if Q.shape[1] == 0:
        return X
    for _ in range(2):
        X = X - qa.qmatmul(Q, qa.qmatmul(qa.qherm(Q), X))
    return X


def _col_norms(X):
    return np.sqrt(np.sum(np.square(X), axis=(0, 2)))


def _pivoted_pick(Q, cand, count):
    """Append ``count`` orthonormal columns to ``Q`` drawn from ``cand``.

    Each step takes the candidate with the largest residual (lowest index on
    ties), which keeps the normalization well conditioned.
    """
    cand = _project(Q, cand)
    picked = []
    alive = np.ones(cand.shape[1], dtype=bool)
    for _ in range(count):
        norms = np.where(alive, _col_norms(cand), -1.0)
        j = int(np.argmax(norms))
        if norms[j] <= 0.0:
            raise CompletionFailure("ran out of independent candidates")
        alive[j] = False
        x = _project(Q, cand[:, j:j + 1])
        if picked:
            x = _project(np.concatenate(picked, axis=1), x)
        x = x / np.sqrt(np.sum(np.square(x)))
        picked.append(x)
        cand = cand - qa.qmatmul(x, qa.qmatmul(qa.qherm(x), cand))
    return np.concatenate([Q] + picked, axis=1)


def _clusters(values, tol):
    """Split descending ``values`` into runs whose consecutive gaps are <= tol."""
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tol:
            groups.append((start, i))
            start = i
    return groups


def _order(U, values):
    """Descending values; exact ties broken by the columns' components."""
    n = len(values)
    keys = sorted(range(n), key=lambda i: (-values[i], tuple(-U[:, i].ravel())))
    return U[:, keys], values[keys]


def quat_herm_eig(A, tol=JACOBI_TOL, max_sweeps=None, herm_tol=HERM_TOL):
    """Unitary ``U`` and real eigenvalues (descending) with ``A U = U diag(values)``.

    Eigenvectors are phase fixed: the largest-magnitude entry of each column
    is real and positive.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.ndim != 3 or A.shape[1] != n or A.shape[2] != 4:
        raise NotHermitian(f"expected an (n, n, 4) array, got shape {A.shape}")
    if n == 0:
        return QuatEig(np.zeros((0, 0, 4)), np.zeros(0))
    norm = qa.qfro(A)
    if qa.qfro(A - qa.qherm(A)) > herm_tol * max(norm, 1.0):
        raise NotHermitian("quaternion matrix is not Hermitian")
    A = (A + qa.qherm(A)) / 2
    if n == 1:
        return QuatEig(qa.qeye(1), np.array([A[0, 0, 0]]))
    V, w = complex_herm_eig(complex_adjoint(A), tol, max_sweeps, herm_tol=np.inf)
    v1, v2 = V[:n], V[n:]
    cand = qa.from_complex(v1, -v2.conj())

    groups = []
    for start, stop in _clusters(w, GROUP_TOL * max(np.linalg.norm(w), 1e-300)):
        if groups and (groups[-1][1] - groups[-1][0]) % 2:
            groups[-1] = (groups[-1][0], stop)
        else:
            groups.append((start, stop))

    U = np.zeros((n, 0, 4))
    for start, stop in groups:
        count = min((stop - start + 1) // 2, n - U.shape[1])
        U = _pivoted_pick(U, cand[:, start:stop], count)
    if U.shape[1] != n:
        raise CompletionFailure(f"recovered {U.shape[1]} of {n} eigenvectors")

    U, _ = qa.phase_fix(U)
    AU = qa.qmatmul(A, U)
    values = np.sum(U * AU, axis=(0, 2))  # Re(u* A u)
    return QuatEig(*_order(U, values))


def quat_complete(Q, m, tol=1e-8):
    """Extend orthonormal quaternion columns ``Q`` (m x r) to an m x m unitary."""
    Q = np.asarray(Q, dtype=float).reshape(m, -1, 4)
    r = Q.shape[1]
    if r == m:
        return Q
    eye = qa.qeye(m)
    out = Q
    residual = _project(Q, eye)
    for _ in range(m - r):
        norms = _col_norms(residual)
        j = int(np.argmax(norms))
        if norms[j] <= tol:
            raise CompletionFailure(f"only {out.shape[1]} of {m} columns could be built")
        out = _pivoted_pick(out, residual[:, j:j + 1], 1)
        residual = _project(out, eye)
    return out


def quat_svd(G, tol=1e-12, max_sweeps=None):
    """``W1* G W2 = D`` with ``D`` diagonal, nonnegative and descending.

    Right vectors come from the Hermitian eigendecomposition of ``G* G``.  The
    singular values are taken as the column norms of ``G W2`` rather than square
    roots of eigenvalues, which resolves small and zero values to working
    precision.  Left vectors are ``G w / sigma`` for ``sigma > tol * ||G||_F``,
    re-orthonormalized and completed to a unitary matrix.
    """
    G = np.asarray(G, dtype=float)
    p, q = G.shape[:2]
    k = min(p, q)
    if q == 0:
        return QuatSvd(qa.qeye(p), np.zeros(0), np.zeros((0, 0, 4)))
    if p == 0:
        return QuatSvd(np.zeros((0, 0, 4)), np.zeros(0), qa.qeye(q))
    W2, _ = quat_herm_eig(qa.qmatmul(qa.qherm(G), G), max_sweeps=max_sweeps)
    Y = qa.qmatmul(G, W2)
    s = _col_norms(Y)
    order = np.argsort(-s, kind="stable")
    W2, Y, s = W2[:, order], Y[:, order], s[order]
    s = s[:k]
    keep = int(np.sum(s > tol * qa.qfro(G)))
    W1 = np.zeros((p, 0, 4))
    if keep:
        W1 = _mgs_in_order(Y[:, :keep] / s[None, :keep, None])
    W1 = quat_complete(W1, p)
    return QuatSvd(W1, s, W2)


def _mgs_in_order(X):
    """Modified Gram-Schmidt of the columns of ``X`` in their given order."""
    Q = np.zeros((X.shape[0], 0, 4))
    for j in range(X.shape[1]):
        x = _project(Q, X[:, j:j + 1])
        x = x / np.sqrt(np.sum(np.square(x)))
        Q = np.concatenate([Q, x], axis=1)
    return Q


def quat_rank(G, zero_tol):
    """Number of singular values of ``G`` above ``zero_tol * ||G||_F``."""
    G = np.asarray(G, dtype=float)
    if G.size == 0:
        return 0
    s = quat_svd(G).s
    return int(np.sum(s > zero_tol * qa.qfro(G)))
