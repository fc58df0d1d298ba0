"""Square roots, singular values and ranks of dual quaternion matrices.

A PSD Hermitian matrix is *perfect* when it has a PSD Hermitian square root.
That happens exactly when every eigenvalue with zero standard part is zero
outright: eigenvalues ``a + b eps`` with ``a > 0`` have the root
``sqrt(a) + b / (2 sqrt(a)) eps``, while an eigenvalue ``b eps`` with
``b != 0`` would need a root ``s + t eps`` with ``s**2 = 0`` and ``2 s t = b``.
Any ``B* B`` is perfect, and the SVD below is built on that fact.

Zero tests are relative: a standard eigenvalue of ``A`` counts as zero when it
is at most ``zero_tol * ||A_st||_F`` and an infinitesimal part when it is at
most ``zero_tol * (||A_st||_F + ||A_I||_F)``.
"""

from dataclasses import dataclass

import numpy as np

from . import qarray as qa
from .config import RunConfig
from .errors import BadRank, InternalAssertion, NotPerfect, NotPSD
from .linalg import DQMatrix, block_diag, dual_fro_norm, mgs_complete
from .quat_kernel import quat_rank, quat_svd
from .scalars import DualNumber, dual_sqrt
from .spectral import eig_hermitian

# orthonormality slack accepted for B U1 Sigma^-1 before completion
ORTHO_TOL = 1e-6


def _thresholds(A, cfg):
    st, inf = dual_fro_norm(A)
    return cfg.zero_tol * st, cfg.zero_tol * (st + inf)


def _psd_eig(A, cfg):
    eig = eig_hermitian(A, cfg)
    thr_st, thr_inf = _thresholds(A, cfg)
    for v in eig.eigenvalues:
        if v.st < -thr_st or (v.st <= thr_st and v.inf < -thr_inf):
            raise NotPSD(f"eigenvalue {v.st:.6g} + {v.inf:.6g} eps is negative")
    return eig, thr_st, thr_inf


def is_perfect(A, cfg=None):
    """True if the PSD Hermitian ``A`` has a PSD Hermitian square root."""
    cfg = cfg or RunConfig()
    eig, thr_st, thr_inf = _psd_eig(A, cfg)
    return all(abs(v.inf) <= thr_inf for v in eig.eigenvalues if v.st <= thr_st)


def psd_sqrt(A, cfg=None):
    """PSD Hermitian ``L`` with ``L @ L == A``."""
    cfg = cfg or RunConfig()
    eig, thr_st, thr_inf = _psd_eig(A, cfg)
    roots = []
    for v in eig.eigenvalues:
        if v.st <= thr_st:
            if abs(v.inf) > thr_inf:
                raise NotPerfect(f"eigenvalue {v.inf:.6g} eps has no dual square root; "
                                 "the matrix is not perfect")
            roots.append(DualNumber(0.0, 0.0))
        else:
            roots.append(dual_sqrt(v))
    U = eig.U
    L = U.scale_columns([r.st for r in roots], [r.inf for r in roots]) @ U.H
    return DQMatrix((L.st + qa.qherm(L.st)) / 2, (L.inf + qa.qherm(L.inf)) / 2)


@dataclass(frozen=True)
class SvdDecomposition:
    """``V* B U = [[Sigma_t, 0], [0, 0]]`` with ``V`` (m x m) and ``U`` (n x n) unitary.

    ``sigma`` holds ``min(m, n)`` dual numbers: ``app_rank_r`` appreciable
    values, then infinitesimal ones (``rank_t`` positive values in total),
    then zeros.
    """

    V: DQMatrix
    U: DQMatrix
    sigma: tuple
    rank_t: int
    app_rank_r: int

    def sigma_matrix(self, k=None):
        """The m x n diagonal factor, optionally keeping only the first ``k`` values."""
        m, n = self.V.rows, self.U.rows
        st = np.zeros((m, n, 4))
        inf = np.zeros((m, n, 4))
        for i, s in enumerate(self.sigma[:k]):
            st[i, i, 0] = s.st
            inf[i, i, 0] = s.inf
        return DQMatrix(st, inf)


def svd(B, cfg=None):
    """Singular value decomposition of an m x n dual quaternion matrix.

    Steps: diagonalize ``A = B* B``; take square roots of the appreciable
    eigenvalues; ``V1 = B U1 Sigma_r^-1``; complete ``V1`` to a unitary ``V``;
    the remaining block ``V2* B U2`` is ``G eps`` for a quaternion matrix ``G``
    whose SVD supplies the infinitesimal singular values.
    """
    cfg = cfg or RunConfig()
    m, n = B.shape
    A = B.H @ B
    eig = eig_hermitian(A, cfg)
    thr_st, thr_inf = _thresholds(A, cfg)

    r = 0
    for lam, k in eig.clusters:
        if lam > thr_st:
            r += k
    vals = eig.eigenvalues
    for v in vals[r:]:
        if v.st < -thr_st or abs(v.inf) > thr_inf:
            raise InternalAssertion(
                f"zero eigenvalue of B*B has nonzero part ({v.st:.3g}, {v.inf:.3g})")

    s_st = np.sqrt([v.st for v in vals[:r]])
    s_inf = np.array([v.inf for v in vals[:r]]) / (2.0 * s_st) if r else np.zeros(0)
    U = eig.U
    V1 = (B @ U[:, :r]).scale_columns(1.0 / s_st, -s_inf / s_st**2)
    V = mgs_complete(V1, tol=ORTHO_TOL)

    G = (V[:, r:].H @ B @ U[:, r:]).inf
    W1, d, W2 = quat_svd(G, max_sweeps=cfg.max_sweeps)
    V_hat = V @ block_diag([DQMatrix.identity(r), DQMatrix(W1)])
    U_hat = U @ block_diag([DQMatrix.identity(r), DQMatrix(W2)])

    st, inf = dual_fro_norm(B)
    cut = cfg.zero_tol * (st + inf)
    d = np.where(d > cut, d, 0.0)
    sigma = [DualNumber(a, b) for a, b in zip(s_st, s_inf)]
    sigma += [DualNumber(0.0, float(x)) for x in d[:min(m, n) - r]]
    t = r + int(np.count_nonzero(d))
    return SvdDecomposition(V_hat, U_hat, tuple(sigma), t, r)


def svd_report(B, dec):
    """``(residual_st, residual_inf, unitarity_V, unitarity_U)``; the last two
    are the larger of the two dual parts."""
    res = dual_fro_norm(dec.V.H @ B @ dec.U - dec.sigma_matrix())
    uv = dual_fro_norm(dec.V.H @ dec.V - DQMatrix.identity(dec.V.cols))
    uu = dual_fro_norm(dec.U.H @ dec.U - DQMatrix.identity(dec.U.cols))
    return res[0], res[1], max(uv), max(uu)


def standard_rank(B, cfg=None):
    """Rank of ``B_st``: singular values above ``zero_tol * ||B_st||_F``."""
    cfg = cfg or RunConfig()
    return quat_rank(B.st, cfg.zero_tol)


def ranks(B, cfg=None, check=True):
    """``(rank_t, app_rank_r)``.

    With ``check`` the appreciable rank is compared with the rank of ``B_st``
    computed independently by the quaternion kernel.
    """
    cfg = cfg or RunConfig()
    dec = svd(B, cfg)
    if check:
        rst = standard_rank(B, cfg)
        if rst != dec.app_rank_r:
            raise InternalAssertion(f"appreciable rank {dec.app_rank_r} != rank of B_st {rst}")
    return dec.rank_t, dec.app_rank_r


def low_rank_approx(B, k, cfg=None, dec=None):
    """Truncated SVD ``V diag(mu_1..mu_k, 0, ...) U*``."""
    m, n = B.shape
    if not 0 <= k <= min(m, n):
        raise BadRank(f"k={k} outside [0, {min(m, n)}]")
    dec = dec or svd(B, cfg)
    return dec.V @ dec.sigma_matrix(k) @ dec.U.H
