"""Eigenvalues of dual quaternion Hermitian matrices.

For Hermitian ``A = A_st + A_I eps`` every right eigenvalue is a dual number
``lambda_st + lambda_I eps``: ``lambda_st`` is an eigenvalue of ``A_st`` and,
for a unit standard eigenvector ``x_st``, ``lambda_I = x_st* A_I x_st``.

:func:`eig_hermitian` builds a full unitary diagonalization.  With ``S`` the
unitary eigenvector matrix of ``A_st`` and the standard eigenvalues grouped
into clusters ``lambda_1 > ... > lambda_r``, write ``C = S* A_I S`` in blocks.
The matrix ``P = I + eps N`` with ``N_ij = C_ij / (lambda_i - lambda_j)`` for
``i < j`` and ``N_ji = -N_ij*`` is exactly unitary (``eps**2 = 0``) and removes
every off-diagonal block of ``C``; what remains is ``lambda_i I + eps C_ii``
per cluster, and each Hermitian ``C_ii`` is diagonalized by the quaternion
kernel.
"""

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import qarray as qa
from .config import RunConfig
from .errors import (
    DimensionMismatch,
    EigenpairFailure,
    InternalAssertion,
    NotAppreciable,
    NotHermitian,
    SpectrumNotSimple,
)
from .linalg import DQMatrix, dual_fro_norm, inner
from .quat_kernel import quat_herm_eig
from .scalars import DualNumber, DualQuaternion, dual_sign


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemidefinite"
    INDEFINITE = "Indefinite/Other"


class EigReport(NamedTuple):
    residual_st: float
    residual_inf: float
    unitarity_st: float
    unitarity_inf: float
    lambda_inf_discrepancy: float = 0.0


@dataclass(frozen=True)
class EigDecomposition:
    """``U* A U = diag(eigenvalues)`` with ``U`` unitary.

    ``clusters`` lists ``(lambda_i, k_i)``: the distinct standard eigenvalues
    (descending) and their multiplicities.  Within a cluster the eigenvalues
    are ordered by infinitesimal part, descending.
    """

    U: DQMatrix
    eigenvalues: tuple
    clusters: tuple

    @property
    def n(self):
        return len(self.eigenvalues)

    @property
    def values_st(self):
        return np.array([v.st for v in self.eigenvalues])

    @property
    def values_inf(self):
        return np.array([v.inf for v in self.eigenvalues])

    @property
    def sigma(self):
        return DQMatrix.diag(self.eigenvalues)

    def vector(self, j):
        return self.U.column(j)

    def cluster_index(self):
        """Cluster number of each eigenvalue."""
        return np.repeat(np.arange(len(self.clusters)), [k for _, k in self.clusters])


def _scale(A):
    st, inf = dual_fro_norm(A)
    return 1.0 + st + inf


def _require_hermitian(A, cfg):
    if A.rows != A.cols:
        raise NotHermitian(f"matrix of shape {A.shape} is not square")
    st, inf = dual_fro_norm(A - A.H)
    tol = cfg.struct_tol * _scale(A)
    if st > tol or inf > tol:
        raise NotHermitian(f"A - A* has norms ({st:.3g}, {inf:.3g}) above {tol:.3g}")
    return (A.st + qa.qherm(A.st)) / 2, (A.inf + qa.qherm(A.inf)) / 2


def cluster_values(values, tol):
    """Group descending ``values`` into runs with consecutive gaps ``<= tol``.

    Returns ``(start, stop)`` index pairs.
    """
    bounds = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tol:
            bounds.append((start, i))
            start = i
    return bounds


def rayleigh(A, x):
    """``(x* x)^{-1} (x* A x)``; a dual number whenever ``A`` is Hermitian."""
    if A.rows != A.cols or x.shape != (A.cols, 1):
        raise DimensionMismatch(f"rayleigh quotient of {A.shape} with {x.shape}")
    if not np.any(x.st):
        raise NotAppreciable("vector has zero standard part")
    n2 = inner(x, x).to_dual()
    return n2.inverse() * inner(x, A @ x)


def eig_hermitian(A, cfg=None):
    """Unitary diagonalization of a dual quaternion Hermitian matrix."""
    cfg = cfg or RunConfig()
    A_st, A_I = _require_hermitian(A, cfg)
    n = A.rows
    if n == 0:
        return EigDecomposition(DQMatrix.zeros(0, 0), (), ())

    S, d = quat_herm_eig(A_st, max_sweeps=cfg.max_sweeps)
    bounds = cluster_values(d, cfg.cluster_tol * max(1.0, qa.qfro(A_st)))
    lam = np.array([d[a:b].mean() for a, b in bounds])

    C = qa.qmatmul(qa.qmatmul(qa.qherm(S), A_I), S)
    N = np.zeros_like(C)
    for i, (a, b) in enumerate(bounds):
        for j in range(i + 1, len(bounds)):
            c, e = bounds[j]
            gap = lam[i] - lam[j]
            N[a:b, c:e] = C[a:b, c:e] / gap
            N[c:e, a:b] = -qa.qherm(C[a:b, c:e]) / gap

    # off-diagonal blocks of the infinitesimal part of P M P*
    dd = np.repeat(lam, [b - a for a, b in bounds])
    off = C + qa.qreal_scale_cols(N, dd) - dd[:, None, None] * N
    for a, b in bounds:
        off[a:b, a:b] = 0.0
    if qa.qfro(off) > cfg.residual_tol * _scale(A):
        raise InternalAssertion(f"P M P* is not block diagonal ({qa.qfro(off):.3g})")

    blocks, values = [], []
    for i, (a, b) in enumerate(bounds):
        if b - a == 1:
            W, mu = qa.qeye(1), np.array([C[a, a, 0]])
        else:
            W, mu = quat_herm_eig(C[a:b, a:b], max_sweeps=cfg.max_sweeps)
        blocks.append(W)
        values.extend(DualNumber(lam[i], m) for m in mu)
    W = qa.qblock_diag(blocks)

    U = DQMatrix(qa.qmatmul(S, W), -qa.qmatmul(qa.qmatmul(S, N), W))
    U = fix_phase(U)
    clusters = tuple((float(lam[i]), b - a) for i, (a, b) in enumerate(bounds))
    return EigDecomposition(U, tuple(values), clusters)


def fix_phase(U):
    """Right-multiply each column by the unit quaternion that makes the
    largest-magnitude standard entry real and positive."""
    _, g = qa.phase_fix(U.st)
    return U.right_mul_columns(g)


def eig_simple(A, cfg=None):
    """Eigenpairs from the closed-form first-order formulas (simple ``A_st`` spectrum).

    ``lambda_I,i = x_i* A_I x_i`` and
    ``x_I,i = sum_{j != i} x_j x_j* (A_I - lambda_I,i) x_i / (lambda_i - lambda_j)``
    where ``x_i`` are the unit eigenvectors of ``A_st``.
    """
    cfg = cfg or RunConfig()
    A_st, A_I = _require_hermitian(A, cfg)
    n = A.rows
    X, d = quat_herm_eig(A_st, max_sweeps=cfg.max_sweeps)
    if n > 1:
        gap = float(np.min(d[:-1] - d[1:]))
        if gap <= cfg.gap_tol:
            raise SpectrumNotSimple(f"standard eigenvalues have gap {gap:.3g} <= {cfg.gap_tol:.3g}")
    AX = qa.qmatmul(A_I, X)
    lam_I = np.sum(X * AX, axis=(0, 2))
    Y = AX - qa.qreal_scale_cols(X, lam_I)
    Cm = qa.qmatmul(qa.qherm(X), Y)  # (j, i) -> x_j* (A_I - lam_I,i) x_i
    denom = d[None, :] - d[:, None]  # lambda_i - lambda_j at (j, i)
    np.fill_diagonal(denom, np.inf)
    X_I = qa.qmatmul(X, Cm / denom[:, :, None])
    values = tuple(DualNumber(a, b) for a, b in zip(d, lam_I))
    clusters = tuple((float(v), 1) for v in d)
    return EigDecomposition(DQMatrix(X, X_I), values, clusters)


def eig_report(A, eig):
    """Residual norms of ``U* A U - Sigma`` and ``U* U - I``."""
    U = eig.U
    res = dual_fro_norm(U.H @ A @ U - eig.sigma)
    uni = dual_fro_norm(U.H @ U - DQMatrix.identity(U.cols))
    return EigReport(res[0], res[1], uni[0], uni[1])


def verify_eigenpair(A, lam, x, tol):
    """Check ``A x = x lam`` gradewise.

    Standard part: ``A_st x_st = x_st lam_st``.  Infinitesimal part:
    ``x_st lam_I = A_I x_st + A_st x_I - x_I lam_st``.  Also recomputes
    ``lam_I = x_st* A_I x_st / x_st* x_st`` and reports the discrepancy.
    Raises :class:`EigenpairFailure` when any residual exceeds ``tol``.
    """
    if x.shape != (A.cols, 1):
        raise DimensionMismatch(f"vector of shape {x.shape} for matrix {A.shape}")
    lam = DualNumber._coerce(lam)
    x_st, x_I = x.st, x.inf
    nn = float(np.sum(np.square(x_st)))
    if nn == 0.0:
        raise NotAppreciable("eigenvector candidate has zero standard part")
    Ax_st = qa.qmatmul(A.st, x_st)
    r_st = qa.qfro(Ax_st - x_st * lam.st)
    r_inf = qa.qfro(qa.qmatmul(A.inf, x_st) + qa.qmatmul(A.st, x_I) - x_I * lam.st - x_st * lam.inf)
    lam_I = float(np.sum(x_st * qa.qmatmul(A.inf, x_st))) / nn
    n2 = inner(x, x)
    unit = DualQuaternion(n2.st - 1.0, n2.inf)
    report = EigReport(r_st, r_inf, unit.st.norm(), unit.inf.norm(), abs(lam_I - lam.inf))
    if max(r_st, r_inf, report.lambda_inf_discrepancy) > tol:
        raise EigenpairFailure(
            f"eigenpair residuals ({r_st:.3g}, {r_inf:.3g}, {report.lambda_inf_discrepancy:.3g}) exceed {tol:.3g}",
            report)
    return report


def classify_definiteness(eig, tol=0.0):
    """Definiteness from the eigenvalues (components within ``tol`` count as zero).

    Positive definite: every eigenvalue positive and appreciable.  Positive
    semidefinite: every eigenvalue nonnegative in the dual order.
    """
    signs = [dual_sign(v, tol) for v in eig.eigenvalues]
    if all(v.st > tol for v in eig.eigenvalues):
        return Definiteness.POSITIVE_DEFINITE
    if all(s >= 0 for s in signs):
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.INDEFINITE


def check_orthogonality(eig, tol):
    """Eigenvectors from different clusters are orthogonal in both parts."""
    G = eig.U.H @ eig.U
    idx = eig.cluster_index()
    mask = idx[:, None] != idx[None, :]
    st = np.sqrt(qa.qabs2(G.st))[mask]
    inf = np.sqrt(qa.qabs2(G.inf))[mask]
    return bool(np.all(st <= tol) and np.all(inf <= tol))


class OracleReport(NamedTuple):
    hs: tuple
    deviations: tuple
    ratio: float
    passed: bool


def fd_oracle(A, hs=(1e-4, 1e-5), cfg=None, eig=None):
    """Compare ``lambda_st + h lambda_I`` against eigenvalues of ``A_st + h A_I``.

    The first-order formulas make the deviation ``O(h^2)``; the check passes
    when the deviation at ``hs[0]`` is at least 50 times the one at ``hs[1]``
    or both are within ``cfg.residual_tol``.
    """
    cfg = cfg or RunConfig()
    A_st, A_I = _require_hermitian(A, cfg)
    if eig is None:
        eig = eig_hermitian(A, cfg)
    dev = []
    for h in hs:
        _, exact = quat_herm_eig(A_st + h * A_I, max_sweeps=cfg.max_sweeps)
        approx = np.sort(eig.values_st + h * eig.values_inf)[::-1]
        dev.append(float(np.max(np.abs(exact - approx))) if len(exact) else 0.0)
    ratio = math.inf
    if len(dev) >= 2:
        ratio = dev[0] / dev[1] if dev[1] > 0 else (math.inf if dev[0] > 0 else math.nan)
    passed = all(v <= cfg.residual_tol for v in dev) or (len(dev) >= 2 and ratio >= 50)
    return OracleReport(tuple(hs), tuple(dev), ratio, passed)
