"""Spectral theory of dual quaternion matrices.

Hermitian eigendecomposition, PSD square roots, singular value decomposition
and ranks over ``DQ = Q + Q eps`` with ``eps**2 = 0``.
"""

__version__ = "0.1.0"

from .config import RunConfig
from .errors import *  # noqa: F401,F403
from .linalg import (
    DQMatrix,
    conj_transpose,
    dq_vector,
    dual_fro_norm,
    inner,
    is_hermitian,
    is_unitary,
    matmul,
    mgs_complete,
)
from .quat_kernel import BACKEND, complex_adjoint, complex_herm_eig, quat_herm_eig, quat_svd
from .scalars import (
    DualNumber,
    DualQuaternion,
    Ordering,
    Quaternion,
    dq_inv,
    dq_mul,
    dual_cmp,
    dual_sqrt,
    quat_inv,
    quat_mul,
)
from .spectral import (
    Definiteness,
    EigDecomposition,
    EigReport,
    check_orthogonality,
    classify_definiteness,
    eig_hermitian,
    eig_report,
    eig_simple,
    fd_oracle,
    rayleigh,
    verify_eigenpair,
)
from .svd import SvdDecomposition, is_perfect, low_rank_approx, psd_sqrt, ranks, svd
