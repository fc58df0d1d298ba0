"""Seeded random instances.

All generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so the
output depends on the seed alone.
"""

import numpy as np

from . import qarray as qa
from .errors import BadDimensions
from .linalg import DQMatrix

KINDS = ("hermitian", "general", "psd", "pose")


def random_dq(rng, m, n):
    return DQMatrix(rng.standard_normal((m, n, 4)), rng.standard_normal((m, n, 4)))


def random_hermitian(rng, n):
    R = random_dq(rng, n, n)
    return (R + R.H) * 0.5


def random_unitary(rng, n):
    """Unitary dual quaternion matrix from the eigenvectors of a random Hermitian one."""
    from .spectral import eig_hermitian
    return eig_hermitian(random_hermitian(rng, n)).U


def random_pose(rng, m, n):
    """Unit dual quaternions ``q_r + (t q_r / 2) eps`` with unit ``q_r`` and pure ``t``."""
    q = rng.standard_normal((m, n, 4))
    q /= np.linalg.norm(q, axis=-1, keepdims=True)
    t = np.zeros((m, n, 4))
    t[..., 1:] = rng.standard_normal((m, n, 3))
    return DQMatrix(q, 0.5 * qa.qmul(t, q))


def generate(kind, m, n, seed):
    """Matrix of the given kind.

    ``hermitian`` needs ``m == n``.  ``psd`` returns ``B* B`` for a random
    m x n ``B`` (so the result is n x n).
    """
    if m < 1 or n < 1:
        raise BadDimensions(f"dimensions must be >= 1, got {m}x{n}")
    rng = np.random.default_rng(seed)
    if kind == "hermitian":
        if m != n:
            raise BadDimensions("hermitian matrices must be square")
        return random_hermitian(rng, n)
    if kind == "general":
        return random_dq(rng, m, n)
    if kind == "psd":
        B = random_dq(rng, m, n)
        P = B.H @ B
        return (P + P.H) * 0.5
    if kind == "pose":
        return random_pose(rng, m, n)
    raise BadDimensions(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
