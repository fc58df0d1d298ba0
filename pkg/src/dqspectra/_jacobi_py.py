"""Cyclic Jacobi for complex Hermitian matrices, numpy fallback.

Mirrors ``_jacobi.pyx`` rotation for rotation; the compiled module is used
when it is importable.
"""

import math

import numpy as np


def jacobi_eigh(H, tol, max_sweeps):
    """Diagonalize Hermitian ``H`` by cyclic complex Jacobi rotations.

    Returns ``(w, V, sweeps, converged)`` with ``H V = V diag(w)``; ``w`` is
    unsorted.  Convergence: off-diagonal Frobenius norm <= ``tol * ||H||_F``.
    """
    n = H.shape[0]
    # A on top of V: one column rotation updates both
    M = np.empty((2 * n, n), dtype=np.complex128)
    M[:n] = H
    M[n:] = np.eye(n)
    A, V = M[:n], M[n:]
    norm = float(np.linalg.norm(A))
    if n == 0 or norm == 0.0:
        return np.real(np.diag(A)).copy(), V.copy(), 0, True
    thresh = tol * norm
    offdiag = ~np.eye(n, dtype=bool)
    skip = 1e-20 * norm
    for sweep in range(max_sweeps + 1):
        if np.linalg.norm(A[offdiag]) <= thresh:
            return np.real(np.diag(A)).copy(), V.copy(), sweep, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = complex(A[p, q])
                ah = abs(h)
                if ah <= skip:
                    continue
                a = A[p, p].real
                b = A[q, q].real
                theta = (b - a) / (2.0 * ah)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                e = (h / ah).conjugate()
                cp = M[:, p].copy()
                cq = M[:, q]
                M[:, p] = c * cp - (s * e) * cq
                M[:, q] = s * cp + (c * e) * cq
                A[p] = A[:, p].conj()
                A[q] = A[:, q].conj()
                A[p, p] = a - t * ah
                A[q, q] = b + t * ah
                A[p, q] = A[q, p] = 0.0
    return np.real(np.diag(A)).copy(), V.copy(), max_sweeps, False
