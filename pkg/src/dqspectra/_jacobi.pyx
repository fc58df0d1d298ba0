# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi for complex Hermitian matrices, compiled core.

Same rotation sequence as ``_jacobi_py.jacobi_eigh``.
"""

import numpy as np

from libc.math cimport sqrt, fabs, hypot


def jacobi_eigh(H, double tol, int max_sweeps):
    cdef double complex[:, ::1] A = np.array(H, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    V_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] V = V_arr
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double norm = 0.0, off2, thresh, skip
    cdef double a, b, ah, theta, t, c, s
    cdef double complex h, e, se, ce, x, y

    for p in range(n):
        for q in range(n):
            norm += A[p, q].real * A[p, q].real + A[p, q].imag * A[p, q].imag
    norm = sqrt(norm)
    w = np.empty(n)
    if n == 0 or norm == 0.0:
        for p in range(n):
            w[p] = A[p, p].real
        return w, V_arr, 0, True
    thresh = tol * norm
    skip = 1e-20 * norm

    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off2 += A[p, q].real * A[p, q].real + A[p, q].imag * A[p, q].imag
        if sqrt(off2) <= thresh:
            for p in range(n):
                w[p] = A[p, p].real
            return w, V_arr, sweep, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = A[p, q]
                ah = hypot(h.real, h.imag)
                if ah <= skip:
                    continue
                a = A[p, p].real
                b = A[q, q].real
                theta = (b - a) / (2.0 * ah)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                e = h / ah
                se = s * e.conjugate()
                ce = c * e.conjugate()
                for k in range(n):
                    x = A[k, p]
                    y = A[k, q]
                    A[k, p] = c * x - se * y
                    A[k, q] = s * x + ce * y
                for k in range(n):
                    A[p, k] = A[k, p].conjugate()
                    A[q, k] = A[k, q].conjugate()
                A[p, p] = a - t * ah
                A[q, q] = b + t * ah
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    x = V[k, p]
                    y = V[k, q]
                    V[k, p] = c * x - se * y
                    V[k, q] = s * x + ce * y
    for p in range(n):
        w[p] = A[p, p].real
    return w, V_arr, max_sweeps, False
