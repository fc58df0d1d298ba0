"""Quaternion arrays as real ndarrays with a trailing axis of length 4.

Matrix products go through the complex pair ``A = A1 + A2 j`` with
``A1 = A0 + A1' i`` and ``A2 = A2' + A3' i``; ``j z = conj(z) j`` gives

    (A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j
"""

import numpy as np


def qmul(a, b):
    """Elementwise Hamilton product of broadcastable (..., 4) arrays."""
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def qconj(a):
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qabs2(a):
    return np.sum(np.square(a), axis=-1)


def to_complex(A):
    """The complex pair ``(A1, A2)`` as read-only views of ``A``."""
    Z = np.ascontiguousarray(A, dtype=float).view(np.complex128)
    Z1, Z2 = Z[..., 0], Z[..., 1]
    Z1.flags.writeable = Z2.flags.writeable = False
    return Z1, Z2


def from_complex(Z1, Z2):
    out = np.empty(np.shape(Z1) + (2,), dtype=np.complex128)
    out[..., 0] = Z1
    out[..., 1] = Z2
    return out.view(float)


def qmatmul(A, B):
    """Product of quaternion matrices of shapes (m, k, 4) and (k, n, 4)."""
    A1, A2 = to_complex(A)
    B1, B2 = to_complex(B)
    return from_complex(A1 @ B1 - A2 @ B2.conj(), A1 @ B2 + A2 @ B1.conj())


def qherm(A):
    """Conjugate transpose of an (m, n, 4) array."""
    return qconj(np.swapaxes(A, 0, 1))


def qeye(n):
    out = np.zeros((n, n, 4))
    out[np.arange(n), np.arange(n), 0] = 1.0
    return out


def qfro(A):
    return float(np.sqrt(np.sum(np.square(A))))


def qreal_scale_cols(A, d):
    """``A @ diag(d)`` for a real vector ``d``."""
    return A * np.asarray(d, dtype=float)[None, :, None]


def qright_mul_cols(A, g):
    """Right-multiply column ``j`` of ``A`` by the quaternion ``g[j]``."""
    return qmul(A, np.asarray(g)[None, :, :])


def qblock_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    out = np.zeros((n, m, 4))
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def phase_fix(X):
    """Right-multiply each column by the unit quaternion that makes its
    largest-magnitude entry real and positive (lowest index on ties).

    Returns the fixed matrix and the (n, 4) array of unit multipliers.
    """
    X = np.asarray(X, dtype=float)
    mags = qabs2(X)
    idx = np.argmax(mags, axis=0)
    cols = np.arange(X.shape[1])
    pivot = X[idx, cols]
    norms = np.sqrt(mags[idx, cols])
    g = np.zeros((X.shape[1], 4))
    g[:, 0] = 1.0
    ok = norms > 0
    g[ok] = qconj(pivot[ok]) / norms[ok, None]
    fixed = qright_mul_cols(X, g)
    fixed[idx[ok], cols[ok], 1:] = 0.0
    fixed[idx[ok], cols[ok], 0] = norms[ok]
    return fixed, g
