"""Dense dual quaternion matrices.

A :class:`DQMatrix` keeps its standard and infinitesimal parts as two
``(m, n, 4)`` float arrays.  Products are graded: the standard part of
``A @ B`` is ``A.st @ B.st`` and the infinitesimal part is
``A.st @ B.inf + A.inf @ B.st``.  Vectors are ``(n, 1)`` matrices.
"""

import numpy as np

from . import qarray as qa
from .errors import CompletionFailure, DimensionMismatch, NotPartiallyUnitary
from .scalars import DualNumber, DualQuaternion, Quaternion, dual_sqrt


def _frozen(a):
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


class DQMatrix:
    """Immutable ``m x n`` dual quaternion matrix ``st + inf*eps``."""

    __slots__ = ("st", "inf")

    def __init__(self, st, inf=None):
        st = np.asarray(st, dtype=float)
        if st.ndim != 3 or st.shape[2] != 4:
            raise ValueError(f"expected an (m, n, 4) array, got shape {st.shape}")
        if inf is None:
            inf = np.zeros_like(st)
        inf = np.asarray(inf, dtype=float)
        if inf.shape != st.shape:
            raise DimensionMismatch(f"standard part {st.shape[:2]} vs infinitesimal part {inf.shape[:2]}")
        if np.isnan(st).any() or np.isnan(inf).any():
            raise ValueError("NaN entry")
        self.st = _frozen(st)
        self.inf = _frozen(inf)

    # construction

    @classmethod
    def zeros(cls, m, n):
        return cls(np.zeros((m, n, 4)))

    @classmethod
    def identity(cls, n):
        return cls(qa.qeye(n))

    @classmethod
    def from_real(cls, st, inf=None):
        """From real (m, n) arrays placed in the scalar quaternion component."""
        st = np.asarray(st, dtype=float)
        S = np.zeros(st.shape + (4,))
        S[..., 0] = st
        I = np.zeros_like(S)
        if inf is not None:
            I[..., 0] = inf
        return cls(S, I)

    @classmethod
    def from_entries(cls, rows):
        """From a nested list of :class:`DualQuaternion` (or dual numbers / reals)."""
        m = len(rows)
        n = len(rows[0]) if m else 0
        st = np.zeros((m, n, 4))
        inf = np.zeros((m, n, 4))
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch("ragged rows")
            for j, e in enumerate(row):
                e = DualQuaternion._coerce(e)
                st[i, j] = e.st.to_tuple()
                inf[i, j] = e.inf.to_tuple()
        return cls(st, inf)

    @classmethod
    def diag(cls, values):
        """Diagonal matrix from a sequence of dual numbers."""
        values = [DualNumber._coerce(v) for v in values]
        n = len(values)
        st = np.zeros((n, n, 4))
        inf = np.zeros((n, n, 4))
        for i, v in enumerate(values):
            st[i, i, 0] = v.st
            inf[i, i, 0] = v.inf
        return cls(st, inf)

    # shape and access

    @property
    def shape(self):
        return self.st.shape[:2]

    @property
    def rows(self):
        return self.st.shape[0]

    @property
    def cols(self):
        return self.st.shape[1]

    def __getitem__(self, key):
        if isinstance(key, tuple) and len(key) == 2 and all(isinstance(k, (int, np.integer)) for k in key):
            return DualQuaternion(Quaternion.from_array(self.st[key]), Quaternion.from_array(self.inf[key]))
        if not isinstance(key, tuple):
            key = (key, slice(None))
        key = tuple(slice(k, k + 1) if isinstance(k, (int, np.integer)) else k for k in key)
        return DQMatrix(self.st[key], self.inf[key])

    def column(self, j):
        return self[:, j:j + 1]

    def entries(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    # algebra

    @property
    def H(self):
        return conj_transpose(self)

    def __matmul__(self, other):
        if not isinstance(other, DQMatrix):
            return NotImplemented
        return matmul(self, other)

    def __add__(self, other):
        if not isinstance(other, DQMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return DQMatrix(self.st + other.st, self.inf + other.inf)

    def __sub__(self, other):
        if not isinstance(other, DQMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return DQMatrix(self.st - other.st, self.inf - other.inf)

    def __neg__(self):
        return DQMatrix(-self.st, -self.inf)

    def __mul__(self, other):
        if isinstance(other, DualNumber):
            return DQMatrix(self.st * other.st, self.st * other.inf + self.inf * other.st)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return DQMatrix(self.st * other, self.inf * other)
        return NotImplemented

    __rmul__ = __mul__

    def scale_columns(self, d_st, d_inf=None):
        """``A @ diag(d)`` for dual numbers ``d = d_st + d_inf*eps`` (real arrays)."""
        d_st = np.asarray(d_st, dtype=float)
        st = qa.qreal_scale_cols(self.st, d_st)
        inf = qa.qreal_scale_cols(self.inf, d_st)
        if d_inf is not None:
            inf = inf + qa.qreal_scale_cols(self.st, d_inf)
        return DQMatrix(st, inf)

    def right_mul_columns(self, g):
        """Right-multiply column ``j`` by the quaternion ``g[j]`` ((n, 4) array)."""
        return DQMatrix(qa.qright_mul_cols(self.st, g), qa.qright_mul_cols(self.inf, g))

    def __eq__(self, other):
        if not isinstance(other, DQMatrix):
            return NotImplemented
        return np.array_equal(self.st, other.st) and np.array_equal(self.inf, other.inf)

    __hash__ = None

    def __repr__(self):
        return f"DQMatrix(shape={self.shape})"


def dq_vector(entries):
    """Column vector from a sequence of dual quaternions."""
    return DQMatrix.from_entries([[e] for e in entries])


def hstack(blocks):
    return DQMatrix(np.concatenate([b.st for b in blocks], axis=1),
                    np.concatenate([b.inf for b in blocks], axis=1))


def block_diag(blocks):
    return DQMatrix(qa.qblock_diag([b.st for b in blocks]), qa.qblock_diag([b.inf for b in blocks]))


def matmul(A, B):
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    st = qa.qmatmul(A.st, B.st)
    inf = qa.qmatmul(A.st, B.inf) + qa.qmatmul(A.inf, B.st)
    return DQMatrix(st, inf)


def conj_transpose(A):
    return DQMatrix(qa.qherm(A.st), qa.qherm(A.inf))


def inner(x, y):
    """``x* y`` for column vectors; conjugate-linear in ``x``."""
    if x.shape != y.shape or x.cols != 1:
        raise DimensionMismatch(f"inner product of {x.shape} and {y.shape}")
    return (x.H @ y)[0, 0]


def dual_fro_norm(A):
    """Frobenius norms of the standard and infinitesimal parts."""
    return qa.qfro(A.st), qa.qfro(A.inf)


def is_hermitian(A, tol=0.0):
    if A.rows != A.cols:
        return False
    st, inf = dual_fro_norm(A - A.H)
    return st <= tol and inf <= tol


def is_unitary(A, tol):
    if A.rows != A.cols:
        return False
    st, inf = dual_fro_norm(A.H @ A - DQMatrix.identity(A.cols))
    return st <= tol and inf <= tol


def is_partially_unitary(A, tol):
    st, inf = dual_fro_norm(A.H @ A - DQMatrix.identity(A.cols))
    return st <= tol and inf <= tol


def _project_out(R, v):
    """``R - v (v* R)`` for a unit column ``v``."""
    return R - v @ (v.H @ R)


def normalize(x):
    """Scale an appreciable column by the inverse of its dual norm."""
    n2 = inner(x, x)
    norm = dual_sqrt(DualNumber(max(n2.st.w, 0.0), n2.inf.w))
    return x * norm.inverse()


def mgs_complete(V1, tol=1e-8):
    """Extend orthonormal columns ``V1`` (m x r) to an m x m unitary matrix.

    Candidates are the standard basis vectors.  Every candidate is kept
    orthogonalized (modified Gram-Schmidt, dual arithmetic) against the basis
    built so far; at each step the candidate with the largest standard-part
    residual is taken (lowest index on ties), orthogonalized once more and
    normalized by its dual norm.  A candidate whose standard residual is
    ``<= tol`` is not appreciable and cannot be normalized.
    """
    m, r = V1.shape
    if r > m:
        raise NotPartiallyUnitary(f"{r} columns cannot be orthonormal in dimension {m}")
    if r and not is_partially_unitary(V1, tol):
        raise NotPartiallyUnitary("columns are not unit and mutually orthogonal")
    basis = [V1.column(j) for j in range(r)]
    R = DQMatrix.identity(m)
    for _ in range(2):
        for v in basis:
            R = _project_out(R, v)
    remaining = list(range(m))
    while len(basis) < m:
        norms = np.sqrt(np.sum(np.square(R.st[:, remaining]), axis=(0, 2)))
        k = int(np.argmax(norms))
        if norms[k] <= tol:
            raise CompletionFailure(f"only {len(basis)} of {m} columns could be built")
        j = remaining.pop(k)
        x = R.column(j)
        for v in basis:
            x = _project_out(x, v)
        x = normalize(x)
        basis.append(x)
        if remaining:
            rest = R[:, remaining]
            rest = _project_out(rest, x)
            st = np.array(R.st)
            inf = np.array(R.inf)
            st[:, remaining] = rest.st
            inf[:, remaining] = rest.inf
            R = DQMatrix(st, inf)
    if r == m:
        return V1
    return hstack([V1] + basis[r:])
