import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dqspectra.errors import DimensionMismatch, NotPartiallyUnitary
from dqspectra.generate import random_dq
from dqspectra.linalg import (
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
from dqspectra.scalars import DualNumber, DualQuaternion, Quaternion

ONE = Quaternion(1, 0, 0, 0)
ZERO = Quaternion(0, 0, 0, 0)
I, J, K = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)
EPS = DualQuaternion(ZERO, ONE)

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 5)


def dq(q_st=ZERO, q_inf=ZERO):
    return DualQuaternion(q_st, q_inf)


def rel(X, Y):
    st, inf = dual_fro_norm(X - Y)
    return max(st, inf)


def test_matmul_identity_and_eps():
    A = random_dq(np.random.default_rng(1), 3, 4)
    assert A @ DQMatrix.identity(4) == A
    eA = DQMatrix(np.zeros_like(A.st), A.st)
    eB = DQMatrix(np.zeros((4, 2, 4)), np.ones((4, 2, 4)))
    assert eA @ eB == DQMatrix.zeros(3, 2)


def test_matmul_noncommutative_entries():
    A = DQMatrix.from_entries([[J]])
    B = DQMatrix.from_entries([[K]])
    assert (A @ B)[0, 0] == dq(I)
    assert (B @ A)[0, 0] == dq(-I)


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        matmul(DQMatrix.zeros(2, 3), DQMatrix.zeros(2, 3))


@given(seeds, dims, dims, dims, dims)
def test_matmul_associative(seed, m, k, l, n):
    rng = np.random.default_rng(seed)
    A, B, C = random_dq(rng, m, k), random_dq(rng, k, l), random_dq(rng, l, n)
    lhs, rhs = (A @ B) @ C, A @ (B @ C)
    scale = 1 + max(dual_fro_norm(lhs))
    assert rel(lhs, rhs) <= 1e-10 * scale


def test_conj_transpose_examples():
    assert conj_transpose(DQMatrix.identity(3)) == DQMatrix.identity(3)
    A = DQMatrix.from_entries([[dq(I, J)]])
    assert A.H[0, 0] == dq(-I, -J)


@given(seeds, dims, dims, dims)
def test_conj_transpose_reverses_products(seed, m, k, n):
    rng = np.random.default_rng(seed)
    A, B = random_dq(rng, m, k), random_dq(rng, k, n)
    assert rel((A @ B).H, B.H @ A.H) <= 1e-12 * (1 + max(dual_fro_norm(A @ B)))
    assert A.H.H == A


def test_inner_examples():
    e1 = dq_vector([dq(ONE), dq()])
    e2 = dq_vector([dq(), dq(ONE)])
    assert inner(e1, e2) == dq()
    x = dq_vector([dq(ONE), EPS])
    assert inner(x, x) == dq(ONE)
    assert inner(dq_vector([dq(I)]), dq_vector([dq(J)])) == dq(-K)
    with pytest.raises(DimensionMismatch):
        inner(e1, dq_vector([dq(ONE)]))


@given(seeds, dims)
def test_inner_self_is_nonnegative_dual_number(seed, n):
    x = random_dq(np.random.default_rng(seed), n, 1)
    v = inner(x, x)
    assert v.is_dual_number(1e-12)
    d = v.to_dual()
    assert d.st >= 0
    assert d > DualNumber(0, 0)  # appreciable almost surely


@given(seeds, dims)
def test_inner_conjugate_linear(seed, n):
    rng = np.random.default_rng(seed)
    x, y = random_dq(rng, n, 1), random_dq(rng, n, 1)
    q = DQMatrix(rng.standard_normal((1, 1, 4)), rng.standard_normal((1, 1, 4)))
    lhs = inner(x @ q, y)
    rhs = (q.H @ DQMatrix.from_entries([[inner(x, y)]]))[0, 0]
    assert lhs.isclose(rhs, 1e-10)


def test_dual_fro_norm_examples():
    assert dual_fro_norm(DQMatrix.identity(2)) == pytest.approx((np.sqrt(2), 0))
    I2e = DQMatrix(np.zeros((2, 2, 4)), DQMatrix.identity(2).st)
    assert dual_fro_norm(I2e) == pytest.approx((0, np.sqrt(2)))
    assert dual_fro_norm(DQMatrix.from_entries([[Quaternion(1, 1, 0, 0)]])) == pytest.approx((np.sqrt(2), 0))


def test_is_unitary_examples():
    assert is_unitary(DQMatrix.identity(3), 1e-12)
    assert not is_unitary(DQMatrix.diag([DualNumber(1, 1)]), 1e-12)
    t = 0.7
    R = DQMatrix.from_real([[np.cos(t), np.sin(t)], [-np.sin(t), np.cos(t)]])
    assert is_unitary(R, 1e-12)


@given(seeds, dims)
def test_hermitian_predicate(seed, n):
    R = random_dq(np.random.default_rng(seed), n, n)
    H = (R + R.H) * 0.5
    assert is_hermitian(H, 1e-14)
    st_, inf_ = dual_fro_norm(R - R.H)
    assert is_hermitian(R, 1e-14) == (st_ <= 1e-14 and inf_ <= 1e-14)


def test_mgs_complete_examples():
    e1 = DQMatrix.identity(3)[:, 0:1]
    V = mgs_complete(e1)
    assert is_unitary(V, 1e-14)
    assert V == DQMatrix.identity(3)

    v = DQMatrix.from_real(np.array([[1.0], [1.0]]) / np.sqrt(2))
    V = mgs_complete(v)
    assert is_unitary(V, 1e-12)

    bad = DQMatrix(np.zeros((2, 1, 4)), DQMatrix.identity(2)[:, 0:1].st)
    with pytest.raises(NotPartiallyUnitary):
        mgs_complete(bad)


@given(seeds, st.integers(1, 6), st.data())
def test_mgs_complete_unitary_and_prefix_preserved(seed, m, data):
    from dqspectra.generate import random_unitary
    r = data.draw(st.integers(0, m))
    Q = random_unitary(np.random.default_rng(seed), m)
    V1 = Q[:, :r]
    V = mgs_complete(V1)
    uni = dual_fro_norm(V.H @ V - DQMatrix.identity(m))
    assert max(uni) <= 1e-10 * m
    assert np.array_equal(V.st[:, :r], V1.st)
    assert np.array_equal(V.inf[:, :r], V1.inf)


def test_matrix_immutable():
    A = DQMatrix.identity(2)
    with pytest.raises(ValueError):
        A.st[0, 0, 0] = 5.0


def test_nan_rejected():
    with pytest.raises(ValueError):
        DQMatrix(np.full((1, 1, 4), np.nan))
