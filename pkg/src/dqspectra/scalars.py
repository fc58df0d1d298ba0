"""Dual numbers, quaternions and dual quaternions.

All three types are immutable.  Components are Python floats; NaN is
rejected on construction because the dual-number order must stay total.
"""

import enum
import math
from dataclasses import dataclass
from functools import total_ordering
from numbers import Real

from .errors import NegativeInput, NoDualRoot, NotAppreciable, ZeroQuaternion


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check(*values):
    for v in values:
        if math.isnan(v):
            raise ValueError("NaN component")


@total_ordering
@dataclass(frozen=True)
class DualNumber:
    """``st + inf*eps`` with ``eps**2 == 0``.

    Ordered lexicographically: standard part first, infinitesimal part on an
    exact tie.
    """

    st: float
    inf: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "st", float(self.st))
        object.__setattr__(self, "inf", float(self.inf))
        _check(self.st, self.inf)

    @staticmethod
    def _coerce(other):
        if isinstance(other, DualNumber):
            return other
        if isinstance(other, Real):
            return DualNumber(other, 0.0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DualNumber(self.st + o.st, self.inf + o.inf)

    __radd__ = __add__

    def __neg__(self):
        return DualNumber(-self.st, -self.inf)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DualNumber(self.st - o.st, self.inf - o.inf)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (Quaternion, DualQuaternion)):
            return NotImplemented
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DualNumber(self.st * o.st, self.st * o.inf + self.inf * o.st)

    __rmul__ = __mul__

    def inverse(self):
        if self.st == 0.0:
            raise NotAppreciable("dual number with zero standard part has no inverse")
        return DualNumber(1.0 / self.st, -self.inf / (self.st * self.st))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.st == o.st and self.inf == o.inf

    def __hash__(self):
        return hash((self.st, self.inf))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return dual_cmp(self, o) is Ordering.LT

    @property
    def is_appreciable(self):
        return self.st != 0.0

    def __repr__(self):
        return f"DualNumber({self.st!r}, {self.inf!r})"


@dataclass(frozen=True)
class Quaternion:
    """``w + x i + y j + z k``."""

    w: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in "wxyz":
            object.__setattr__(self, name, float(getattr(self, name)))
        _check(self.w, self.x, self.y, self.z)

    @classmethod
    def from_array(cls, a):
        return cls(a[0], a[1], a[2], a[3])

    def to_tuple(self):
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        if isinstance(other, Real):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if isinstance(other, Real):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self):
        return math.sqrt(self.norm2())

    def inverse(self):
        return quat_inv(self)

    def is_zero(self):
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0


def quat_mul(p, q):
    """Hamilton product ``p q``."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def quat_inv(q):
    n2 = q.norm2()
    if n2 == 0.0:
        raise ZeroQuaternion("zero quaternion has no inverse")
    return q.conj() / n2


def dual_cmp(p, q):
    """Total order on dual numbers, exact comparison of components."""
    if p.st < q.st:
        return Ordering.LT
    if p.st > q.st:
        return Ordering.GT
    if p.inf < q.inf:
        return Ordering.LT
    if p.inf > q.inf:
        return Ordering.GT
    return Ordering.EQ


def dual_sign(d, tol=0.0):
    """Sign of ``d`` in the total order, treating components within ``tol`` as zero.

    Returns -1, 0 or 1.  Only used where floating noise must be absorbed;
    :func:`dual_cmp` stays exact.
    """
    if abs(d.st) > tol:
        return 1 if d.st > 0 else -1
    if abs(d.inf) > tol:
        return 1 if d.inf > 0 else -1
    return 0


def dual_cmp_tol(p, q, tol):
    return Ordering(dual_sign(p - q, tol))


def dual_sqrt(d):
    """Nonnegative square root of a nonnegative dual number.

    ``sqrt(a + b eps) = sqrt(a) + b / (2 sqrt(a)) eps`` for ``a > 0``.  A zero
    standard part only admits the exact zero.
    """
    if d.st < 0.0 or (d.st == 0.0 and d.inf < 0.0):
        raise NegativeInput(f"{d!r} is negative in the dual order")
    if d.st == 0.0:
        if d.inf != 0.0:
            raise NoDualRoot(f"no dual number squares to {d!r}")
        return DualNumber(0.0, 0.0)
    s = math.sqrt(d.st)
    return DualNumber(s, d.inf / (2.0 * s))


@dataclass(frozen=True)
class DualQuaternion:
    """``st + inf*eps`` with quaternion parts."""

    st: Quaternion
    inf: Quaternion = Quaternion(0.0)

    def __post_init__(self):
        if isinstance(self.st, Real):
            object.__setattr__(self, "st", Quaternion(self.st))
        if isinstance(self.inf, Real):
            object.__setattr__(self, "inf", Quaternion(self.inf))

    @classmethod
    def from_dual(cls, d):
        return cls(Quaternion(d.st), Quaternion(d.inf))

    @classmethod
    def from_array(cls, a):
        """From 8 numbers: standard w,x,y,z then infinitesimal w,x,y,z."""
        return cls(Quaternion.from_array(a[:4]), Quaternion.from_array(a[4:8]))

    def to_tuple(self):
        return self.st.to_tuple() + self.inf.to_tuple()

    @staticmethod
    def _coerce(other):
        if isinstance(other, DualQuaternion):
            return other
        if isinstance(other, DualNumber):
            return DualQuaternion.from_dual(other)
        if isinstance(other, Quaternion):
            return DualQuaternion(other)
        if isinstance(other, Real):
            return DualQuaternion(Quaternion(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DualQuaternion(self.st + o.st, self.inf + o.inf)

    __radd__ = __add__

    def __neg__(self):
        return DualQuaternion(-self.st, -self.inf)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DualQuaternion(self.st - o.st, self.inf - o.inf)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return dq_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return dq_mul(o, self)

    def conj(self):
        return DualQuaternion(self.st.conj(), self.inf.conj())

    def inverse(self):
        return dq_inv(self)

    @property
    def is_appreciable(self):
        return not self.st.is_zero()

    def is_dual_number(self, tol=0.0):
        """True if both imaginary parts vanish (within ``tol``)."""
        return all(abs(v) <= tol for v in (self.st.x, self.st.y, self.st.z,
                                           self.inf.x, self.inf.y, self.inf.z))

    def to_dual(self):
        """Real parts as a dual number; imaginary parts are dropped."""
        return DualNumber(self.st.w, self.inf.w)

    def isclose(self, other, tol=1e-12):
        o = self._coerce(other)
        return all(abs(a - b) <= tol for a, b in zip(self.to_tuple(), o.to_tuple()))


def dq_mul(p, q):
    return DualQuaternion(p.st * q.st, p.st * q.inf + p.inf * q.st)


def dq_inv(q):
    if not q.is_appreciable:
        raise NotAppreciable("dual quaternion with zero standard part has no inverse")
    s = quat_inv(q.st)
    return DualQuaternion(s, -(s * q.inf * s))
