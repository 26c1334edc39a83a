"""Floating-point quaternion scalars.

A quaternion is w + x*i + y*j + z*k with real components and the Hamilton
product (i*i == j*j == k*k == i*j*k == -1).  Values are immutable; every
operation returns a fresh instance.  Real numbers coerce on the side they
appear on, which is safe because reals are central.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotSimilarError

SIMILARITY_TOL = 1e-9

__all__ = [
    "Quaternion",
    "ZERO",
    "ONE",
    "QI",
    "QJ",
    "QK",
    "is_similar",
    "standard_rep",
    "solve_similarity",
    "SIMILARITY_TOL",
]


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def real(cls, value: float) -> "Quaternion":
        return cls(float(value), 0.0, 0.0, 0.0)

    @classmethod
    def from_list(cls, parts) -> "Quaternion":
        w, x, y, z = (float(p) for p in parts)
        return cls(w, x, y, z)

    def as_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = other.w, other.x, other.y, other.z
        return Quaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        # Division is only offered by reals; q / p is ambiguous, use
        # q * p.inverse() or p.inverse() * q explicitly.
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        return NotImplemented

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    # -- involution and size ---------------------------------------------

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    __abs__ = norm

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero quaternion")
        return self * (1.0 / n)

    # -- real/imaginary split ---------------------------------------------

    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def imag_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def dot(self, other: "Quaternion") -> float:
        return (self.w * other.w + self.x * other.x
                + self.y * other.y + self.z * other.z)


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value), 0.0, 0.0, 0.0)
    return NotImplemented


ZERO = Quaternion()
ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0)
QJ = Quaternion(0.0, 0.0, 1.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


def is_similar(p: Quaternion, q: Quaternion, tol: float = SIMILARITY_TOL) -> bool:
    """Whether p and q share a similarity class (same real part and modulus)."""
    return abs(p.w - q.w) <= tol and abs(p.norm() - q.norm()) <= tol


def standard_rep(q: Quaternion) -> Quaternion:
    """Canonical class representative Re(q) + i*|Im(q)|."""
    return Quaternion(q.w, q.imag_norm(), 0.0, 0.0)


def solve_similarity(s: Quaternion, u: Quaternion,
                     tol: float = SIMILARITY_TOL) -> Quaternion:
    """Unit x with s*x == x*u, given that s and u are similar.

    With I = Im(s)/|Im(s)| and J = Im(u)/|Im(u)| the quaternion 1 - I*J
    intertwines the two imaginary directions; when it degenerates (J == -I)
    any unit imaginary orthogonal to I works, and the first usable candidate
    from the fixed order (i, j, k) keeps the choice deterministic.
    """
    if not is_similar(s, u, tol):
        raise NotSimilarError(f"{s} and {u} are not similar within {tol}")
    beta = s.imag_norm()
    if beta <= tol:
        return ONE
    beta_u = u.imag_norm()
    if beta_u == 0.0:
        raise NotSimilarError(f"{u} is real but {s} is not")
    direction_s = s.imag() * (1.0 / beta)
    direction_u = u.imag() * (1.0 / beta_u)
    x = ONE - direction_s * direction_u
    n = x.norm()
    if n > 1e-8:
        return x * (1.0 / n)
    for candidate in (QI, QJ, QK):
        overlap = candidate.dot(direction_s)
        residue = candidate - direction_s * overlap
        n = residue.norm()
        if n > 0.5:
            return residue * (1.0 / n)
    raise NotSimilarError("no orthogonal direction found")  # unreachable
