"""Moebius action on the quaternionic unit ball and its six-way classification.

A group element T = [[a, b], [c, d]] acts by g(z) = (a z + b)(c z + d)^-1,
preserving the open unit ball; the kernel of the action is {I, -I}.  The
conjugation class of the action is decided by the off-diagonal pattern
together with d0 = Re d and delta:

    b == conj(c) == 0:  simple elliptic if a0 == d0, else compound elliptic
    b == conj(c) != 0:  d0^2 < 1 / == 1 / > 1 gives simple
                        elliptic / parabolic / loxodromic
    b != conj(c) != 0:  delta < 0 / == 0 / > 0 gives compound
                        elliptic / parabolic / loxodromic
"""

from __future__ import annotations

from enum import Enum

from .errors import BallViolationError, MembershipError, PoleError
from .group import GroupElement
from .invariants import delta
from .quaternion import Quaternion

EPS_CLASS = 1e-10
POLE_TOL = 1e-14
BALL_SLACK = 1e-12

__all__ = ["MoebiusClass", "apply", "classify", "is_elliptic", "evidence",
           "EPS_CLASS"]


class MoebiusClass(Enum):
    SIMPLE_ELLIPTIC = "SimpleElliptic"
    COMPOUND_ELLIPTIC = "CompoundElliptic"
    SIMPLE_PARABOLIC = "SimpleParabolic"
    COMPOUND_PARABOLIC = "CompoundParabolic"
    SIMPLE_LOXODROMIC = "SimpleLoxodromic"
    COMPOUND_LOXODROMIC = "CompoundLoxodromic"

    @property
    def coarse(self) -> str:
        name = self.value
        for kind in ("Elliptic", "Parabolic", "Loxodromic"):
            if name.endswith(kind):
                return kind.lower()
        raise AssertionError(name)


def apply(t: GroupElement, z: Quaternion) -> Quaternion:
    """Evaluate the ball action (a z + b)(c z + d)^-1 at z, |z| < 1."""
    if z.norm() >= 1.0:
        raise ValueError("the Moebius action is defined on the open unit ball")
    m = t.m
    denominator = m.c * z + m.d
    if denominator.norm() <= POLE_TOL:
        raise PoleError("denominator c z + d vanished")
    image = (m.a * z + m.b) * denominator.inverse()
    if image.norm() >= 1.0 + BALL_SLACK:
        raise BallViolationError(
            f"image modulus {image.norm():.17g} escaped the unit ball")
    return image


def classify(t: GroupElement, eps_class: float = EPS_CLASS) -> MoebiusClass:
    m = t.m
    eps = eps_class * (1.0 + m.frobenius())
    b_zero = m.b.norm() <= eps
    c_zero = m.c.norm() <= eps
    if b_zero and c_zero:
        if abs(m.a.w - m.d.w) <= eps_class:
            return MoebiusClass.SIMPLE_ELLIPTIC
        return MoebiusClass.COMPOUND_ELLIPTIC
    if b_zero or c_zero:
        raise MembershipError(
            "exactly one off-diagonal entry is zero; |b| == |c| fails")
    if (m.b - m.c.conjugate()).norm() <= eps:
        gap = m.d.w * m.d.w - 1.0
        if abs(gap) <= eps_class:
            return MoebiusClass.SIMPLE_PARABOLIC
        if gap < 0.0:
            return MoebiusClass.SIMPLE_ELLIPTIC
        return MoebiusClass.SIMPLE_LOXODROMIC
    dlt = delta(m)
    if abs(dlt) <= eps_class:
        return MoebiusClass.COMPOUND_PARABOLIC
    if dlt < 0.0:
        return MoebiusClass.COMPOUND_ELLIPTIC
    return MoebiusClass.COMPOUND_LOXODROMIC


def is_elliptic(t: GroupElement, eps_class: float = EPS_CLASS) -> bool:
    return classify(t, eps_class) in (MoebiusClass.SIMPLE_ELLIPTIC,
                                      MoebiusClass.COMPOUND_ELLIPTIC)


def evidence(t: GroupElement) -> dict:
    """The quantities the classification actually read."""
    m = t.m
    return {
        "a0": m.a.w,
        "d0": m.d.w,
        "b_minus_conj_c_norm": (m.b - m.c.conjugate()).norm(),
        "b_norm": m.b.norm(),
        "c_norm": m.c.norm(),
        "delta": delta(m),
    }
