"""Similarity invariants of group elements.

Two quantities separate the conjugacy behaviour of T = [[a, b], [c, d]]:
the real trace Tr(T) = 2(Re a + Re d) and

    delta(T) = |b - conj(c)|^2 - (Re a - Re d)^2.

delta also has a closed form in the traces of powers,

    delta(T) = Tr(T)^2 / 4 - Tr(T^2) / 2 - 2,

which makes it conjugation invariant, and an older expression through the
entries (delta_legacy) that is only defined when b != conj(c) != 0.  The
identity checks exported at the bottom exercise all of these plus the
power rules for delta(T^2), delta(T^3), delta(T^6).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import NotApplicableError
from .group import GroupElement, conjugate
from .mat2h import Mat2H

__all__ = [
    "delta",
    "delta_legacy",
    "delta_via_traces",
    "mat_pow",
    "InvariantReport",
    "report",
    "IdentityCheck",
    "IDENTITY_CHECKS",
    "SINGLE_ELEMENT_CHECKS",
]


def delta(m: Mat2H) -> float:
    return (m.b - m.c.conjugate()).norm_sq() - (m.a.w - m.d.w) ** 2


def delta_legacy(t: GroupElement) -> float:
    """Entry formula |Im(conj(c)^-1 b conj(d) + d)|^2 - |conj(c)^-1 b - 1|^2.

    Defined only off the b == conj(c) locus; agrees with delta there.
    """
    m = t.m
    scale = 1.0 + m.frobenius()
    if m.c.norm() <= 1e-10 * scale:
        raise NotApplicableError("legacy delta needs c != 0")
    if (m.b - m.c.conjugate()).norm() <= 1e-10 * scale:
        raise NotApplicableError("legacy delta needs b != conj(c)")
    lead = m.c.conjugate().inverse() * m.b
    inner = lead * m.d.conjugate() + m.d
    return inner.imag().norm_sq() - (lead - 1.0).norm_sq()


def delta_via_traces(t: GroupElement) -> float:
    tr1 = t.m.tr()
    tr2 = (t.m @ t.m).tr()
    return 0.25 * tr1 * tr1 - 0.5 * tr2 - 2.0


def mat_pow(m: Mat2H, n: int) -> Mat2H:
    if n < 0:
        raise ValueError("only nonnegative powers are supported")
    out = Mat2H.identity()
    for _ in range(n):
        out = out @ m
    return out


@dataclass(frozen=True, slots=True)
class InvariantReport:
    tr1: float
    tr2: float
    tr3: float
    tr4: float
    tr6: float
    delta: float
    delta_legacy: Optional[float]

    def to_json(self) -> dict:
        return {
            "tr1": self.tr1, "tr2": self.tr2, "tr3": self.tr3,
            "tr4": self.tr4, "tr6": self.tr6, "delta": self.delta,
            "delta_legacy": self.delta_legacy,
        }


def report(t: GroupElement) -> InvariantReport:
    m = t.m
    m2 = m @ m
    m3 = m2 @ m
    m4 = m3 @ m
    m6 = m4 @ m2
    try:
        legacy = delta_legacy(t)
    except NotApplicableError:
        legacy = None
    return InvariantReport(m.tr(), m2.tr(), m3.tr(), m4.tr(), m6.tr(),
                           delta(m), legacy)


# -- identity checks -------------------------------------------------------
#
# Each check maps (T, G) to a residual already divided by its natural scale,
# so "passes" simply means residual <= tol.  G is a second group element and
# is only consumed by the similarity-invariance checks.


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    name: str
    tol: float
    fn: Callable[[GroupElement, GroupElement], float]


def _check_delta_via_traces(t: GroupElement, _g: GroupElement) -> float:
    d = delta(t.m)
    return abs(d - delta_via_traces(t)) / (1.0 + abs(d))


def _relative_gap(lhs: float, rhs: float) -> float:
    # Relative agreement of two computations of the same quantity; the
    # denominator must follow the quantity itself, not an a-priori trace
    # bound, or elements with a cancelling trace report spurious misses.
    return abs(lhs - rhs) / (1.0 + abs(lhs) + abs(rhs))


def _check_delta_square(t: GroupElement, _g: GroupElement) -> float:
    tr1 = t.m.tr()
    lhs = delta(mat_pow(t.m, 2))
    return _relative_gap(lhs, tr1 * tr1 * delta(t.m))


def _check_delta_cube(t: GroupElement, _g: GroupElement) -> float:
    tr1 = t.m.tr()
    tr2 = mat_pow(t.m, 2).tr()
    factor = 0.5 * tr1 * tr1 + 0.5 * tr2 - 1.0
    lhs = delta(mat_pow(t.m, 3))
    return _relative_gap(lhs, factor * factor * delta(t.m))


def _sixth_power_values(t: GroupElement):
    m = t.m
    m2 = m @ m
    m3 = m2 @ m
    m4 = m3 @ m
    m6 = m4 @ m2
    tr1, tr2, tr3, tr4 = m.tr(), m2.tr(), m3.tr(), m4.tr()
    d = delta(m)
    first = (0.5 * tr2 * tr2 + 0.5 * tr4 - 1.0) ** 2 * tr1 * tr1 * d
    second = (0.5 * tr1 * tr1 + 0.5 * tr2 - 1.0) ** 2 * tr3 * tr3 * d
    return delta(m6), first, second


def _check_delta_sixth_first(t: GroupElement, _g: GroupElement) -> float:
    lhs, first, _second = _sixth_power_values(t)
    return _relative_gap(lhs, first)


def _check_delta_sixth_second(t: GroupElement, _g: GroupElement) -> float:
    lhs, _first, second = _sixth_power_values(t)
    return _relative_gap(lhs, second)


def _check_delta_sixth_mutual(t: GroupElement, _g: GroupElement) -> float:
    _lhs, first, second = _sixth_power_values(t)
    return _relative_gap(first, second)


def _check_delta_legacy(t: GroupElement, _g: GroupElement) -> float:
    try:
        legacy = delta_legacy(t)
    except NotApplicableError:
        return 0.0
    return abs(delta(t.m) - legacy)


def _check_delta_similarity(t: GroupElement, g: GroupElement) -> float:
    return abs(delta(conjugate(t, g).m) - delta(t.m))


def _check_trace_similarity(t: GroupElement, g: GroupElement) -> float:
    return abs(conjugate(t, g).m.tr() - t.m.tr())


SINGLE_ELEMENT_CHECKS = [
    IdentityCheck("delta_via_traces", 1e-8, _check_delta_via_traces),
    IdentityCheck("delta_square", 1e-7, _check_delta_square),
    IdentityCheck("delta_cube", 1e-6, _check_delta_cube),
    IdentityCheck("delta_sixth_first", 1e-5, _check_delta_sixth_first),
    IdentityCheck("delta_sixth_second", 1e-5, _check_delta_sixth_second),
    IdentityCheck("delta_sixth_mutual", 1e-5, _check_delta_sixth_mutual),
    IdentityCheck("delta_legacy", 1e-9, _check_delta_legacy),
]

IDENTITY_CHECKS = SINGLE_ELEMENT_CHECKS + [
    IdentityCheck("delta_similarity", 1e-7, _check_delta_similarity),
    IdentityCheck("trace_similarity", 1e-7, _check_trace_similarity),
]
