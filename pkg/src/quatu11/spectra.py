"""Right, S-, and left spectra of 2x2 quaternionic matrices.

Right eigenvalues come in similarity classes, each a 2-sphere determined by
a real part and a modulus; for group elements at most two such spheres
occur and they follow from the trace and delta alone.  The S-spectrum
coincides with the right spectrum.  Left eigenvalues are not similarity
invariant and are computed entrywise from the quadratic q^2 + B q + C == 0
with B = b^-1 (a - d), C = -b^-1 c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import NegativeRadicandError, NoRootFoundError
from .group import GroupElement
from .invariants import delta
from .mat2h import Mat2H
from .quaternion import Quaternion

EPS_CLASS = 1e-10
SPECTRUM_TOL = 1e-7
COLLAPSE_TOL = 1e-10

__all__ = [
    "SpectralSphere",
    "RightSpectrum",
    "SphereFamily",
    "LeftSpectrumDescription",
    "right_spectrum",
    "right_spectrum_casewise",
    "s_spectrum",
    "verify_s_point",
    "right_spectrum_oracle",
    "left_eigenvalues",
    "EPS_CLASS",
    "SPECTRUM_TOL",
]


def _unit_imaginary(rng) -> Quaternion:
    v = rng.standard_normal(3)
    n = float(np.linalg.norm(v))
    while n < 1e-6:
        v = rng.standard_normal(3)
        n = float(np.linalg.norm(v))
    return Quaternion(0.0, *(float(p) / n for p in v))


@dataclass(frozen=True, slots=True)
class SpectralSphere:
    """Similarity class {q : Re q == re, |q| == modulus}."""

    re: float
    modulus: float

    def is_point(self, tol: float = 1e-12) -> bool:
        return abs(self.modulus - abs(self.re)) <= tol

    def representative(self) -> Quaternion:
        imag = math.sqrt(max(self.modulus ** 2 - self.re ** 2, 0.0))
        return Quaternion(self.re, imag, 0.0, 0.0)

    def sample(self, count: int, seed=0) -> list[Quaternion]:
        rng = np.random.default_rng(seed)
        imag = math.sqrt(max(self.modulus ** 2 - self.re ** 2, 0.0))
        return [Quaternion(self.re, 0, 0, 0) + _unit_imaginary(rng) * imag
                for _ in range(count)]

    def to_json(self) -> dict:
        return {"re": self.re, "modulus": self.modulus}


@dataclass(frozen=True, slots=True)
class RightSpectrum:
    spheres: tuple[SpectralSphere, ...]

    @classmethod
    def from_pairs(cls, pairs, collapse_tol: float = COLLAPSE_TOL) -> "RightSpectrum":
        ordered = sorted(pairs, key=lambda p: (-p[0], -p[1]))
        merged: list[list] = []
        for re, mod in ordered:
            if merged and abs(re - merged[-1][0] / merged[-1][2]) <= collapse_tol \
                    and abs(mod - merged[-1][1] / merged[-1][2]) <= collapse_tol:
                merged[-1][0] += re
                merged[-1][1] += mod
                merged[-1][2] += 1
            else:
                merged.append([re, mod, 1])
        spheres = tuple(SpectralSphere(s / n, m / n) for s, m, n in merged)
        return cls(spheres)

    def max_deviation(self, other: "RightSpectrum") -> float:
        """Symmetric Hausdorff-style distance on (re, modulus) data."""
        def one_sided(src, dst):
            worst = 0.0
            for s in src:
                best = min(max(abs(s.re - t.re), abs(s.modulus - t.modulus))
                           for t in dst)
                worst = max(worst, best)
            return worst

        if not self.spheres or not other.spheres:
            return math.inf
        return max(one_sided(self.spheres, other.spheres),
                   one_sided(other.spheres, self.spheres))

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.spheres]


def _clamped_sqrt(radicand: float) -> float:
    # Small negative radicands are roundoff from cancellation; anything
    # decidedly negative means the input was not a group element.
    if radicand < -1e-9:
        raise NegativeRadicandError(f"radicand {radicand:.3e} below -1e-9")
    return math.sqrt(max(radicand, 0.0))


def _sphere_pairs(trace_half: float, dlt: float):
    """The (re, modulus) data of both spectral spheres.

    trace_half is a0 + d0.  The larger real part carries the larger modulus
    exactly when a0 + d0 >= 0; negating a loxodromic element swaps which
    root of the modulus equation belongs to which real part, so the pairing
    must follow the sign of the trace.
    """
    A = trace_half
    sgn = 1.0 if dlt > 0.0 else (-1.0 if dlt < 0.0 else 0.0)
    inner = (A * A + dlt - 4.0) ** 2 + 8.0 * dlt * (sgn + 1.0)
    xprime = (A * A + dlt + _clamped_sqrt(inner)) / 4.0
    half_split = 0.5 * _clamped_sqrt(2.0 * xprime - 2.0 - dlt)
    mod_split = _clamped_sqrt(xprime * xprime - 1.0)
    re_hi, re_lo = 0.5 * A + half_split, 0.5 * A - half_split
    if A >= 0.0:
        m2_hi, m2_lo = xprime + mod_split, xprime - mod_split
    else:
        m2_hi, m2_lo = xprime - mod_split, xprime + mod_split
    return [(re_hi, math.sqrt(max(m2_hi, 0.0))),
            (re_lo, math.sqrt(max(m2_lo, 0.0)))]


def right_spectrum(t: GroupElement) -> RightSpectrum:
    """Spectral spheres from the unified trace/delta formula."""
    m = t.m
    return RightSpectrum.from_pairs(_sphere_pairs(m.a.w + m.d.w, delta(m)))


def right_spectrum_casewise(t: GroupElement,
                            eps_class: float = EPS_CLASS) -> RightSpectrum:
    """Spectral spheres from the case-by-case description.

    An independent route kept deliberately close to the entry data: the
    off-diagonal cases work through d0, the generic case through the real
    part of conj(c)^-1 b conj(d) + d rather than a0 + d0.
    """
    m = t.m
    eps = eps_class * (1.0 + m.frobenius())
    b_zero = m.b.norm() <= eps and m.c.norm() <= eps
    if b_zero:
        return RightSpectrum.from_pairs([(m.a.w, 1.0), (m.d.w, 1.0)])
    if (m.b - m.c.conjugate()).norm() <= eps:
        d0 = m.d.w
        gap = d0 * d0 - 1.0
        if abs(gap) <= eps_class:
            return RightSpectrum.from_pairs([(d0, abs(d0))])
        if gap > 0.0:
            root = math.sqrt(gap)
            return RightSpectrum.from_pairs(
                [(d0 + root, abs(d0 + root)), (d0 - root, abs(d0 - root))])
        return RightSpectrum.from_pairs([(d0, 1.0)])
    trace_half = (m.c.conjugate().inverse() * m.b * m.d.conjugate() + m.d).w
    dlt = delta(m)
    if abs(dlt) <= eps_class:
        return RightSpectrum.from_pairs([(0.5 * trace_half, 1.0)])
    if dlt < 0.0:
        root = math.sqrt(-dlt)
        return RightSpectrum.from_pairs(
            [(0.5 * (trace_half + root), 1.0), (0.5 * (trace_half - root), 1.0)])
    return RightSpectrum.from_pairs(_sphere_pairs(trace_half, dlt))


def s_spectrum(t: GroupElement) -> RightSpectrum:
    """The S-spectrum; for quaternionic matrices it equals the right spectrum."""
    return right_spectrum(t)


def verify_s_point(m: Mat2H, s: Quaternion, tol: float = SPECTRUM_TOL) -> bool:
    """Whether s solves the S-spectrum equation: T^2 - 2 Re(s) T + |s|^2 I
    is singular."""
    probe = (m @ m) - (2.0 * s.w) * m + s.norm_sq() * Mat2H.identity()
    return probe.is_singular(tol)


def right_spectrum_oracle(m: Mat2H) -> RightSpectrum:
    """Sphere data read off the eigenvalues of the complex adjoint chi(M).

    The four chi eigenvalues project onto (re, modulus) pairs in duplicate;
    clustering the projections recovers the spectral spheres without any
    of the closed-form machinery above.
    """
    eigenvalues = np.linalg.eigvals(m.chi())
    pairs = sorted((float(e.real), float(abs(e))) for e in eigenvalues)
    clusters: list[list[float]] = []
    for re, mod in pairs:
        if clusters:
            n = clusters[-1][2]
            if (abs(re - clusters[-1][0] / n) <= 1e-8 * (1.0 + abs(re))
                    and abs(mod - clusters[-1][1] / n) <= 1e-8 * (1.0 + mod)):
                clusters[-1][0] += re
                clusters[-1][1] += mod
                clusters[-1][2] += 1
                continue
        clusters.append([re, mod, 1])
    return RightSpectrum.from_pairs([(s / n, m_ / n) for s, m_, n in clusters])


# -- left spectrum ---------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SphereFamily:
    """Left-eigenvalue family {alpha + beta * q : q unit imaginary}.

    The image is a round 2-sphere; beta fixes its radius and orientation,
    and need not point in an imaginary direction itself.
    """

    alpha: Quaternion
    beta: Quaternion

    @property
    def center_re(self) -> float:
        return self.alpha.w

    @property
    def offset(self) -> Quaternion:
        return self.alpha.imag()

    @property
    def radius(self) -> float:
        return self.beta.norm()

    @property
    def axis(self) -> Quaternion:
        return self.beta.normalized()

    def sample(self, count: int, seed=0) -> list[Quaternion]:
        rng = np.random.default_rng(seed)
        return [self.alpha + self.beta * _unit_imaginary(rng)
                for _ in range(count)]

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.as_list(),
            "beta": self.beta.as_list(),
            "center_re": self.center_re,
            "offset": self.offset.as_list(),
            "axis": self.axis.as_list(),
            "radius": self.radius,
        }


@dataclass(frozen=True, slots=True)
class LeftSpectrumDescription:
    points: tuple[Quaternion, ...]
    families: tuple[SphereFamily, ...]

    def to_json(self) -> dict:
        return {"points": [p.as_list() for p in self.points],
                "families": [f.to_json() for f in self.families]}


def _lmul_matrix(q: Quaternion) -> np.ndarray:
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array([[w, -x, -y, -z],
                     [x, w, -z, y],
                     [y, z, w, -x],
                     [z, -y, x, w]])


def _rmul_matrix(q: Quaternion) -> np.ndarray:
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array([[w, -x, -y, -z],
                     [x, w, z, -y],
                     [y, -z, w, x],
                     [z, y, -x, w]])


def _quad_residual(q: Quaternion, B: Quaternion, C: Quaternion) -> float:
    return (q * q + B * q + C).norm()


def _newton_polish(q: Quaternion, B: Quaternion, C: Quaternion) -> Quaternion:
    # F(q) = q^2 + Bq + C; dF(h) = qh + hq + Bh, assembled as a real 4x4.
    jacobian = _lmul_matrix(q + B) + _rmul_matrix(q)
    value = q * q + B * q + C
    try:
        step = np.linalg.solve(jacobian, -np.array(value.as_list()))
    except np.linalg.LinAlgError:
        return q
    polished = q + Quaternion(*(float(s) for s in step))
    if _quad_residual(polished, B, C) < _quad_residual(q, B, C):
        return polished
    return q


def _isolated_root_candidates(B: Quaternion, C: Quaternion) -> list[Quaternion]:
    """Real roots of the scalar elimination polynomial, lifted back.

    Writing q = q0 + qv, the imaginary part of q^2 + Bq + C == 0 is the
    linear system (mu I + [Bv]_x) qv = -q0 Bv - Cv with mu = 2 q0 + B0.
    Inverting it via mu^2 I - mu K + Bv Bv^T and substituting into the real
    part clears denominators into a degree-8 polynomial in q0.
    """
    B0, C0 = B.w, C.w
    bv = np.array([B.x, B.y, B.z])
    cv = np.array([C.x, C.y, C.z])
    nb2 = float(bv @ bv)
    K = np.array([[0.0, -bv[2], bv[1]],
                  [bv[2], 0.0, -bv[0]],
                  [-bv[1], bv[0], 0.0]])

    mu = np.array([B0, 2.0])
    mu2 = npoly.polymul(mu, mu)
    denom = npoly.polymul(mu, npoly.polyadd(mu2, [nb2]))
    rhs = [np.array([-cv[i], -bv[i]]) for i in range(3)]
    numer = []
    for i in range(3):
        acc = np.zeros(1)
        for j in range(3):
            entry = npoly.polyadd(
                npoly.polymul(mu2, [1.0 if i == j else 0.0]),
                npoly.polyadd(npoly.polymul(mu, [-K[i, j]]),
                              [bv[i] * bv[j]]))
            acc = npoly.polyadd(acc, npoly.polymul(entry, rhs[j]))
        numer.append(acc)

    poly = npoly.polymul(npoly.polymul([C0, B0, 1.0], denom), denom)
    for i in range(3):
        poly = npoly.polysub(poly, npoly.polymul(numer[i], numer[i]))
    dot_bn = np.zeros(1)
    for i in range(3):
        dot_bn = npoly.polyadd(dot_bn, npoly.polymul([bv[i]], numer[i]))
    poly = npoly.polysub(poly, npoly.polymul(dot_bn, denom))

    candidates = []
    for root in npoly.polyroots(poly):
        if abs(root.imag) > 1e-8 * (1.0 + abs(root.real)):
            continue
        q0 = float(root.real)
        mu_val = 2.0 * q0 + B0
        if abs(mu_val) <= 1e-8 * (1.0 + abs(B0)):
            continue  # the mu == 0 stratum is handled separately
        qv = np.linalg.solve(mu_val * np.eye(3) + K, -q0 * bv - cv)
        candidates.append(Quaternion(q0, *(float(p) for p in qv)))

    # mu == 0: q0 is pinned at -B0/2 and the linear system degenerates to
    # Bv x qv = rhs, solvable only when rhs is orthogonal to Bv.
    q0 = -0.5 * B0
    rhs0 = -q0 * bv - cv
    if abs(float(bv @ rhs0)) <= 1e-8 * (1.0 + nb2) * (1.0 + float(np.linalg.norm(rhs0))):
        qp = np.cross(rhs0, bv) / nb2
        const = qp @ qp - (q0 * q0 + B0 * q0 + C0)
        disc = nb2 * nb2 - 4.0 * nb2 * const
        if disc >= 0.0:
            for sign in (1.0, -1.0):
                tparam = (-nb2 + sign * math.sqrt(disc)) / (2.0 * nb2)
                qv = qp + tparam * bv
                candidates.append(Quaternion(q0, *(float(p) for p in qv)))
    return candidates


def left_eigenvalues(m: Mat2H, residual_tol: float = 1e-9,
                     singular_tol: float = SPECTRUM_TOL) -> LeftSpectrumDescription:
    """All left eigenvalues of M, as isolated points and/or a sphere family.

    Every emitted point satisfies the quadratic residual bound and makes
    M - lambda I singular; when no candidate survives those filters the
    computation is reported as failed rather than silently empty.
    """
    scale = 1.0 + m.frobenius()
    if m.b.norm() <= 1e-10 * scale:
        points = [m.a]
        if (m.a - m.d).norm() > 1e-10 * scale:
            points.append(m.d)
        points.sort(key=lambda p: (p.w, p.x, p.y, p.z))
        return LeftSpectrumDescription(tuple(points), ())

    binv = m.b.inverse()
    B = binv * (m.a - m.d)
    C = -(binv * m.c)
    bv = np.array([B.x, B.y, B.z])
    cv = np.array([C.x, C.y, C.z])
    cross = np.cross(bv, cv)
    parallel = float(np.linalg.norm(cross)) <= 1e-10 * (
        1.0 + float(np.linalg.norm(bv)) * float(np.linalg.norm(cv)))

    candidates: list[Quaternion]
    if parallel:
        nb = float(np.linalg.norm(bv))
        nc = float(np.linalg.norm(cv))
        axis = None
        if nb >= nc and nb > 1e-10:
            axis = bv / nb
        elif nc > 1e-10:
            axis = cv / nc
        if axis is None:
            # Real coefficients: either two real roots or a whole sphere.
            disc = B.w * B.w - 4.0 * C.w
            if disc < -1e-12:
                radius = math.sqrt(C.w - 0.25 * B.w * B.w)
                family = SphereFamily(m.a - m.b * (0.5 * B.w), m.b * radius)
                return LeftSpectrumDescription((), (family,))
            root = math.sqrt(max(disc, 0.0))
            candidates = [Quaternion.real(0.5 * (-B.w + root)),
                          Quaternion.real(0.5 * (-B.w - root))]
        else:
            # B and C share a slice; solve the complex quadratic there.
            bx = float(bv @ axis)
            cx = float(cv @ axis)
            roots = np.roots([1.0, complex(B.w, bx), complex(C.w, cx)])
            candidates = [Quaternion(float(z.real),
                                     *(float(z.imag) * float(p) for p in axis))
                          for z in roots]
    else:
        candidates = _isolated_root_candidates(B, C)

    seen: list[Quaternion] = []
    for q in candidates:
        q = _newton_polish(q, B, C)
        if _quad_residual(q, B, C) > residual_tol:
            continue
        lam = m.a + m.b * q
        if not (m - Mat2H.diag(lam, lam)).is_singular(singular_tol):
            continue
        if any((lam - known).norm() <= 1e-8 for known in seen):
            continue
        seen.append(lam)
    if not seen:
        raise NoRootFoundError("no left eigenvalue survived the residual filter")
    seen.sort(key=lambda p: (p.w, p.x, p.y, p.z))
    return LeftSpectrumDescription(tuple(seen), ())
