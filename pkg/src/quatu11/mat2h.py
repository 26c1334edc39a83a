"""2x2 quaternionic matrices and their 4x4 complex adjoint image.

Writing each entry q = (q.w + q.x*i) + (q.y + q.z*i)*j maps it to the 2x2
complex block [[z, v], [-conj(v), conj(z)]]; applying this blockwise gives a
4x4 complex matrix chi(M).  chi is a ring homomorphism that intertwines the
conjugate transpose on both sides, so inverses, singularity tests, and
eigenvalue work are delegated to numpy through it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularMatrixError
from .quaternion import ONE, ZERO, Quaternion

SINGULAR_TOL = 1e-12

__all__ = ["Mat2H", "SINGULAR_TOL"]


def _entry(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value), 0.0, 0.0, 0.0)
    raise TypeError(f"matrix entries must be quaternions or reals, got {value!r}")


@dataclass(frozen=True, slots=True)
class Mat2H:
    """Matrix [[a, b], [c, d]] with quaternion entries."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _entry(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2H":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def diag(cls, p, q) -> "Mat2H":
        return cls(_entry(p), ZERO, ZERO, _entry(q))

    @classmethod
    def from_json(cls, doc: dict) -> "Mat2H":
        if not isinstance(doc, dict) or set(doc) != {"a", "b", "c", "d"}:
            raise ValueError("matrix document must have exactly the keys a, b, c, d")
        entries = {}
        for key in ("a", "b", "c", "d"):
            parts = doc[key]
            if not isinstance(parts, list) or len(parts) != 4:
                raise ValueError(f"entry {key!r} must be a list of four numbers")
            for p in parts:
                if not isinstance(p, (int, float)) or not math.isfinite(p):
                    raise ValueError(f"entry {key!r} has a non-finite component")
            entries[key] = Quaternion.from_list(parts)
        return cls(**entries)

    def to_json(self) -> dict:
        return {"a": self.a.as_list(), "b": self.b.as_list(),
                "c": self.c.as_list(), "d": self.d.as_list()}

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Mat2H") -> "Mat2H":
        if not isinstance(other, Mat2H):
            return NotImplemented
        return Mat2H(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2H") -> "Mat2H":
        if not isinstance(other, Mat2H):
            return NotImplemented
        return Mat2H(self.a - other.a, self.b - other.b,
                     self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2H":
        return Mat2H(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: "Mat2H") -> "Mat2H":
        if not isinstance(other, Mat2H):
            return NotImplemented
        return Mat2H(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __rmul__(self, scalar) -> "Mat2H":
        # Scalars multiply from the left; quaternion scalars do not commute
        # with the entries, so there is deliberately no right version.
        if isinstance(scalar, (int, float)):
            scalar = Quaternion.real(scalar)
        if not isinstance(scalar, Quaternion):
            return NotImplemented
        return Mat2H(scalar * self.a, scalar * self.b,
                     scalar * self.c, scalar * self.d)

    def scale_left(self, scalar) -> "Mat2H":
        return _entry(scalar) * self

    def adjoint(self) -> "Mat2H":
        return Mat2H(self.a.conjugate(), self.c.conjugate(),
                     self.b.conjugate(), self.d.conjugate())

    def tr(self) -> float:
        """Real trace 2*(Re a + Re d); quaternionic traces are only defined
        up to similarity, the real part is what stays invariant."""
        return 2.0 * (self.a.w + self.d.w)

    def frobenius(self) -> float:
        return math.sqrt(self.a.norm_sq() + self.b.norm_sq()
                         + self.c.norm_sq() + self.d.norm_sq())

    # -- complex adjoint --------------------------------------------------

    def chi(self) -> np.ndarray:
        out = np.empty((4, 4), dtype=complex)
        for row, col, q in ((0, 0, self.a), (0, 2, self.b),
                            (2, 0, self.c), (2, 2, self.d)):
            z = complex(q.w, q.x)
            v = complex(q.y, q.z)
            out[row, col] = z
            out[row, col + 1] = v
            out[row + 1, col] = -v.conjugate()
            out[row + 1, col + 1] = z.conjugate()
        return out

    @classmethod
    def from_chi(cls, mat: np.ndarray) -> "Mat2H":
        def pick(r, c):
            z = mat[r, c]
            v = mat[r, c + 1]
            return Quaternion(float(z.real), float(z.imag),
                              float(v.real), float(v.imag))

        return cls(pick(0, 0), pick(0, 2), pick(2, 0), pick(2, 2))

    def inverse(self) -> "Mat2H":
        rep = self.chi()
        smallest = np.linalg.svd(rep, compute_uv=False)[-1]
        if smallest <= SINGULAR_TOL * np.linalg.norm(rep):
            raise SingularMatrixError("matrix is singular or nearly so")
        return Mat2H.from_chi(np.linalg.inv(rep))

    def is_singular(self, tol: float = SINGULAR_TOL) -> bool:
        rep = self.chi()
        smallest = np.linalg.svd(rep, compute_uv=False)[-1]
        return bool(smallest <= tol * (1.0 + np.linalg.norm(rep)))
