"""Exact integer linear algebra on Z^2.

Python integers are unbounded, so nothing here can overflow.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import DegenerateStep, NotUnimodular


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticeVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticeVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def scale(self, k: int) -> LatticeVector:
        return LatticeVector(k * self.x, k * self.y)

    def __str__(self):
        return f"({self.x},{self.y})"


class LatticeMatrix(NamedTuple):
    """The matrix [[a, b], [c, d]]; its columns are (a, c) and (b, d)."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_columns(cls, v, w) -> LatticeMatrix:
        return cls(v[0], w[0], v[1], w[1])

    @classmethod
    def from_rows(cls, rows) -> LatticeMatrix:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def columns(self) -> tuple[LatticeVector, LatticeVector]:
        return LatticeVector(self.a, self.c), LatticeVector(self.b, self.d)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other):
        if isinstance(other, LatticeMatrix):
            return mat_mul(self, other)
        return apply(self, other)

    def __neg__(self):
        return LatticeMatrix(-self.a, -self.b, -self.c, -self.d)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = LatticeMatrix(1, 0, 0, 1)
S_MAT = LatticeMatrix(0, -1, 1, 0)
T_MAT = LatticeMatrix(1, 1, 0, 1)


def det(v, w) -> int:
    """Determinant of the matrix with columns v and w."""
    return v[0] * w[1] - v[1] * w[0]


def mat_mul(A: LatticeMatrix, B: LatticeMatrix) -> LatticeMatrix:
    return LatticeMatrix(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def apply(A: LatticeMatrix, v) -> LatticeVector:
    return LatticeVector(A.a * v[0] + A.b * v[1], A.c * v[0] + A.d * v[1])


def mat_inverse(A: LatticeMatrix) -> LatticeMatrix:
    """Exact inverse of a matrix with determinant +1 or -1."""
    D = A.det
    if D not in (1, -1):
        raise NotUnimodular(f"det {A} = {D}")
    # adjugate / det, and 1/D == D for D = +-1
    return LatticeMatrix(D * A.d, -D * A.b, -D * A.c, D * A.a)


def t_power(k: int) -> LatticeMatrix:
    return LatticeMatrix(1, k, 0, 1)


def shear(v, k: int = 1) -> LatticeVector:
    """Apply T^k to v; the y-component is untouched."""
    return LatticeVector(v[0] + k * v[1], v[1])


def is_primitive(v) -> bool:
    """True iff v is a nonzero vector with coprime entries."""
    return gcd(v[0], v[1]) == 1


def primitive(v) -> LatticeVector:
    g = gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return LatticeVector(v[0] // g, v[1] // g)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def complete_basis(u) -> LatticeMatrix:
    """A matrix in SL2(Z) whose first column is the primitive vector u."""
    g, s, t = ext_gcd(u[0], u[1])
    if g != 1:
        raise ValueError(f"{tuple(u)} is not primitive")
    # det(u, (-t, s)) = s*u0 + t*u1 = 1
    return LatticeMatrix(u[0], -t, u[1], s)


def _half(v) -> int:
    # 0 for the upper half-plane including the positive x-axis, 1 otherwise
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def path_winding(vectors, closed: bool = False) -> Fraction:
    """Total counter-clockwise turning of a vector path, in full turns.

    Each step from v to w contributes the angle in (0, 2pi) swept
    counter-clockwise from v to w.  The count is exact at half-turn
    resolution: a step that crosses between the two half-planes counts 1/2,
    a step inside one half-plane counts 0 if it turns left and 1 if it turns
    right (it has to go almost all the way round).  Summed over a closed loop
    the rounding errors telescope away and the result is the usual winding
    number; for an open path it is exact up to less than half a turn.
    """
    vs = list(vectors)
    if closed:
        vs = vs + vs[:1]
    halves = 0
    for i in range(len(vs) - 1):
        v, w = vs[i], vs[i + 1]
        D = det(v, w)
        if D == 0:
            raise DegenerateStep(i, f"{tuple(v)} and {tuple(w)} are parallel")
        if _half(v) != _half(w):
            halves += 1
        else:
            halves += 0 if D > 0 else 2
    return Fraction(halves, 2)
