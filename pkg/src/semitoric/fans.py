"""Toric fans: validation, blowup/blowdown, minimal models."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BadDeterminant,
    IndexOutOfRange,
    MinimumLength,
    NotBlowdownSite,
    NotCounterClockwise,
    NotMinimal,
    NotPrimitive,
    Unclassifiable,
)
from .lattice import LatticeMatrix, LatticeVector, det, is_primitive, mat_inverse, path_winding

MAX_EXHAUSTIVE_D = 10


@dataclass(frozen=True)
class ToricFan:
    vectors: tuple[LatticeVector, ...]

    @property
    def d(self) -> int:
        return len(self.vectors)

    def __getitem__(self, i: int) -> LatticeVector:
        return self.vectors[i % self.d]

    def __str__(self):
        return ",".join(str(v) for v in self.vectors)


def fan_validate(vectors) -> ToricFan:
    """Check primitivity, length, unit determinants and winding, in that order."""
    vs = tuple(LatticeVector(*v) for v in vectors)
    for i, v in enumerate(vs):
        if not is_primitive(v):
            raise NotPrimitive(i, f"{v} is not primitive")
    if len(vs) < 3:
        raise MinimumLength(f"a fan needs at least 3 vectors, got {len(vs)}")
    for i in range(len(vs)):
        D = det(vs[i], vs[(i + 1) % len(vs)])
        if D != 1:
            raise BadDeterminant(i, f"det(v{i}, v{(i + 1) % len(vs)}) = {D}")
    w = path_winding(vs, closed=True)
    if w != 1:
        raise NotCounterClockwise(f"vectors wind {w} times around the origin")
    return ToricFan(vs)


def fan_blowup(f: ToricFan, i: int) -> ToricFan:
    if not 0 <= i < f.d:
        raise IndexOutOfRange(i, f"fan has {f.d} vectors")
    vs = list(f.vectors)
    vs.insert(i + 1, f[i] + f[i + 1])
    return ToricFan(tuple(vs))


def is_blowdown_site(f: ToricFan, i: int) -> bool:
    return f[i] == f[i - 1] + f[i + 1]


def fan_blowdown(f: ToricFan, i: int) -> ToricFan:
    if not 0 <= i < f.d:
        raise IndexOutOfRange(i, f"fan has {f.d} vectors")
    if not is_blowdown_site(f, i):
        raise NotBlowdownSite(i, f"v{i} = {f[i]} is not v{i - 1} + v{i + 1}")
    if f.d - 1 < 3:
        raise MinimumLength("blowdown would leave fewer than 3 vectors")
    return ToricFan(f.vectors[:i] + f.vectors[i + 1 :])


def fan_is_minimal(f: ToricFan) -> bool:
    return not any(is_blowdown_site(f, i) for i in range(f.d))


def fan_minimize(f: ToricFan) -> tuple[ToricFan, list[int]]:
    """Blow down at the lowest available index until minimal."""
    trace: list[int] = []
    while True:
        site = next((i for i in range(f.d) if is_blowdown_site(f, i)), None)
        if site is None:
            return f, trace
        f = fan_blowdown(f, site)
        trace.append(site)


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class FanClass:
    name: str  # "CP2", "Square" or "Hirzebruch"
    k: Optional[int] = None
    rotation: int = 0
    normalizer: LatticeMatrix = LatticeMatrix(1, 0, 0, 1)

    def __str__(self):
        return f"Hirzebruch({self.k})" if self.name == "Hirzebruch" else self.name


def _normalized(f: ToricFan, r: int) -> tuple[LatticeMatrix, list[LatticeVector]]:
    N = mat_inverse(LatticeMatrix.from_columns(f[r], f[r + 1]))
    return N, [N @ f[r + j] for j in range(f.d)]


def fan_classify_minimal(f: ToricFan) -> FanClass:
    """Match a minimal fan against the three models.

    Each rotation r is moved by the inverse of [v_r, v_(r+1)] so that it
    starts (1,0), (0,1); the first rotation whose tail fits a model decides.
    """
    if not fan_is_minimal(f):
        raise NotMinimal(f"fan {f} admits a blowdown")
    for r in range(f.d):
        N, w = _normalized(f, r)
        if f.d == 3 and w[2] == (-1, -1):
            return FanClass("CP2", None, r, N)
        if f.d == 4 and w[2].x == -1 and w[3] == (0, -1):
            k = w[2].y
            if k == 0:
                return FanClass("Square", None, r, N)
            if k not in (1, -1):
                return FanClass("Hirzebruch", k, r, N)
    raise Unclassifiable(f"minimal fan {f} matches no model")


def fan_integers(f: ToricFan) -> tuple[int, ...]:
    """The a_i with v_(i+2) = a_i v_(i+1) - v_i."""
    return tuple(det(f[i], f[i + 2]) for i in range(f.d))


def least_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    return min((seq[r:] + seq[:r] for r in range(len(seq))), default=())


def fan_key(f: ToricFan) -> tuple[int, tuple[int, ...]]:
    """Complete invariant of a fan up to SL2(Z) and cyclic relabelling."""
    return f.d, least_rotation(fan_integers(f))


def reachable_minimal_models(f: ToricFan) -> list[str]:
    """Every minimal model reachable by some order of blowdowns, sorted.

    Explores all blowdown orders, sharing work between fans that agree up to
    SL2(Z) and relabelling.
    """
    if f.d > MAX_EXHAUSTIVE_D:
        raise ValueError(f"exhaustive mode is limited to d <= {MAX_EXHAUSTIVE_D}")
    seen: set = set()
    found: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        key = fan_key(g)
        if key in seen:
            continue
        seen.add(key)
        sites = [i for i in range(g.d) if is_blowdown_site(g, i)]
        if not sites:
            found.add(str(fan_classify_minimal(g)))
            continue
        stack.extend(fan_blowdown(g, i) for i in sites)
    return sorted(found)


CP2 = ToricFan(tuple(LatticeVector(*v) for v in ((1, 0), (0, 1), (-1, -1))))
SQUARE = ToricFan(tuple(LatticeVector(*v) for v in ((1, 0), (0, 1), (-1, 0), (0, -1))))


def hirzebruch(k: int) -> ToricFan:
    return ToricFan(tuple(LatticeVector(*v) for v in ((1, 0), (0, 1), (-1, k), (0, -1))))
