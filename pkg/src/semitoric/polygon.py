"""Delzant semitoric polygons and their conversion to and from helices.

Conventions (fixed so that the coupled spin example works out):

* vertices are stored counter-clockwise, so the inward normal of an edge with
  direction (dx, dy) is the primitive vector along (-dy, dx);
* a corner sits between the normals u (incoming edge) and w (outgoing edge);
* a corner on a cut is fake when w = T^-1 u and hidden when det(T^-1 u, w) = 1,
  whichever boundary the cut marks;
* unwinding multiplies every normal after a fake corner by T, which turns the
  fake corner into a repeated normal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence

from .errors import (
    HiddenCornerUnsupported,
    Infeasible,
    InvalidCorner,
    InvalidPolygon,
    SeamOnCut,
)
from .helix import SemitoricHelix, helix_validate
from .lattice import LatticeVector, det, path_winding, primitive, shear

Point = tuple[Fraction, Fraction]

# twist used for corners on cuts; see the module docstring
CUT_TWIST = -1


class CornerKind(enum.Enum):
    DELZANT = "Delzant"
    HIDDEN = "Hidden"
    FAKE = "Fake"
    INVALID = "Invalid"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Cut:
    lam: Fraction
    eps: int


@dataclass(frozen=True)
class SemitoricPolygon:
    vertices: tuple[Point, ...]
    cuts: tuple[Cut, ...] = ()
    kinds: tuple[CornerKind, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return len(self.vertices)

    def normals(self) -> list[LatticeVector]:
        """Inward normal of edge i, which runs from vertex i to vertex i+1."""
        return [edge_normal(self.vertices[i], self.vertices[(i + 1) % self.m]) for i in range(self.m)]

    def census(self) -> dict[str, int]:
        out = {str(k): 0 for k in (CornerKind.DELZANT, CornerKind.HIDDEN, CornerKind.FAKE)}
        for k in self.kinds:
            out[str(k)] += 1
        return out


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction or string such as "-3.5" or "-7/2"."""
    if isinstance(x, float):
        raise InvalidPolygon(f"refusing inexact float {x!r}; pass it as a string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidPolygon(f"not a rational number: {x!r}") from e


def edge_normal(p: Point, q: Point) -> LatticeVector:
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = (-dy, dx)
    scale = lcm(n[0].denominator, n[1].denominator)
    ints = (int(n[0] * scale), int(n[1] * scale))
    if ints == (0, 0):
        raise InvalidPolygon(f"repeated vertex {p}")
    return primitive(ints)


def edge_direction(n) -> LatticeVector:
    """Direction of travel along an edge with inward normal n."""
    return LatticeVector(n[1], -n[0])


def corner_classify(u, w, twist: Optional[int] = None) -> CornerKind:
    """Kind of the corner between inward normals u and w (counter-clockwise).

    Off a cut (twist None) only the Delzant test applies.  On a cut the
    corner is compared with T^twist u: equal direction means fake, unit
    determinant means hidden.
    """
    if twist is None:
        return CornerKind.DELZANT if det(u, w) == 1 else CornerKind.INVALID
    D = det(shear(u, twist), w)
    if D == 0:
        return CornerKind.FAKE
    if D == 1:
        return CornerKind.HIDDEN
    return CornerKind.INVALID


def _signed_area2(vs: Sequence[Point]) -> Fraction:
    return sum(
        (vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1] for i in range(len(vs))),
        Fraction(0),
    )


def _boundary_y(vs: Sequence[Point], x: Fraction, eps: int) -> Fraction:
    """Top (eps = +1) or bottom (eps = -1) height of the polygon at abscissa x."""
    ys = []
    for i in range(len(vs)):
        (x0, y0), (x1, y1) = vs[i], vs[(i + 1) % len(vs)]
        if x0 == x1:
            if x0 == x:
                ys += [y0, y1]
        elif min(x0, x1) <= x <= max(x0, x1):
            ys.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    return max(ys) if eps > 0 else min(ys)


def polygon_validate(vertices, cuts=()) -> SemitoricPolygon:
    """Normalise orientation, check convexity and classify every corner.

    Vertices may be given in either orientation; they are stored
    counter-clockwise.  Hidden corners are rejected.
    """
    vs = [(to_fraction(x), to_fraction(y)) for x, y in vertices]
    if len(vs) < 3:
        raise InvalidPolygon(f"need at least 3 vertices, got {len(vs)}")
    area = _signed_area2(vs)
    if area == 0:
        raise InvalidPolygon("polygon has zero area")
    if area < 0:
        vs.reverse()
    m = len(vs)
    normals = [edge_normal(vs[i], vs[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        if det(normals[i - 1], normals[i]) <= 0:
            raise InvalidPolygon(f"vertex {i} at {_fmt(vs[i])} is not a convex corner")
    if path_winding(normals, closed=True) != 1:
        raise InvalidPolygon("boundary is not simple")

    cs = tuple(Cut(to_fraction(c[0]), int(c[1])) if not isinstance(c, Cut) else c for c in cuts)
    xmin, xmax = min(v[0] for v in vs), max(v[0] for v in vs)
    for j, cut in enumerate(cs):
        if cut.eps not in (1, -1):
            raise InvalidPolygon(f"cut {j} has sign {cut.eps}, expected +1 or -1")
        if not xmin < cut.lam < xmax:
            raise InvalidPolygon(f"cut {j} at x = {cut.lam} misses the interior of the polygon")
        if j and cs[j - 1].lam >= cut.lam:
            raise InvalidPolygon("cut positions must be strictly increasing")

    on_cut: dict[int, int] = {}
    for j, cut in enumerate(cs):
        point = (cut.lam, _boundary_y(vs, cut.lam, cut.eps))
        if point not in vs:
            # the cut meets the boundary inside an edge
            i = next(i for i in range(m) if _on_segment(point, vs[i], vs[(i + 1) % m]))
            n = normals[i]
            if corner_classify(n, n, CUT_TWIST) is CornerKind.HIDDEN:
                raise HiddenCornerUnsupported(f"hidden corner at {_fmt(point)} on cut {j}")
            raise InvalidCorner(i, f"cut {j} meets edge {i} at {_fmt(point)}, which is no corner")
        on_cut[vs.index(point)] = j

    kinds = []
    for i in range(m):
        u, w = normals[i - 1], normals[i]
        kind = corner_classify(u, w, CUT_TWIST if i in on_cut else None)
        if kind is CornerKind.HIDDEN:
            raise HiddenCornerUnsupported(f"hidden corner at {_fmt(vs[i])}")
        if kind is CornerKind.INVALID:
            where = f"on cut {on_cut[i]}" if i in on_cut else "off the cuts"
            raise InvalidCorner(i, f"corner at {_fmt(vs[i])} {where} fails its test (normals {u}, {w})")
        kinds.append(kind)
    return SemitoricPolygon(tuple(vs), cs, tuple(kinds))


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    return cross == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _fmt(p: Point) -> str:
    return f"({p[0]},{p[1]})"


def polygon_to_helix(p: SemitoricPolygon) -> SemitoricHelix:
    """Unwind the polygon's normals into a helix window.

    The window starts right after the lowest (then leftmost) Delzant corner
    that lies on no cut line.  Every normal after a fake corner is multiplied
    by T, the repeated normals this creates are dropped, and the remaining d
    vectors together with c = number of cuts determine the helix.
    """
    if not p.kinds:
        p = polygon_validate(p.vertices, p.cuts)
    m = p.m
    lams = {cut.lam for cut in p.cuts}
    seams = [i for i in range(m) if p.kinds[i] is CornerKind.DELZANT and p.vertices[i][0] not in lams]
    if not seams:
        raise SeamOnCut("every Delzant corner lies on a cut line")
    s = min(seams, key=lambda i: (p.vertices[i][1], p.vertices[i][0]))
    normals = p.normals()
    w = [normals[(s + j) % m] for j in range(m)]
    kinds = [p.kinds[(s + j) % m] for j in range(m)]  # kinds[j] sits between w[j-1] and w[j]

    twist = 0
    unwound = [w[0]]
    for j in range(1, m):
        if kinds[j] is CornerKind.FAKE:
            twist += 1
        unwound.append(shear(w[j], twist))
    vs = [unwound[0]]
    for j in range(1, m):
        if unwound[j] == vs[-1]:
            continue
        if det(vs[-1], unwound[j]) != 1:
            raise InvalidCorner((s + j) % m, f"unwound normals {vs[-1]}, {unwound[j]} do not form a basis")
        vs.append(unwound[j])
    return helix_validate(len(vs), len(p.cuts), vs)


# --------------------------------------------------------------------------
# helix -> polygon


def _min_lengths(dirs: list[LatticeVector]) -> Optional[list[Fraction]]:
    """Edge lengths l_i >= 1 with sum l_i e_i = 0 and sum l_i minimal.

    With l = 1 + t the problem is: minimise sum t subject to t >= 0 and
    sum t_i e_i = r.  An optimum sits at a vertex of the feasible set, which
    has at most two nonzero t_i, so trying every support of size <= 2 finds
    it.  Ties go to the lexicographically smallest t.
    """
    n = len(dirs)
    rx = -sum(e.x for e in dirs)
    ry = -sum(e.y for e in dirs)
    cands: list[list[Fraction]] = []
    if rx == 0 and ry == 0:
        cands.append([Fraction(0)] * n)
    for i in range(n):
        e = dirs[i]
        if det(e, (rx, ry)) == 0:
            t = Fraction(rx, e.x) if e.x else Fraction(ry, e.y)
            if t >= 0:
                cands.append([t if k == i else Fraction(0) for k in range(n)])
    for i, j in combinations(range(n), 2):
        D = det(dirs[i], dirs[j])
        if D == 0:
            continue
        ti = Fraction(det((rx, ry), dirs[j]), D)
        tj = Fraction(det(dirs[i], (rx, ry)), D)
        if ti >= 0 and tj >= 0:
            t = [Fraction(0)] * n
            t[i], t[j] = ti, tj
            cands.append(t)
    if not cands:
        return None
    best = min(cands, key=lambda t: (sum(t), t))
    return [1 + t for t in best]


def _normal_cycle(h: SemitoricHelix) -> list[LatticeVector]:
    last = h.vectors[-1]
    return list(h.vectors) + [shear(last, -j) for j in range(1, h.c + 1)]


def helix_to_polygon(h: SemitoricHelix) -> SemitoricPolygon:
    """A compact polygon whose unwinding gives back h.

    The normals are v_0 .. v_(d-1) followed by T^-1 v_(d-1) .. T^-c v_(d-1);
    the c corners between those last normals are the fake corners, all on the
    top boundary when v_(d-1) points down and all on the bottom otherwise.
    Windows of h are tried in order until this cycle winds once.
    """
    for r in range(h.d):
        g = h.shifted(r)
        if g.c and g.vectors[-1].y == 0:
            continue
        normals = _normal_cycle(g)
        if path_winding(normals, closed=True) != 1:
            continue
        lengths = _min_lengths([edge_direction(n) for n in normals])
        if lengths is None:
            continue
        pts: list[Point] = [(Fraction(0), Fraction(0))]
        for n, ell in zip(normals[:-1], lengths):
            e = edge_direction(n)
            pts.append((pts[-1][0] + ell * e.x, pts[-1][1] + ell * e.y))
        eps = 1 if g.vectors[-1].y < 0 else -1
        lams = sorted(pts[g.d + j][0] for j in range(g.c))
        return polygon_validate(pts, [Cut(lam, eps) for lam in lams])
    raise Infeasible(f"no window of {h} closes up into a convex polygon")
