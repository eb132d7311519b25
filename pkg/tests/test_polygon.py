import random
from fractions import Fraction

import pytest

from semitoric import helix as H
from semitoric.errors import HiddenCornerUnsupported, InvalidCorner, InvalidPolygon
from semitoric.fans import CP2, SQUARE, fan_blowup
from semitoric.lattice import LatticeVector, det, is_primitive, path_winding
from semitoric.polygon import (
    CornerKind,
    Cut,
    corner_classify,
    edge_normal,
    helix_to_polygon,
    polygon_to_helix,
    polygon_validate,
    to_fraction,
)

from helpers import minimal_fixtures, random_descendant

COUPLED_SPIN = [("-3.5", "0"), ("1.5", "0"), ("3.5", "2"), ("-1.5", "2")]


def test_corner_examples():
    assert corner_classify((1, -1), (0, 1)) is CornerKind.DELZANT
    assert corner_classify((0, -1), (1, -1), -1) is CornerKind.FAKE
    assert corner_classify((0, 1), (-1, 1)) is CornerKind.DELZANT
    assert corner_classify((1, 0), (1, 1)) is CornerKind.DELZANT
    assert corner_classify((1, 0), (1, 2)) is CornerKind.INVALID


def test_corner_on_cut_hidden_and_invalid():
    # T^-1 (0,-1) = (1,-1); det((1,-1), (1,0)) = 1
    assert corner_classify((0, -1), (1, 0), -1) is CornerKind.HIDDEN
    assert corner_classify((0, -1), (3, -1), -1) is CornerKind.INVALID
    # with the opposite twist the roles change
    assert corner_classify((0, -1), (-1, -1), 1) is CornerKind.FAKE


def test_exact_rationals():
    assert to_fraction("-3.5") == Fraction(-7, 2)
    assert to_fraction("-7/2") == Fraction(-7, 2)
    with pytest.raises(InvalidPolygon):
        to_fraction(-3.5)
    with pytest.raises(InvalidPolygon):
        to_fraction("abc")


def test_edge_normal_is_inward_and_primitive():
    assert edge_normal((Fraction(0), Fraction(0)), (Fraction(4), Fraction(0))) == (0, 1)
    assert edge_normal((Fraction(1, 2), Fraction(0)), (Fraction(5, 2), Fraction(2))) == (-1, 1)


def test_coupled_spin_polygon():
    p = polygon_validate(COUPLED_SPIN, [("-3/2", 1)])
    assert p.census() == {"Delzant": 3, "Hidden": 0, "Fake": 1}
    assert p.kinds[3] is CornerKind.FAKE and p.vertices[3] == (Fraction(-3, 2), Fraction(2))
    h = polygon_to_helix(p)
    assert h.c == 1
    assert h.vectors == (LatticeVector(0, 1), LatticeVector(-1, 1), LatticeVector(0, -1))
    assert str(H.helix_classify_minimal(h)) == "Type3(k=1)"


def test_coupled_spin_clockwise_input():
    p = polygon_validate(list(reversed(COUPLED_SPIN)), [("-3/2", 1)])
    assert polygon_to_helix(p).vectors == (LatticeVector(0, 1), LatticeVector(-1, 1), LatticeVector(0, -1))


def test_coupled_spin_bottom_cut_is_rejected():
    with pytest.raises(InvalidCorner):
        polygon_validate(COUPLED_SPIN, [("-3/2", -1)])


def test_delzant_polygon_without_cuts_gives_its_fan():
    square = [(0, 0), (2, 0), (2, 1), (0, 1)]
    h = polygon_to_helix(polygon_validate(square))
    assert h.c == 0 and h.d == 4
    assert H.helix_canonical(h) == (4, 0, (0, 0, 0, 0))
    tri = [(0, 0), (3, 0), (0, 3)]
    h = polygon_to_helix(polygon_validate(tri))
    assert H.helix_canonical(h) == (3, 0, (-1, -1, -1))


def test_validation_errors():
    with pytest.raises(InvalidPolygon):
        polygon_validate([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(InvalidPolygon):
        polygon_validate([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])  # not convex
    with pytest.raises(InvalidCorner):
        polygon_validate([(0, 0), (2, 0), (0, 1)])  # det 2 corner
    with pytest.raises(InvalidPolygon):
        polygon_validate(COUPLED_SPIN, [("5", 1)])  # cut outside
    with pytest.raises(InvalidPolygon):
        polygon_validate(COUPLED_SPIN, [("-3/2", 1), ("-3/2", 1)])
    with pytest.raises(InvalidPolygon):
        polygon_validate(COUPLED_SPIN, [("-3/2", 0)])


def test_hidden_corner_rejected():
    # apex normals (-1,-1) then (1,-1): det 2, and det(T^-1 (-1,-1), (1,-1)) = 1
    tri = [(-2, 0), (2, 0), (0, 2)]
    with pytest.raises(InvalidCorner):
        polygon_validate(tri)
    with pytest.raises(HiddenCornerUnsupported):
        polygon_validate(tri, [("0", 1)])


def test_helix_to_polygon_examples():
    p = helix_to_polygon(H.TYPE2)
    assert p.census() == {"Delzant": 2, "Hidden": 0, "Fake": 2}
    fakes = [i for i, k in enumerate(p.kinds) if k is CornerKind.FAKE]
    assert fakes[1] - fakes[0] == 1
    q = helix_to_polygon(H.SemitoricHelix(3, 0, CP2.vectors))
    assert len(q.vertices) == 3 and not q.cuts
    # the standard simplex up to scale and lattice motion
    assert H.helix_canonical(polygon_to_helix(q)) == (3, 0, (-1, -1, -1))
    r = helix_to_polygon(H.type3(1))
    assert polygon_to_helix(r) == H.type3(1)


def _check_polygon(h, p):
    assert p.census() == {"Delzant": h.d, "Hidden": 0, "Fake": h.c}
    normals = p.normals()
    assert all(is_primitive(n) for n in normals)
    assert all(det(normals[i - 1], normals[i]) > 0 for i in range(len(normals)))
    assert path_winding(normals, closed=True) == 1
    # fake corners sit on their cut lines, on the marked side
    lams = {cut.lam: cut.eps for cut in p.cuts}
    for v, kind in zip(p.vertices, p.kinds):
        if kind is CornerKind.FAKE:
            assert _on_boundary_side(p, v, lams[v[0]])
    assert polygon_to_helix(p) == polygon_to_helix(polygon_validate(p.vertices, p.cuts))
    assert H.helix_canonical(polygon_to_helix(p)) == H.helix_canonical(h)


def _on_boundary_side(p, v, eps):
    # nothing of the polygon lies beyond v along the vertical line through it
    for i in range(p.m):
        a, b = p.vertices[i], p.vertices[(i + 1) % p.m]
        if a[0] != b[0] and min(a[0], b[0]) <= v[0] <= max(a[0], b[0]):
            y = a[1] + (b[1] - a[1]) * (v[0] - a[0]) / (b[0] - a[0])
            if (y - v[1]) * eps > 0:
                return False
    return True


def test_roundtrip_fixtures():
    for h in minimal_fixtures():
        _check_polygon(h, helix_to_polygon(h))


def test_roundtrip_fans():
    for f in (CP2, SQUARE, fan_blowup(SQUARE, 2), fan_blowup(fan_blowup(CP2, 0), 1)):
        h = H.SemitoricHelix(f.d, 0, f.vectors)
        _check_polygon(h, helix_to_polygon(h))


def test_roundtrip_random_descendants():
    rng = random.Random(71)
    base = minimal_fixtures()
    for _ in range(200):
        h = random_descendant(rng, base)
        _check_polygon(h, helix_to_polygon(h))


def test_polygon_side_is_recorded():
    p = helix_to_polygon(H.TYPE2)
    assert all(isinstance(c, Cut) and c.eps in (1, -1) for c in p.cuts)
    assert [c.lam for c in p.cuts] == sorted(c.lam for c in p.cuts)
