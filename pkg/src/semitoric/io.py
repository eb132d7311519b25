"""Text and JSON formats shared by the command line tools."""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError
from .fans import ToricFan
from .helix import SemitoricHelix
from .lattice import LatticeMatrix, LatticeVector
from .polygon import Cut, SemitoricPolygon
from .words import eval_sl2, parse_word

FORMAT = 1

_VEC = re.compile(r"\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*")
_MAT = re.compile(r"\s*\[\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*,\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*\]\s*")


def parse_vectors(text: str) -> list[LatticeVector]:
    """Parse ``"(0,1),(-1,1),(0,-1)"``."""
    out = []
    pos = 0
    while True:
        m = _VEC.match(text, pos)
        if not m:
            raise ParseError("expected a vector '(x,y)'", len(text[:pos].encode()))
        out.append(LatticeVector(int(m.group(1)), int(m.group(2))))
        pos = m.end()
        if pos == len(text):
            return out
        if text[pos] != ",":
            raise ParseError("expected ',' between vectors", len(text[:pos].encode()))
        pos += 1


def parse_matrix_or_word(text: str) -> LatticeMatrix:
    """``"[[a,b],[c,d]]"`` or any word such as ``"ST^2ST^2"``."""
    m = _MAT.fullmatch(text)
    if m:
        return LatticeMatrix(*(int(g) for g in m.groups()))
    return eval_sl2(parse_word(text))


def _load(text: str) -> dict:
    try:
        obj = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.pos) from e
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if obj.get("format", FORMAT) != FORMAT:
        raise ParseError(f"unsupported format {obj.get('format')!r}")
    return obj


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def _vectors(obj) -> list[LatticeVector]:
    vs = obj.get("vectors")
    if not isinstance(vs, list):
        raise ParseError("missing 'vectors' list")
    out = []
    for v in vs:
        if not isinstance(v, list) or len(v) != 2:
            raise ParseError(f"vector must be [x, y], got {v!r}")
        out.append(LatticeVector(_int(v[0], "vector entry"), _int(v[1], "vector entry")))
    return out


def fan_vectors_from_json(text: str) -> list[LatticeVector]:
    return _vectors(_load(text))


def helix_args_from_json(text: str) -> tuple[int, int, list[LatticeVector]]:
    obj = _load(text)
    vs = _vectors(obj)
    d = _int(obj.get("d", len(vs)), "d")
    c = _int(obj.get("c"), "c")
    return d, c, vs


def polygon_args_from_json(text: str) -> tuple[list, list[Cut]]:
    obj = _load(text)
    verts = obj.get("vertices")
    if not isinstance(verts, list):
        raise ParseError("missing 'vertices' list")
    pts = []
    for p in verts:
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"vertex must be [x, y], got {p!r}")
        pts.append((_rational(p[0]), _rational(p[1])))
    cuts = []
    for c in obj.get("cuts", []):
        if not isinstance(c, dict) or "lambda" not in c or "eps" not in c:
            raise ParseError(f"cut must be {{'lambda': .., 'eps': ..}}, got {c!r}")
        cuts.append(Cut(_rational(c["lambda"]), _int(c["eps"], "eps")))
    return pts, cuts


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"not a rational number: {x!r}") from e
    raise ParseError(f"not a number: {x!r}")


def _vec_list(vs) -> list[list[int]]:
    return [[v[0], v[1]] for v in vs]


def fan_to_json(f: ToricFan, **extra) -> dict:
    return {"format": FORMAT, "vectors": _vec_list(f.vectors), **extra}


def helix_to_json(h: SemitoricHelix, **extra) -> dict:
    return {"format": FORMAT, "d": h.d, "c": h.c, "vectors": _vec_list(h.vectors), **extra}


def polygon_to_json(p: SemitoricPolygon, **extra) -> dict:
    return {
        "format": FORMAT,
        "vertices": [[str(x), str(y)] for x, y in p.vertices],
        "cuts": [{"lambda": str(c.lam), "eps": c.eps} for c in p.cuts],
        "corners": [str(k) for k in p.kinds],
        **extra,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=False)
