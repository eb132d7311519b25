"""SVG output.  Plain strings; coordinates are exact until the final format."""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .fans import ToricFan
from .helix import SemitoricHelix
from .polygon import CornerKind, SemitoricPolygon

SIZE = 400
PAD = 30


class _Canvas:
    def __init__(self, xs: Sequence, ys: Sequence):
        self.x0, self.x1 = floor(min(xs)) - 1, ceil(max(xs)) + 1
        self.y0, self.y1 = floor(min(ys)) - 1, ceil(max(ys)) + 1
        span = max(self.x1 - self.x0, self.y1 - self.y0)
        self.scale = Fraction(SIZE - 2 * PAD, span)
        self.parts: list[str] = []

    def px(self, x) -> str:
        return _num(PAD + (Fraction(x) - self.x0) * self.scale)

    def py(self, y) -> str:
        # SVG y grows downwards
        return _num(PAD + (self.y1 - Fraction(y)) * self.scale)

    def grid(self):
        for x in range(self.x0, self.x1 + 1):
            w = 1.2 if x == 0 else 0.4
            self.parts.append(
                f'<line x1="{self.px(x)}" y1="{self.py(self.y0)}" x2="{self.px(x)}" y2="{self.py(self.y1)}" '
                f'stroke="#bbb" stroke-width="{w}"/>'
            )
        for y in range(self.y0, self.y1 + 1):
            w = 1.2 if y == 0 else 0.4
            self.parts.append(
                f'<line x1="{self.px(self.x0)}" y1="{self.py(y)}" x2="{self.px(self.x1)}" y2="{self.py(y)}" '
                f'stroke="#bbb" stroke-width="{w}"/>'
            )

    def arrow(self, v, label: str, dashed: bool = False):
        style = ' stroke-dasharray="4,3"' if dashed else ""
        self.parts.append(
            f'<line x1="{self.px(0)}" y1="{self.py(0)}" x2="{self.px(v[0])}" y2="{self.py(v[1])}" '
            f'stroke="black" stroke-width="2" marker-end="url(#head)"{style}/>'
        )
        self.text(v[0], v[1], label)

    def text(self, x, y, s: str):
        self.parts.append(f'<text x="{self.px(x)}" y="{self.py(y)}" dx="4" dy="-4" font-size="12">{s}</text>')

    def svg(self, title: str) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE + 20}">\n'
            '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">'
            '<path d="M0,0 L6,3 L0,6 z"/></marker></defs>\n'
            f'<text x="{PAD}" y="{SIZE + 12}" font-size="13">{title}</text>\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


def _num(x: Fraction) -> str:
    return f"{float(x):.2f}"


def helix_svg(h: SemitoricHelix) -> str:
    vs = [h.vector(i) for i in range(h.d + 1)]
    cv = _Canvas([0] + [v.x for v in vs], [0] + [v.y for v in vs])
    cv.grid()
    for i, v in enumerate(vs[:-1]):
        cv.arrow(v, f"v{i}")
    cv.arrow(vs[-1], f"v{h.d} = T^{h.c} v0", dashed=True)
    return cv.svg(f"helix d={h.d} c={h.c}")


def fan_svg(f: ToricFan) -> str:
    cv = _Canvas([0] + [v.x for v in f.vectors], [0] + [v.y for v in f.vectors])
    cv.grid()
    for i, v in enumerate(f.vectors):
        cv.arrow(v, f"v{i}")
    return cv.svg(f"fan d={f.d}")


def polygon_svg(p: SemitoricPolygon) -> str:
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    cv = _Canvas(xs, ys)
    cv.grid()
    pts = " ".join(f"{cv.px(x)},{cv.py(y)}" for x, y in p.vertices)
    cv.parts.append(f'<polygon points="{pts}" fill="#dde8f5" stroke="black" stroke-width="1.5"/>')
    for cut in p.cuts:
        cv.parts.append(
            f'<line x1="{cv.px(cut.lam)}" y1="{cv.py(min(ys))}" x2="{cv.px(cut.lam)}" y2="{cv.py(max(ys))}" '
            f'stroke="red" stroke-width="1.2" stroke-dasharray="5,4"/>'
        )
    for (x, y), kind in zip(p.vertices, p.kinds):
        X, Y = cv.px(x), cv.py(y)
        if kind is CornerKind.FAKE:
            cv.parts.append(
                f'<path d="M{float(X) - 5:.2f},{float(Y) - 5:.2f} l10,10 m0,-10 l-10,10" stroke="red" stroke-width="2"/>'
            )
        else:
            cv.parts.append(f'<circle cx="{X}" cy="{Y}" r="4" fill="black"/>')
    return cv.svg(f"polygon with {len(p.cuts)} cut(s)")
