"""Words in the letters S and T.

A :class:`Word` is an element of the free group on S and T, stored as
syllables ``(letter, exponent)`` with adjacent equal letters fused.  The same
word can be read in three groups:

* SL2(Z), through :func:`eval_sl2` with S = [[0,-1],[1,0]], T = [[1,1],[0,1]];
* PSL2(Z), the quotient by -I;
* G = <S, T | STS = T^-1 S T^-1>, the preimage of SL2(Z) in the universal
  cover of SL2(R).  The kernel of G -> SL2(Z) is central and generated by S^4,
  and the winding homomorphism W takes S^4 to 1, so a word is determined in G
  by its matrix together with its winding number.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Sequence

from .errors import NotUnimodular, ParseError
from .lattice import (
    IDENTITY,
    LatticeMatrix,
    complete_basis,
    mat_inverse,
    mat_mul,
    primitive,
)

_S_POWERS = (
    LatticeMatrix(1, 0, 0, 1),
    LatticeMatrix(0, -1, 1, 0),
    LatticeMatrix(-1, 0, 0, -1),
    LatticeMatrix(0, 1, -1, 0),
)


def _fuse(pairs: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for letter, e in pairs:
        if e == 0:
            continue
        if out and out[-1][0] == letter:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([letter, e])
    return tuple((letter, e) for letter, e in out)


@dataclass(frozen=True)
class Word:
    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for letter, _ in self.syllables:
            if letter not in ("S", "T"):
                raise ValueError(f"unknown letter {letter!r}")
        object.__setattr__(self, "syllables", _fuse(self.syllables))

    @classmethod
    def parse(cls, text: str) -> Word:
        return parse_word(text)

    @classmethod
    def S(cls, k: int = 1) -> Word:
        return cls((("S", k),))

    @classmethod
    def T(cls, k: int = 1) -> Word:
        return cls((("T", k),))

    @classmethod
    def from_exponents(cls, a: Sequence[int], b: int = 0) -> Word:
        """The word T^b S T^a0 S T^a1 ... S T^a(d-1)."""
        pairs = [("T", b)]
        for x in a:
            pairs += [("S", 1), ("T", x)]
        return cls(tuple(pairs))

    def __mul__(self, other: Word) -> Word:
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def inverse(self) -> Word:
        return Word(tuple((letter, -e) for letter, e in reversed(self.syllables)))

    def __len__(self):
        return len(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __str__(self):
        if not self.syllables:
            return "I"
        return "".join(letter if e == 1 else f"{letter}^{e}" for letter, e in self.syllables)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def is_s_positive(self) -> bool:
        return all(e > 0 for letter, e in self.syllables if letter == "S")


@total_ordering
@dataclass(frozen=True)
class Twelfths:
    """An exact element of (1/12)Z, stored as its count of twelfths."""

    n: int

    def __add__(self, other):
        return Twelfths(self.n + other.n)

    def __sub__(self, other):
        return Twelfths(self.n - other.n)

    def __neg__(self):
        return Twelfths(-self.n)

    def __lt__(self, other):
        return self.n < other.n

    def as_fraction(self) -> Fraction:
        return Fraction(self.n, 12)

    def __str__(self):
        return f"{self.n}/12"


# --------------------------------------------------------------------------
# parsing

_INT = re.compile(r"\{\s*([+-]?\d+)\s*\}|([+-]?\d+)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def exponent(self) -> int:
        if self.peek() != "^":
            return 1
        self.pos += 1
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected integer exponent after '^'", self._offset())
        self.pos = m.end()
        return int(m.group(1) if m.group(1) is not None else m.group(2))

    def _offset(self):
        return len(self.text[: self.pos].encode("utf-8"))

    def sequence(self, closing: str) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        while True:
            ch = self.peek()
            if ch == closing:
                return out
            start = self._offset()
            if ch in ("S", "T"):
                self.pos += 1
                out.append((ch, self.exponent()))
            elif ch == "I":
                self.pos += 1
                self.exponent()
            elif ch == "(":
                self.pos += 1
                inner = self.sequence(")")
                if self.peek() != ")":
                    raise ParseError("unbalanced '('", start)
                self.pos += 1
                out.extend((Word(tuple(inner)) ** self.exponent()).syllables)
            elif ch == "":
                raise ParseError("unexpected end of input", start)
            else:
                raise ParseError(f"unexpected character {ch!r}", start)


def parse_word(text: str) -> Word:
    """Parse words such as ``"ST^-1ST^{-4}"``, ``"T^3 S S"`` or ``"(ST^2)^-1"``.

    ``I`` is the empty word; exponents may be written ``^-1`` or ``^{-1}``.
    """
    p = _Parser(text)
    syl = p.sequence("")
    if p.peek() != "":
        raise ParseError(f"unexpected character {p.peek()!r}", p._offset())
    return Word(tuple(syl))


# --------------------------------------------------------------------------
# evaluation


def letter_matrix(letter: str, e: int) -> LatticeMatrix:
    if letter == "S":
        return _S_POWERS[e % 4]
    return LatticeMatrix(1, e, 0, 1)


def eval_sl2(w: Word) -> LatticeMatrix:
    M = IDENTITY
    for letter, e in w.syllables:
        M = mat_mul(M, letter_matrix(letter, e))
    return M


def winding_W(w: Word) -> Twelfths:
    """W(S) = 3/12, W(T) = -1/12, extended homomorphically."""
    n = 0
    for letter, e in w.syllables:
        n += 3 * e if letter == "S" else -e
    return Twelfths(n)


def winding_of_exponents(a: Sequence[int], b: int = 0) -> Twelfths:
    return Twelfths(3 * len(a) - sum(a) - b)


def eq_sl2(u: Word, v: Word) -> bool:
    return eval_sl2(u) == eval_sl2(v)


def eq_psl2(u: Word, v: Word) -> bool:
    M, N = eval_sl2(u), eval_sl2(v)
    return M == N or M == -N


def eq_G(u: Word, v: Word) -> bool:
    return eval_sl2(u) == eval_sl2(v) and winding_W(u) == winding_W(v)


def invert(w: Word) -> Word:
    return w.inverse()


def concat(u: Word, v: Word) -> Word:
    return u * v


def conjugate(w: Word, by: Word) -> Word:
    """by^-1 * w * by (the shape of X^-1 T^c X)."""
    return by.inverse() * w * by


# --------------------------------------------------------------------------
# S-positive forms


@dataclass(frozen=True)
class SPositiveForm:
    """The word T^b S T^a0 S T^a1 ... S T^a(d-1); d = len(a) may be 0."""

    b: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def d(self):
        return len(self.a)

    def to_word(self) -> Word:
        return Word.from_exponents(self.a, self.b)

    def __str__(self):
        return str(self.to_word())


def to_s_positive(w: Word) -> SPositiveForm:
    """Rewrite w as T^b S T^a0 ... S T^a(d-1).

    Positive powers of S are spelled out exactly (S^3 = S T^0 S T^0 S), so
    S-positive words keep their value in the free group.  A negative power
    S^-k is replaced by S^(k mod 2), which only preserves the value in PSL2(Z).
    """
    b = 0
    a: list[int] = []
    for letter, e in w.syllables:
        if letter == "T":
            if a:
                a[-1] += e
            else:
                b += e
        else:
            k = e if e > 0 else (-e) % 2
            a.extend([0] * k)
    return SPositiveForm(b, tuple(a))


def matrix_to_word(M: LatticeMatrix) -> SPositiveForm:
    """Decompose M in SL2(Z) into an S-positive word evaluating to M exactly.

    Euclidean reduction on the first column with floor quotients:
    M = T^q S M' where q = floor(p / r) for first column (p, r).  When the
    lower-left entry reaches zero the remainder is +-T^q; a trailing S^2
    absorbs the sign.
    """
    if M.det != 1:
        raise NotUnimodular(f"det {M} = {M.det}")
    exps: list[int] = []
    S_inv = _S_POWERS[3]
    while M.c != 0:
        q = M.a // M.c
        exps.append(q)
        M = mat_mul(S_inv, mat_mul(LatticeMatrix(1, -q, 0, 1), M))
    # M = +-[[1, q], [0, 1]]
    sign = M.a
    exps.append(sign * M.b)
    b, a = exps[0], exps[1:]
    if sign < 0:
        a += [0, 0]
    return SPositiveForm(b, tuple(a))


def conjugator_to_Tc(M: LatticeMatrix, c: int) -> Optional[LatticeMatrix]:
    """Find X in SL2(Z) with X M X^-1 = T^c, or None if there is none.

    Such an X maps the fixed line of M to the x-axis, so its inverse has a
    primitive fixed vector u of M as first column.  Both signs of u are tried;
    the off-diagonal entry of the conjugated matrix does not depend on how u
    is completed to a basis.
    """
    if M.det != 1:
        raise NotUnimodular(f"det {M} = {M.det}")
    if M.trace != 2 or M == IDENTITY:
        return None
    if (M.a - 1, M.b) != (0, 0):
        u = primitive((M.b, 1 - M.a))
    else:
        u = primitive((M.d - 1, -M.c))
    for sign in (1, -1):
        P = complete_basis((sign * u[0], sign * u[1]))
        X = mat_inverse(P)
        if mat_mul(mat_mul(X, M), P) == LatticeMatrix(1, c, 0, 1):
            return X
    return None
