"""Semitoric helices.

A helix of length d and complexity c is a bi-infinite sequence of primitive
vectors with det(v_i, v_(i+1)) = 1 and v_(i+d) = T^c v_i.  It is stored as
the window v_0 .. v_(d-1); everything else follows from the periodicity law.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BadDeterminant,
    BadWinding,
    HelixEquationViolated,
    IndexOutOfRange,
    MinimumLength,
    NotAHelixWord,
    NotBlowdownSite,
    NotMinimal,
    NotPrimitive,
    SeamViolation,
    SeedNotInS,
    SemitoricError,
    Unclassifiable,
)
from .fans import least_rotation
from .lattice import (
    LatticeMatrix,
    LatticeVector,
    det,
    is_primitive,
    mat_inverse,
    mat_mul,
    path_winding,
    shear,
    t_power,
)
from .standard_form import StandardForm, standard_form_of_matrix
from .words import (
    Twelfths,
    Word,
    conjugator_to_Tc,
    eq_G,
    eval_sl2,
    matrix_to_word,
    to_s_positive,
    winding_of_exponents,
)

__all__ = [
    "SemitoricHelix",
    "HelixClass",
    "helix_validate",
    "associated_integers",
    "associated_integers_by_matrix",
    "helix_word",
    "helix_from_word",
    "helix_blowup",
    "helix_blowdown",
    "helix_is_minimal",
    "helix_minimize",
    "reachable_minimal_helices",
    "helix_canonical",
    "canonical_text",
    "helix_classify_minimal",
    "type7_from_seed",
    "in_seed_set",
    "path_winding",
    "contains_horizontal",
]


@dataclass(frozen=True)
class SemitoricHelix:
    d: int
    c: int
    vectors: tuple[LatticeVector, ...]

    def vector(self, i: int) -> LatticeVector:
        """v_i for any integer i, using v_(i+d) = T^c v_i."""
        q, r = divmod(i, self.d)
        return shear(self.vectors[r], q * self.c)

    def matrix(self, i: int = 0) -> LatticeMatrix:
        """[v_i, v_(i+1)]."""
        return LatticeMatrix.from_columns(self.vector(i), self.vector(i + 1))

    def shifted(self, k: int) -> SemitoricHelix:
        """The same helix read from the window starting at v_k."""
        return SemitoricHelix(self.d, self.c, tuple(self.vector(k + j) for j in range(self.d)))

    def transformed(self, M: LatticeMatrix) -> SemitoricHelix:
        """Apply M to every vector; only M = +-T^k gives a helix again."""
        return SemitoricHelix(self.d, self.c, tuple(M @ v for v in self.vectors))

    def __neg__(self):
        return SemitoricHelix(self.d, self.c, tuple(-v for v in self.vectors))

    def __str__(self):
        vs = ",".join(str(v) for v in self.vectors)
        return f"helix(d={self.d}, c={self.c}, {vs})"


def helix_validate(d: int, c: int, vectors) -> SemitoricHelix:
    """Validate a window and return the helix, or raise on the first violation.

    Checked in order: window length, primitivity, determinants along the
    window, the seam det(v_(d-1), T^c v_0), and the winding condition
    W(ST^a0 ... ST^a(d-1)) = 1 - c/12 that singles out counter-clockwise
    helices among the unit-determinant sequences.
    """
    vs = tuple(LatticeVector(*v) for v in vectors)
    if d < 1 or len(vs) != d:
        raise MinimumLength(f"expected d = {d} >= 1 vectors, got {len(vs)}")
    if c < 0:
        raise SemitoricError(f"complexity must be nonnegative, got {c}")
    for i, v in enumerate(vs):
        if not is_primitive(v):
            raise NotPrimitive(i, f"{v} is not primitive")
    for i in range(d - 1):
        D = det(vs[i], vs[i + 1])
        if D != 1:
            raise BadDeterminant(i, f"det(v{i}, v{i + 1}) = {D}")
    D = det(vs[-1], shear(vs[0], c))
    if D != 1:
        raise SeamViolation(f"det(v{d - 1}, T^{c} v0) = {D}")
    h = SemitoricHelix(d, c, vs)
    W = winding_of_exponents(associated_integers(h))
    if W != Twelfths(12 - c):
        raise BadWinding(f"W = {W}, expected {12 - c}/12")
    return h


def associated_integers(h: SemitoricHelix) -> tuple[int, ...]:
    """a_i = det(v_i, v_(i+2)), the unique solution of v_(i+2) = a_i v_(i+1) - v_i."""
    return tuple(det(h.vector(i), h.vector(i + 2)) for i in range(h.d))


def associated_integers_by_matrix(h: SemitoricHelix) -> tuple[int, ...]:
    """Same integers read off [v_i, v_(i+1)]^-1 [v_(i+1), v_(i+2)] = S T^(a_i)."""
    out = []
    for i in range(h.d):
        M = mat_mul(mat_inverse(h.matrix(i)), h.matrix(i + 1))
        if (M.a, M.b, M.c) != (0, -1, 1):
            raise BadDeterminant(i, f"transition matrix {M} is not of the form ST^a")
        out.append(M.d)
    return tuple(out)


def helix_word(h: SemitoricHelix) -> Word:
    """ST^a0 ... ST^a(d-1), checked against S^4 X^-1 T^c X with X = [v0, v1]."""
    w = Word.from_exponents(associated_integers(h))
    X = matrix_to_word(h.matrix(0)).to_word()
    rhs = Word.S(4) * X.inverse() * Word.T(h.c) * X
    if not eq_G(w, rhs):
        raise HelixEquationViolated(f"{w} differs from {rhs} in G")
    return w


def _build(c: int, a: Sequence[int], A0: LatticeMatrix) -> SemitoricHelix:
    v0, v1 = A0.columns()
    vs = [v0, v1]
    for i in range(len(a) - 2):
        vs.append(vs[-1].scale(a[i]) - vs[-2])
    return helix_validate(len(a), c, vs[: len(a)])


def helix_from_word(c: int, a: Sequence[int], seed: Optional[LatticeMatrix] = None) -> SemitoricHelix:
    """The helix whose associated integers are a, with [v0, v1] = seed if given."""
    a = tuple(a)
    if not a:
        raise MinimumLength("need at least one integer")
    W = winding_of_exponents(a)
    if W != Twelfths(12 - c):
        raise NotAHelixWord(NotAHelixWord.WRONG_WINDING, f"W = {W}, need {12 - c}/12")
    M = eval_sl2(Word.from_exponents(a))
    target = mat_mul(mat_mul(mat_inverse(seed), t_power(c)), seed) if seed is not None else None
    if seed is not None:
        if M != target:
            raise NotAHelixWord(NotAHelixWord.SEED_MISMATCH, f"word is {M}, seed gives {target}")
        A0 = seed
    elif c == 0:
        if M != LatticeMatrix(1, 0, 0, 1):
            raise NotAHelixWord(NotAHelixWord.NOT_CONJUGATE, f"{M} is not the identity")
        A0 = LatticeMatrix(1, 0, 0, 1)
    else:
        A0 = conjugator_to_Tc(M, c)
        if A0 is None:
            raise NotAHelixWord(NotAHelixWord.NOT_CONJUGATE, f"{M} is not conjugate to T^{c}")
    return _build(c, a, A0)


# --------------------------------------------------------------------------
# blowups


def helix_blowup(h: SemitoricHelix, i: int) -> SemitoricHelix:
    """Insert v_i + v_(i+1) after v_i (and all its T^c translates)."""
    if not 0 <= i < h.d:
        raise IndexOutOfRange(i, f"helix has length {h.d}")
    vs = list(h.vectors)
    vs.insert(i + 1, h.vector(i) + h.vector(i + 1))
    return SemitoricHelix(h.d + 1, h.c, tuple(vs))


def is_blowdown_site(h: SemitoricHelix, i: int) -> bool:
    return h.vector(i) == h.vector(i - 1) + h.vector(i + 1)


def helix_blowdown(h: SemitoricHelix, i: int) -> SemitoricHelix:
    if not 0 <= i < h.d:
        raise IndexOutOfRange(i, f"helix has length {h.d}")
    if not is_blowdown_site(h, i):
        raise NotBlowdownSite(i, f"v{i} = {h.vector(i)} is not v{i - 1} + v{i + 1}")
    if h.d == 1:
        raise MinimumLength("cannot blow down a helix of length 1")
    return SemitoricHelix(h.d - 1, h.c, h.vectors[:i] + h.vectors[i + 1 :])


def helix_is_minimal(h: SemitoricHelix) -> bool:
    return not any(is_blowdown_site(h, i) for i in range(h.d))


def helix_minimize(h: SemitoricHelix) -> tuple[SemitoricHelix, list[int]]:
    trace: list[int] = []
    while True:
        site = next((i for i in range(h.d) if is_blowdown_site(h, i)), None)
        if site is None:
            return h, trace
        h = helix_blowdown(h, site)
        trace.append(site)


def reachable_minimal_helices(h: SemitoricHelix, max_d: int = 10) -> list[str]:
    """Canonical keys of all minimal helices reachable by blowdowns, sorted."""
    if h.d > max_d:
        raise ValueError(f"exhaustive mode is limited to d <= {max_d}")
    seen: set = set()
    found: set[str] = set()
    stack = [h]
    while stack:
        g = stack.pop()
        key = helix_canonical(g)
        if key in seen:
            continue
        seen.add(key)
        sites = [i for i in range(g.d) if is_blowdown_site(g, i)]
        if not sites:
            found.add(canonical_text(key))
        stack.extend(helix_blowdown(g, i) for i in sites)
    return sorted(found)


# --------------------------------------------------------------------------
# equivalence


def helix_canonical(h: SemitoricHelix) -> tuple[int, int, tuple[int, ...]]:
    return h.d, h.c, least_rotation(associated_integers(h))


def canonical_text(key) -> str:
    d, c, a = key
    return f"{d}:{c}:({','.join(str(x) for x in a)})"


def helix_equivalent(h: SemitoricHelix, g: SemitoricHelix) -> bool:
    return helix_canonical(h) == helix_canonical(g)


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class HelixClass:
    type: int
    k: Optional[int] = None
    A0: Optional[StandardForm] = None
    c: Optional[int] = None

    def __str__(self):
        if self.type == 7:
            return f"Type7(A0={self.A0}, c={self.c})"
        if self.k is not None:
            return f"Type{self.type}(k={self.k})"
        return f"Type{self.type}"


def _rotations(a: tuple[int, ...]):
    return [a[r:] + a[:r] for r in range(len(a))]


def _small_type(a: tuple[int, ...], c: int) -> Optional[HelixClass]:
    d = len(a)
    rots = _rotations(a)
    if d == 2:
        if c == 1 and (-1, -4) in rots:
            return HelixClass(1)
        if c == 2 and (-2, -2) in rots:
            return HelixClass(2)
    if d == 3:
        if c == 1:
            ks = [-x - 1 for z, x, y in rots if z == 0 and y == -x - 2 and -x - 1 not in (2, -2)]
            if ks:
                return HelixClass(3, max(ks))
        if c != 2 and (-1, -1, c - 1) in rots:
            return HelixClass(4)
    if d == 4:
        if c != 1:
            ks = [-x for z, x, y, w in rots if z == 0 and y == c and w == -x and -x not in (0, 1, -1)]
            if ks:
                return HelixClass(5, max(ks))
        ks = [-x for z, x, y, w in rots if z == 0 and y == 0 and w == c - x and -x not in (-1, 1 - c)]
        if ks:
            return HelixClass(6, max(ks))
    return None


def in_seed_set(sf: StandardForm) -> bool:
    """Structural membership test for the type-(7) seed set."""
    return sf.b == 0 and len(sf.a) >= 2 and sf.a[-1] not in (0, 1)


def helix_classify_minimal(h: SemitoricHelix) -> HelixClass:
    """Type of a minimal helix with c > 0.

    Types (1)-(6) are read off the cyclic integer list.  Where two patterns
    describe the same helix the lower type number wins, and within a type the
    larger parameter k.  Type (7) is recognised by rebuilding the helix from
    each candidate seed [v_r, v_(r+1)] with a_r = 0.
    """
    if h.c <= 0:
        raise SemitoricError("classification needs c > 0; use the fan classifier for c = 0")
    if not helix_is_minimal(h):
        raise NotMinimal(f"{h} admits a blowdown")
    a = associated_integers(h)
    small = _small_type(a, h.c)
    if small is not None:
        return small
    if h.d > 5:
        key = helix_canonical(h)
        for r in range(h.d):
            if a[r] != 0:
                continue
            sf = standard_form_of_matrix(h.matrix(r))
            A = mat_mul(t_power(-sf.b), h.matrix(r))
            seed_sf = StandardForm(0, sf.a)
            if not in_seed_set(seed_sf):
                continue
            try:
                g = type7_from_seed(h.c, A)
            except SemitoricError:
                continue
            if helix_canonical(g) == key:
                return HelixClass(7, A0=seed_sf, c=h.c)
    raise Unclassifiable(f"minimal helix {h} with integers {a} matches no type")


def type7_word(c: int, A0: LatticeMatrix) -> Word:
    """S^2 (std form of A0^-1) T^c (std form of A0)."""
    return (
        Word.S(2)
        * standard_form_of_matrix(mat_inverse(A0)).to_word()
        * Word.T(c)
        * standard_form_of_matrix(A0).to_word()
    )


def type7_from_seed(c: int, A0: LatticeMatrix) -> SemitoricHelix:
    """The minimal type-(7) helix with complexity c and [v0, v1] = A0."""
    if c <= 0:
        raise SeedNotInS(f"complexity must be positive, got {c}")
    if A0.det != 1:
        raise SeedNotInS(f"{A0} is not in SL2(Z)")
    sf = standard_form_of_matrix(A0)
    if not in_seed_set(sf):
        raise SeedNotInS(f"standard form {sf} needs b = 0, at least two S and last exponent not 0 or 1")
    sp = to_s_positive(type7_word(c, A0))
    # the word starts with S, so sp.b == 0
    try:
        h = helix_from_word(c, sp.a, seed=A0)
    except NotAHelixWord as e:
        raise SeedNotInS(f"seed {A0} does not give a helix: {e}") from e
    if not helix_is_minimal(h) or h.d <= 5:
        raise SeedNotInS(f"seed {A0} gives a helix of length {h.d} that is not minimal of type (7)")
    return h


# --------------------------------------------------------------------------


def contains_horizontal(h: SemitoricHelix) -> bool:
    """Whether some v_i, i in Z, is +-(1,0).

    T fixes y-components, so it is enough to scan one window for y = 0;
    a primitive vector with y = 0 is +-(1,0).
    """
    return any(v.y == 0 for v in h.vectors)


# reference helices
TYPE1 = SemitoricHelix(2, 1, (LatticeVector(0, 1), LatticeVector(-1, -2)))
TYPE2 = SemitoricHelix(2, 2, (LatticeVector(0, 1), LatticeVector(-1, -1)))


def type3(k: int) -> SemitoricHelix:
    return SemitoricHelix(3, 1, (LatticeVector(0, 1), LatticeVector(-1, k), LatticeVector(0, -1)))


def type4(c: int) -> SemitoricHelix:
    return SemitoricHelix(3, c, (LatticeVector(1, 0), LatticeVector(0, 1), LatticeVector(-1, -1)))


def type5(k: int, c: int) -> SemitoricHelix:
    return SemitoricHelix(
        4, c, (LatticeVector(1, 0), LatticeVector(0, 1), LatticeVector(-1, k), LatticeVector(0, -1))
    )


def type6(k: int, c: int) -> SemitoricHelix:
    return SemitoricHelix(
        4, c, (LatticeVector(1, 0), LatticeVector(0, 1), LatticeVector(-1, 0), LatticeVector(k, -1))
    )
