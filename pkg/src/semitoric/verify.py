"""Brute-force verification suites behind ``semitoric verify``."""
from __future__ import annotations

import itertools
import re
import random
from dataclasses import dataclass, field
from typing import Iterable

from . import fans as F
from . import helix as H
from .lattice import LatticeMatrix, mat_mul, path_winding, t_power
from .words import Word, conjugator_to_Tc, eval_sl2, winding_of_exponents


@dataclass
class Report:
    suite: str
    checked: int = 0
    found: list[str] = field(default_factory=list)
    expected: list[str] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and self.found == self.expected

    def lines(self) -> list[str]:
        out = [f"suite: {self.suite}", f"checked: {self.checked}"]
        out += self.notes
        missing = sorted(set(self.expected) - set(self.found))
        extra = sorted(set(self.found) - set(self.expected))
        out.append(f"found: {len(self.found)}  expected: {len(self.expected)}")
        out += [f"missing: {x}" for x in missing]
        out += [f"unexpected: {x}" for x in extra]
        out += [f"problem: {p}" for p in self.problems]
        out.append("result: " + ("ok" if self.ok else "MISMATCH"))
        return out


# --------------------------------------------------------------------------
# Fulton


def fulton_seeds(max_k: int) -> list[F.ToricFan]:
    return [F.CP2, F.SQUARE] + [F.hirzebruch(k) for k in range(2, max_k + 1)]


def descendants(seeds: Iterable, depth: int, blowup, key) -> dict:
    """All objects reachable by at most ``depth`` blowups, keyed by ``key``."""
    level = {}
    for s in seeds:
        level.setdefault(key(s), s)
    seen = dict(level)
    for _ in range(depth):
        nxt = {}
        for obj in level.values():
            for i in range(obj.d):
                g = blowup(obj, i)
                k = key(g)
                if k not in seen and k not in nxt:
                    nxt[k] = g
        seen.update(nxt)
        level = nxt
    return seen


def model_label(cls: F.FanClass) -> str:
    # k and -k give the same fan up to SL2(Z)
    return f"Hirzebruch({abs(cls.k)})" if cls.name == "Hirzebruch" else cls.name


def _is_model_label(x: str) -> bool:
    if x in ("CP2", "Square"):
        return True
    m = re.fullmatch(r"Hirzebruch\((\d+)\)", x)
    return m is not None and int(m.group(1)) >= 2


def _label_order(x: str):
    m = re.fullmatch(r"Hirzebruch\((-?\d+)\)", x)
    return (1, int(m.group(1))) if m else (0, x)


def verify_fulton(depth: int = 5, max_k: int = 3) -> Report:
    """Every fan within ``depth`` blowups of a minimal model, in every
    blowdown order, comes down to CP2, the square or a Hirzebruch fan.

    The concrete fans (exact vector sequences) are all visited; the search
    over blowdown orders is shared between fans equal up to SL2(Z).
    """
    rep = Report("fulton")
    fans = descendants(fulton_seeds(max_k), depth, F.fan_blowup, lambda f: f.vectors)
    memo: dict = {}

    def reach(f: F.ToricFan) -> frozenset:
        key = F.fan_key(f)
        if key not in memo:
            sites = [i for i in range(f.d) if F.is_blowdown_site(f, i)]
            if sites:
                memo[key] = frozenset().union(*(reach(F.fan_blowdown(f, i)) for i in sites))
            else:
                memo[key] = frozenset([model_label(F.fan_classify_minimal(f))])
        return memo[key]

    labels: set[str] = set()
    classes: set = set()
    for f in fans.values():
        rep.checked += 1
        try:
            F.fan_validate(f.vectors)
            models = reach(f)
            greedy, _ = F.fan_minimize(f)
            g = model_label(F.fan_classify_minimal(greedy))
        except Exception as e:  # report, do not stop
            rep.problems.append(f"{f}: {e!r}")
            continue
        if g not in models:
            rep.problems.append(f"{f}: greedy model {g} not among {sorted(models)}")
        labels |= models
        classes.add(F.fan_key(f))
    rep.found = sorted(labels, key=_label_order)
    rep.expected = sorted((x for x in labels if _is_model_label(x)), key=_label_order)
    rep.notes.append(f"fans: {len(fans)} concrete, {len(classes)} up to SL2(Z) and relabelling")
    rep.notes.append("models reached: " + ", ".join(rep.found))
    return rep


# --------------------------------------------------------------------------
# minimal words


def expected_minimal_words(max_d: int, max_abs: int, max_c: int) -> set:
    """Canonical keys of the listed types (1)-(6) whose integers fit the bounds."""
    out = set()

    def add(c, a):
        if len(a) <= max_d and all(abs(x) <= max_abs for x in a):
            out.add((len(a), c, F.least_rotation(a)))

    r = range(-max_abs - max_c - 2, max_abs + max_c + 3)
    for c in range(1, max_c + 1):
        if c == 1:
            add(1, (-1, -4))
            for a in r:
                if a not in (1, -3):
                    add(1, (0, a, -a - 2))
        if c == 2:
            add(2, (-2, -2))
        if c != 2:
            add(c, (-1, -1, c - 1))
        for a in r:
            if c != 1 and a not in (0, 1, -1):
                add(c, (0, a, c, -a))
            if a not in (1, c - 1):
                add(c, (0, a, 0, c - a))
    return out


def minimal_helix_words(max_d: int, max_abs: int, max_c: int) -> tuple[set, int]:
    """Brute force: integer lists with W = 1 - c/12, conjugate to T^c and no entry 1."""
    found = set()
    tried = 0
    vals = [x for x in range(-max_abs, max_abs + 1) if x != 1]
    for c in range(1, max_c + 1):
        for d in range(1, max_d + 1):
            total = 3 * d - 12 + c  # W = 1 - c/12 fixes the sum
            for head in itertools.product(vals, repeat=d - 1):
                last = total - sum(head)
                if last == 1 or abs(last) > max_abs:
                    continue
                a = head + (last,)
                tried += 1
                M = eval_sl2(Word.from_exponents(a))
                if conjugator_to_Tc(M, c) is not None:
                    found.add((d, c, F.least_rotation(a)))
    return found, tried


def verify_minimal_words(max_d: int = 5, max_abs: int = 6, max_c: int = 3) -> Report:
    rep = Report("minimal-words")
    found, tried = minimal_helix_words(max_d, max_abs, max_c)
    rep.checked = tried
    for d, c, a in sorted(found):
        h = H.helix_from_word(c, a)
        try:
            cls = H.helix_classify_minimal(h)
        except Exception as e:
            rep.problems.append(f"{H.canonical_text((d, c, a))}: {e!r}")
            continue
        if cls.type == 3 and cls.k in (2, -2) or cls.type == 5 and cls.k in (0, 1, -1):
            rep.problems.append(f"{H.canonical_text((d, c, a))}: excluded parameter {cls}")
        if cls.type == 6 and cls.k in (-1, 1 - c):
            rep.problems.append(f"{H.canonical_text((d, c, a))}: excluded parameter {cls}")
    rep.found = sorted(H.canonical_text(k) for k in found)
    rep.expected = sorted(H.canonical_text(k) for k in expected_minimal_words(max_d, max_abs, max_c))
    return rep


# --------------------------------------------------------------------------
# Jmax


def seed_matrices(max_len: int, max_abs: int) -> list[LatticeMatrix]:
    """Seeds A0 whose standard form ST^a0 ... ST^a(l-1) has 2 <= l <= max_len
    and entries bounded by max_abs."""
    out = []
    for L in range(2, max_len + 1):
        for a in itertools.product(range(-max_abs, max_abs + 1), repeat=L):
            if all(x > 1 for x in a[:-1]) and a[-1] not in (0, 1):
                out.append(eval_sl2(Word.from_exponents(a)))
    return out


def jmax_minimal_models(cs: Iterable[int], max_k: int, seed_len: int, seed_abs: int) -> list[H.SemitoricHelix]:
    models = []
    for c in cs:
        if c == 1:
            models.append(H.TYPE1)
            models += [H.type3(k) for k in range(-max_k, max_k + 1) if k not in (2, -2)]
        if c == 2:
            models.append(H.TYPE2)
        if c != 2:
            models.append(H.type4(c))
        if c != 1:
            models += [H.type5(k, c) for k in range(-max_k, max_k + 1) if k not in (0, 1, -1)]
        models += [H.type6(k, c) for k in range(-max_k, max_k + 1) if k not in (-1, 1 - c)]
        models += [H.type7_from_seed(c, A) for A in seed_matrices(seed_len, seed_abs)]
    return models


def _blowup_state(a: tuple, y: tuple, i: int) -> tuple[tuple, tuple]:
    """Blow up between v_i and v_(i+1), acting on integers and y-components.

    The integers on either side of the new vector grow by one and a 1 is
    inserted between them; the new y-component is the sum of its
    neighbours' (T fixes y, so v_d has the y-component of v_0).
    """
    a2 = list(a)
    a2[i - 1] += 1  # i = 0 wraps to the last entry
    a2[i] += 1
    a2.insert(i, 1)
    y2 = y[: i + 1] + (y[i] + y[(i + 1) % len(y)],) + y[i + 1 :]
    return tuple(a2), y2


def verify_jmax(depth: int = 5, cs=(2, 3), max_k: int = 4, seed_len: int = 3, seed_abs: int = 4) -> Report:
    """Helices with c in ``cs`` lacking +-(1,0), within ``depth`` blowups of a
    minimal model: all of them must be the minimal type-(2) helix."""
    rep = Report("jmax")
    models = jmax_minimal_models(cs, max_k, seed_len, seed_abs)
    level = {}
    for h in models:
        a = H.associated_integers(h)
        key = (h.c, F.least_rotation(a))
        level.setdefault(key, (h.c, a, tuple(v.y for v in h.vectors)))
    seen = dict(level)
    for _ in range(depth):
        nxt = {}
        for c, a, y in level.values():
            for i in range(len(a)):
                a2, y2 = _blowup_state(a, y, i)
                key = (c, F.least_rotation(a2))
                if key not in seen and key not in nxt:
                    nxt[key] = (c, a2, y2)
        seen.update(nxt)
        level = nxt
    rep.checked = len(seen)
    for (c, rot), (_, a, y) in sorted(seen.items()):
        if 0 not in y:
            rep.found.append(H.canonical_text((len(a), c, rot)))
    rep.expected = [H.canonical_text(H.helix_canonical(H.TYPE2))] if 2 in cs else []
    rep.notes.append(f"minimal models: {len(models)}")
    return rep


# --------------------------------------------------------------------------
# winding oracle


def random_fan(rng: random.Random, max_blowups: int = 8, max_k: int = 5) -> F.ToricFan:
    f = rng.choice([F.CP2, F.SQUARE] + [F.hirzebruch(k) for k in range(-max_k, max_k + 1) if abs(k) > 1])
    for _ in range(rng.randint(0, max_blowups)):
        f = F.fan_blowup(f, rng.randrange(f.d))
    M = random_sl2(rng, 6)
    r = rng.randrange(f.d)
    return F.ToricFan(tuple(M @ f[r + j] for j in range(f.d)))


def random_sl2(rng: random.Random, n: int) -> LatticeMatrix:
    M = LatticeMatrix(1, 0, 0, 1)
    for _ in range(n):
        M = mat_mul(M, t_power(rng.randint(-3, 3)) if rng.random() < 0.5 else LatticeMatrix(0, -1, 1, 0))
    return M


def verify_winding_oracle(samples: int = 1000, seed: int = 0) -> Report:
    """W of the fan word against the geometric winding of the fan loop."""
    rep = Report("winding-oracle")
    rng = random.Random(seed)
    for _ in range(samples):
        f = random_fan(rng)
        rep.checked += 1
        W = winding_of_exponents(F.fan_integers(f))
        geo = path_winding(f.vectors, closed=True)
        if W.as_fraction() != geo:
            rep.problems.append(f"{f}: W = {W}, winding = {geo}")
    return rep


SUITES = {
    "fulton": verify_fulton,
    "minimal-words": verify_minimal_words,
    "jmax": verify_jmax,
    "winding-oracle": verify_winding_oracle,
}
