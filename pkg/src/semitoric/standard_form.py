"""Rewriting S-positive words to the unique PSL2(Z) standard form.

An S-positive word T^b S T^a0 ... S T^a(d-1) is held as its list of T
exponents ``[b, a0, ..., a(d-1)]``; the letters S sit between consecutive
entries, so every entry except the first and last is an *interior* exponent,
flanked by two S.  The three rules then read:

====  ==================================  =====================================
R1    S T^0 S      -> I                    interior 0 removed, neighbours merge
R2    S T^-n S     -> (TST)^n,  n > 0      interior -n becomes n-1 twos, +1 on
                                           each neighbour
R3    S T S        -> T^-1 S T^-1          interior 1 removed, -1 on neighbours
====  ==================================  =====================================

R1 and R2 lower W by 1/2, R3 keeps W and removes one S, so rewriting stops.
A word with no rule left has every interior exponent > 1, which is exactly the
standard form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .lattice import LatticeMatrix
from .words import SPositiveForm, Word, matrix_to_word, to_s_positive


@dataclass(frozen=True)
class StandardForm(SPositiveForm):
    """An S-positive form whose exponents a0 .. a(d-2) all exceed 1."""


@dataclass
class Step:
    rule: str
    position: int  # index of the rewritten interior exponent

    def __str__(self):
        return f"{self.rule}@{self.position}"


@dataclass
class Reduction:
    result: StandardForm
    trace: list[Step] = field(default_factory=list)


def is_standard(w: SPositiveForm) -> bool:
    return all(x > 1 for x in w.a[:-1])


def _find(exps: list[int], pred) -> Optional[int]:
    for i in range(1, len(exps) - 1):
        if pred(exps[i]):
            return i
    return None


def reduce_exponents(exps: list[int], trace: Optional[list] = None) -> list[int]:
    """Rewrite an exponent list ``[b, a0, ..., a(d-1)]`` in place."""
    while True:
        i = _find(exps, lambda x: x == 0)
        if i is not None:
            exps[i - 1 : i + 2] = [exps[i - 1] + exps[i + 1]]
            rule = "R1"
        else:
            i = _find(exps, lambda x: x < 0)
            if i is not None:
                n = -exps[i]
                exps[i - 1 : i + 2] = [exps[i - 1] + 1] + [2] * (n - 1) + [exps[i + 1] + 1]
                rule = "R2"
            else:
                i = _find(exps, lambda x: x == 1)
                if i is None:
                    return exps
                exps[i - 1 : i + 2] = [exps[i - 1] - 1, exps[i + 1] - 1]
                rule = "R3"
        if trace is not None:
            trace.append(Step(rule, i))


def reduce(w: SPositiveForm, with_trace: bool = False):
    """Standard form of an S-positive word.

    Strategy: R1 before R2 before R3, each at its leftmost site.  Returns a
    :class:`StandardForm`, or a :class:`Reduction` carrying the rule log when
    ``with_trace`` is set.
    """
    trace: Optional[list] = [] if with_trace else None
    exps = reduce_exponents([w.b, *w.a], trace)
    sf = StandardForm(exps[0], tuple(exps[1:]))
    if with_trace:
        return Reduction(sf, trace)
    return sf


def standard_form_of_word(w: Word) -> StandardForm:
    """Standard form of the PSL2(Z) element represented by any word."""
    return reduce(to_s_positive(w))


def standard_form_of_matrix(M: LatticeMatrix) -> StandardForm:
    return reduce(matrix_to_word(M))


def is_t_power(sf: SPositiveForm) -> bool:
    return not sf.a


def is_t_s_t(sf: SPositiveForm) -> bool:
    """Whether the element is T^k S T^a for some k, a."""
    return len(sf.a) == 1
