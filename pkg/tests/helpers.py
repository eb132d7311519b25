"""Random generators shared by the tests."""
import random

from semitoric import fans as F
from semitoric import helix as H
from semitoric.lattice import LatticeMatrix, t_power
from semitoric.words import Word, eval_sl2


def random_word(rng: random.Random, max_syllables: int = 8, max_exp: int = 5) -> Word:
    n = rng.randint(0, max_syllables)
    return Word(tuple((rng.choice("ST"), rng.randint(-max_exp, max_exp)) for _ in range(n)))


def random_unimodular(rng: random.Random, steps: int = 10) -> LatticeMatrix:
    return eval_sl2(random_word(rng, steps, 4))


def minimal_fixtures() -> list:
    fixtures = [H.TYPE1, H.TYPE2, H.type3(1), H.type3(-3), H.type3(0), H.type4(1), H.type4(3)]
    fixtures += [H.type5(3, 2), H.type5(-2, 3), H.type6(2, 3), H.type6(-4, 1), H.type6(0, 2)]
    fixtures += [
        H.type7_from_seed(2, eval_sl2(Word.parse("ST^2ST^2"))),
        H.type7_from_seed(1, eval_sl2(Word.parse("ST^2ST^2"))),
        H.type7_from_seed(3, eval_sl2(Word.parse("ST^3ST^4ST^-2"))),
    ]
    return fixtures


def random_descendant(rng: random.Random, base, max_blowups: int = 6):
    h = rng.choice(base)
    for _ in range(rng.randint(0, max_blowups)):
        h = H.helix_blowup(h, rng.randrange(h.d))
    return h


def random_fan(rng: random.Random, max_blowups: int = 8) -> F.ToricFan:
    f = rng.choice([F.CP2, F.SQUARE, F.hirzebruch(2), F.hirzebruch(-3), F.hirzebruch(5)])
    for _ in range(rng.randint(0, max_blowups)):
        f = F.fan_blowup(f, rng.randrange(f.d))
    return f


def helix_variant(rng: random.Random, h):
    """The same helix up to T^k, index shift and sign."""
    g = h.transformed(t_power(rng.randint(-4, 4))).shifted(rng.randint(-7, 7))
    return -g if rng.random() < 0.5 else g
