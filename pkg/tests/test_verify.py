import itertools
import random

from semitoric import fans as F
from semitoric import helix as H
from semitoric import verify as V
from semitoric.words import Word, eval_sl2

from helpers import minimal_fixtures, random_descendant


def test_report_lines():
    rep = V.Report("demo", checked=2, found=["a", "b"], expected=["a", "c"])
    lines = rep.lines()
    assert "missing: c" in lines and "unexpected: b" in lines and lines[-1] == "result: MISMATCH"
    assert V.Report("demo", found=["a"], expected=["a"]).ok


def test_fulton_small():
    rep = V.verify_fulton(depth=3, max_k=2)
    assert rep.ok, rep.lines()
    assert rep.found[:2] == ["CP2", "Square"]


def test_fulton_counts_concrete_fans():
    # CP2 has 3 one-step blowups, the square and F_2 have 4 each
    rep = V.verify_fulton(depth=1, max_k=2)
    assert rep.checked == 3 + 3 + 4 + 4


def test_model_labels():
    assert V._is_model_label("Hirzebruch(2)") and not V._is_model_label("Hirzebruch(1)")
    assert not V._is_model_label("Hirzebruch(-2)")


def test_minimal_words_small_matches_expected():
    rep = V.verify_minimal_words(max_d=4, max_abs=4, max_c=3)
    assert rep.ok, rep.lines()


def test_minimal_words_by_vectors():
    """Second route: build each integer list into vectors and test minimality directly."""
    found, _ = V.minimal_helix_words(3, 4, 2)
    direct = set()
    for c in (1, 2):
        for d in (1, 2, 3):
            for a in itertools.product(range(-4, 5), repeat=d):
                try:
                    h = H.helix_from_word(c, a)
                except Exception:
                    continue
                if H.helix_is_minimal(h):
                    direct.add(H.helix_canonical(h))
    assert direct == found


def test_expected_set_exclusions():
    exp = V.expected_minimal_words(3, 6, 1)
    # type (3) at k = +-2 is excluded
    assert (3, 1, F.least_rotation((0, -3, 1))) not in exp
    assert (3, 1, F.least_rotation((0, 1, -3))) not in exp
    exp5 = V.expected_minimal_words(4, 6, 3)
    assert (4, 3, F.least_rotation((0, -1, 3, 1))) not in exp5  # type (5) k = 1


def test_blowup_state_matches_vectors():
    rng = random.Random(81)
    base = minimal_fixtures()
    for _ in range(2_000):
        h = random_descendant(rng, base, 4)
        i = rng.randrange(h.d)
        a, y = V._blowup_state(H.associated_integers(h), tuple(v.y for v in h.vectors), i)
        g = H.helix_blowup(h, i)
        assert a == H.associated_integers(g)
        assert y == tuple(v.y for v in g.vectors)


def test_jmax_small():
    rep = V.verify_jmax(depth=3, cs=(2, 3), max_k=2, seed_len=2, seed_abs=3)
    assert rep.ok, rep.lines()
    assert rep.found == ["2:2:(-2,-2)"]


def test_jmax_by_vectors():
    """Second route: explicit helices, scanning vectors for +-(1,0)."""
    models = V.jmax_minimal_models((2, 3), 2, 2, 3)
    seen = {}
    level = {H.helix_canonical(h): h for h in models}
    seen.update(level)
    for _ in range(2):
        nxt = {}
        for h in level.values():
            for i in range(h.d):
                g = H.helix_blowup(h, i)
                k = H.helix_canonical(g)
                if k not in seen and k not in nxt:
                    nxt[k] = g
        seen.update(nxt)
        level = nxt
    lacking = sorted(H.canonical_text(k) for k, h in seen.items() if not H.contains_horizontal(h))
    assert lacking == ["2:2:(-2,-2)"]


def test_seed_matrices_are_in_seed_set():
    for A in V.seed_matrices(3, 3):
        assert H.type7_from_seed(2, A).d > 5


def test_winding_oracle():
    rep = V.verify_winding_oracle(samples=200, seed=3)
    assert rep.ok and rep.checked == 200


def test_random_fans_are_valid():
    rng = random.Random(82)
    for _ in range(200):
        f = V.random_fan(rng)
        F.fan_validate(f.vectors)


def test_type2_word_is_the_only_horizontal_free_minimal_word_with_c2():
    found, _ = V.minimal_helix_words(4, 4, 2)
    for d, c, a in found:
        h = H.helix_from_word(c, a)
        if c == 2 and not H.contains_horizontal(h):
            assert (d, a) == (2, (-2, -2))
    assert eval_sl2(Word.from_exponents((-2, -2))) == eval_sl2(Word.parse("ST^-2ST^-2"))
