import random

from g2crystal import g2
from g2crystal.cartan import from_classical_pair


def test_fundamental_graph():
    graph = g2.fundamental()
    assert graph[1] == {1: 2, 4: 5, 6: 8, 8: -6, -5: -4, -2: -1}
    assert graph[2] == {2: 3, 3: 4, 4: 6, 5: 7, 7: -5, -6: -4, -4: -3, -3: -2}
    assert g2.apply("f", 1, (1,)) == (2,)
    assert g2.apply("f", 2, (3,)) == (4,)
    assert len(g2.LETTERS) == 14


def test_dim_formula():
    assert [g2.dim(n) for n in range(6)] == [1, 14, 77, 273, 748, 1729]


def test_enumeration_matches_closure():
    for n in range(4):
        assert set(g2.enumerate_tableaux(n)) == g2.closure_from_highest(n)


def test_printed_constraints_needed_correction():
    # the two weight-zero-letter constraints must include 0_1, otherwise
    # words such as [3, 0_1] slip through and the count at n=2 is 81
    assert not g2.is_valid_word((3, 7))
    assert not g2.is_valid_word((4, 7))
    assert not g2.is_valid_word((7, -4))
    assert not g2.is_valid_word((7, -3))
    assert g2.is_valid_word((3, 8))
    assert g2.is_valid_word((6, 8))
    assert not g2.is_valid_word((6, 7))
    assert not g2.is_valid_word((7, -6))


def test_letter_words_examples():
    assert g2.EP1[6] == (0, 2)   # color-1 word of 6 is two pluses
    assert g2.EP2[2] == (0, 3)   # color-2 word of 2 is three pluses
    assert g2.EP1[8] == (1, 1)
    assert g2.EP2[-6] == (0, 3)


def test_apply_examples():
    assert g2.apply("f", 1, (6,)) == (8,)
    for n in range(1, 4):
        assert g2.apply("e", 1, (1,) * n) is None
        assert g2.apply("e", 2, (1,) * n) is None


def test_inverse_pairing():
    for n in range(4):
        for w in g2.enumerate_tableaux(n):
            for i in (1, 2):
                img = g2.apply("f", i, w)
                if img is not None:
                    assert g2.apply("e", i, img) == w
                img = g2.apply("e", i, w)
                if img is not None:
                    assert g2.apply("f", i, img) == w


def test_weight_shift_and_phi_eps():
    for n in range(4):
        for w in g2.enumerate_tableaux(n):
            wt = g2.weight(w)
            assert g2.phi(1, w) - g2.eps(1, w) == wt.m1
            assert g2.phi(2, w) - g2.eps(2, w) == wt.m2
            for i, shift in ((1, (2, -3)), (2, (-1, 2))):
                img = g2.apply("f", i, w)
                if img is not None:
                    wt2 = g2.weight(img)
                    assert (wt2.m1, wt2.m2) == (wt.m1 - shift[0], wt.m2 - shift[1])


def test_unique_source():
    for n in range(4):
        sources = [w for w in g2.enumerate_tableaux(n)
                   if g2.eps(1, w) == 0 and g2.eps(2, w) == 0]
        assert sources == [(1,) * n]


def test_strips_closed_forms():
    assert g2.strip("C", 2) == (6, -6)
    assert g2.strip("W", 3) == (2, 2, 6)
    assert g2.strip("C", 0) == ()
    assert g2.strip("C", 3) == (6, 8, -6)
    assert g2.strip("Wbar", 4) == (-6, -3, -2, -2)
    assert g2.strip("Wbar", 5) == (-6, -4, -2, -2, -2)
    for k in range(13):
        assert g2.apply_power("f", 1, (6,) * k, k) == g2.cstrip(k)
        assert g2.apply_power("f", 2, (2,) * k, k) == g2.wstrip(k)
        assert g2.apply_power("e", 2, (-2,) * k, k) == g2.wbarstrip(k)


def test_strip_recursions():
    for k in range(2, 13):
        assert g2.cstrip(k) == (6,) + g2.cstrip(k - 2) + (-6,)
    for k in range(3, 13):
        assert g2.wstrip(k) == (2, 2) + g2.wstrip(k - 3) + (6,)
        assert g2.wbarstrip(k) == (-6,) + g2.wbarstrip(k - 3) + (-2, -2)


def test_strip_trivial_signature():
    for k in range(13):
        assert g2.eps(2, g2.cstrip(k)) == 0 and g2.phi(2, g2.cstrip(k)) == 0
        assert g2.eps(1, g2.wstrip(k)) == 0 and g2.phi(1, g2.wstrip(k)) == 0
        assert g2.eps(1, g2.wbarstrip(k)) == 0 and g2.phi(1, g2.wbarstrip(k)) == 0


def test_involution_basics():
    for l in range(1, 4):
        assert g2.involution((1,) * l) == (-1,) * l
    assert g2.involution((7,)) == (7,)
    assert g2.involution((8,)) == (8,)
    for w in g2.enumerate_tableaux(2):
        assert g2.involution(g2.involution(w)) == w


def test_involution_operator_conjugation():
    # the involution swaps the lowering cascade from the top with the
    # raising cascade from the bottom
    rng = random.Random(11)
    for n in range(1, 4):
        top = (1,) * n
        bot = (-1,) * n
        for _ in range(200):
            ops = [rng.choice((1, 2)) for _ in range(rng.randint(0, 2 * n + 3))]
            wf = top
            we = bot
            for i in ops:
                if wf is not None:
                    wf = g2.apply("f", i, wf)
                if we is not None:
                    we = g2.apply("e", i, we)
            assert (wf is None) == (we is None)
            if wf is not None:
                assert g2.involution(wf) == we


def test_phi1_breakpoint_along_2_strings():
    # walking down any color-2 string, the color-1 lowering distance is
    # constant up to a unique breakpoint and then increases by one per step
    for n in range(1, 4):
        for w in g2.enumerate_tableaux(n):
            if g2.eps(2, w) != 0:
                continue
            vals = [g2.phi(1, w)]
            x = w
            while True:
                x = g2.apply("f", 2, x)
                if x is None:
                    break
                vals.append(g2.phi(1, x))
            deltas = [b - a for a, b in zip(vals, vals[1:])]
            assert all(d in (0, 1) for d in deltas)
            assert deltas == sorted(deltas)


def test_weights_match_classical_lift():
    for a in g2.LETTERS:
        m1, m2 = g2.LETTER_WEIGHT[a]
        assert g2.weight((a,)) == from_classical_pair(m1, m2)


def test_json_letters():
    assert g2.word_to_json((1, 7, 8, -6)) == ["1", "01", "02", "-6"]
    assert [g2.letter_from_json(s) for s in ("01", "02", "-1", "5")] == [7, 8, -1, 5]
