import random

import pytest

from heckecell.rootdata import WeightSystem
from heckecell.weyl import Weyl


def make(cfg):
    return Weyl(WeightSystem(*cfg))


WA2 = make(("A", 2, (1, 1, 1)))
WC2 = make(("C", 2, (2, 1, 1)))
WA1 = make(("A", 1, (1, 1)))


def bfs_length_oracle(weyl, target, cap=12):
    """Word length of the W_a part by breadth-first search over generator
    words, started from the Pi-part of the target."""
    start = weyl.pi_part(target)
    frontier = {start}
    seen = {start}
    for depth in range(cap + 1):
        if target in frontier:
            return depth
        nxt = set()
        for w in frontier:
            for s in weyl.gens:
                g = w * s
                if g not in seen:
                    seen.add(g)
                    nxt.add(g)
        frontier = nxt
    raise AssertionError("cap exceeded")


def test_translations_commute():
    t1 = WA2.translation((1, 0))
    t2 = WA2.translation((0, 1))
    assert t1 * t2 == t2 * t1 == WA2.translation((1, 1))


def test_inverse():
    rng = random.Random(0)
    els = list(WA2.enumerate_elements(5))
    for w in rng.sample(els, 100):
        assert w * w.inverse() == WA2.identity
        assert w.inverse() * w == WA2.identity


def test_braid_relation():
    s1, s2 = WA2.gens[1], WA2.gens[2]
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_mismatched_weight_systems_rejected():
    other = make(("A", 2, (1, 1, 1)))
    with pytest.raises(ValueError):
        WA2.multiply(WA2.identity, other.identity)


def test_lengths():
    assert WA2.longest_finite.length() == 3
    assert WA2.translation((1, 0)).length() == 2
    assert bfs_length_oracle(WA2, WA2.translation((1, 0))) == 2
    for pi in WA2.pi_elements:
        assert pi.length() == 0


def test_length_via_bfs_oracle():
    rng = random.Random(1)
    for w in rng.sample(list(WA2.enumerate_elements(5)), 25):
        assert bfs_length_oracle(WA2, w) == w.length()


def test_weight_length():
    ws = WC2.ws
    w0 = WC2.longest_finite
    _, word = WC2.reduced_word(w0)
    assert w0.weight_length() == sum(ws.params[i] for i in word)
    assert WC2.identity.weight_length() == 0
    # L = l when all parameters are 1
    for w in WA2.enumerate_elements(4):
        assert w.weight_length() == w.length()


def test_weight_length_word_independent():
    # sum of generator weights is the same over any reduced word
    rng = random.Random(2)
    for w in rng.sample(list(WC2.enumerate_elements(6)), 30):
        total = w.weight_length()
        # peel right descents in arbitrary order
        for _ in range(5):
            cur, acc = w, 0
            while cur.length() > 0:
                descents = [i for i in range(WC2.ws.num_gens)
                            if (cur * WC2.gens[i]).length() < cur.length()]
                i = rng.choice(descents)
                acc += WC2.ws.params[i]
                cur = cur * WC2.gens[i]
            assert acc == total


def test_length_additivity_iff_weight_additivity():
    rng = random.Random(3)
    els = list(WC2.enumerate_elements(4))
    for _ in range(200):
        w, v = rng.choice(els), rng.choice(els)
        len_add = (w * v).length() == w.length() + v.length()
        wt_add = (w * v).weight_length() == w.weight_length() + v.weight_length()
        assert len_add == wt_add


def test_reduced_word_examples():
    assert WA2.reduced_word(WA2.identity) == (0, ())
    pi, word = WA2.reduced_word(WA2.longest_finite)
    assert pi == 0 and len(word) == 3
    pi, word = WA2.reduced_word(WA2.translation((1, 0)))
    assert pi != 0 and len(word) == 2


def test_reduced_word_roundtrip():
    for w in WA2.enumerate_elements(6):
        assert WA2.from_word(*WA2.reduced_word(w)) == w


def test_descents():
    for i in range(3):
        assert not WA2.descent(WA2.identity, i, "left")
    w0 = WA2.longest_finite
    for k in (1, 2):  # the finite generator labels in type A
        assert WA2.descent(w0, k, "left")
    s1 = WA2.gens[1]
    assert WA2.descent(s1, 1, "left")
    assert not WA2.descent(s1, 2, "left")


def test_bruhat_order():
    els = list(WA2.enumerate_elements(4))
    for w in els:
        assert WA2.bruhat_leq(w, w)
        if WA2.pi_index(w) == 0:
            assert WA2.bruhat_leq(WA2.identity, w)
    # mismatched Pi-parts never compare
    pi = WA2.pi_elements[1]
    assert not WA2.bruhat_leq(pi, WA2.gens[1])
    assert not WA2.bruhat_leq(WA2.identity, pi * WA2.gens[1])


def test_bruhat_against_subword_oracle():
    rng = random.Random(4)
    els = [w for w in WA2.enumerate_elements(5)]
    for _ in range(120):
        x, y = rng.choice(els), rng.choice(els)
        oracle = x in WA2.bruhat_interval(y)
        assert WA2.bruhat_leq(x, y) == oracle


def test_translation_elements():
    assert WA2.translation((0, 0)) == WA2.identity
    # alpha in Q has trivial Pi-part
    alpha = WA2.ws.simple_roots[0].vector
    assert WA2.pi_index(WA2.translation(alpha)) == 0
    assert WA2.pi_index(WA2.translation((1, 0))) != 0
    with pytest.raises(ValueError):
        WC2.translation((1, 0))  # not in the L-weight lattice when a > c


def test_pi_part_homomorphism():
    rng = random.Random(5)
    els = list(WA2.enumerate_elements(4))
    for _ in range(60):
        x, y = rng.choice(els), rng.choice(els)
        px = WA2.pi_part(x)
        py = WA2.pi_part(y)
        assert WA2.pi_part(x * y) == WA2.pi_part(px * py)


def test_enumerate():
    a1 = make(("A", 1, (1, 1)))
    assert [w.length() for w in a1.enumerate_elements(0)] == [0, 0]
    small = [w for w in WA2.enumerate_elements(1) if WA2.pi_index(w) == 0]
    expected = {WA2.identity, WA2.gens[0], WA2.gens[1], WA2.gens[2]}
    assert set(small) == expected
    # count at bound 4 matches an independent BFS over the Cayley graph
    seen = {WA2.identity}
    frontier = {WA2.identity}
    for _ in range(4):
        frontier = {w * s for w in frontier for s in WA2.gens} - seen
        seen |= frontier
    expected_count = len(seen) * len(WA2.pi_elements)
    assert len(list(WA2.enumerate_elements(4))) == expected_count


def test_enumerate_sorted_and_unique():
    out = list(WA2.enumerate_elements(3))
    assert len(out) == len(set(out))
    keys = [WA2.sort_key(w) for w in out]
    assert keys == sorted(keys)


def test_alcove_walk_oracle():
    assert WA2.alcove_walk(()) == WA2.alcove_of(WA2.identity)
    # a length-4 walk crossing the marked face types lands on the alcove of
    # the corresponding group element
    word = (1, 0, 2, 1)
    g = WA2.from_word(0, word)
    assert WA2.alcove_walk(word) == WA2.alcove_of(g)
    assert g.length() == 4
    rng = random.Random(6)
    for w in rng.sample(list(WA2.enumerate_elements(6)), 60):
        pi, word = WA2.reduced_word(w)
        assert WA2.alcove_walk(word, pi) == WA2.alcove_of(w)


def test_separating_hyperplanes():
    a0 = WA2.alcove_of(WA2.identity)
    assert WA2.separating_hyperplanes(a0, a0) == set()
    s0 = WA2.gens[0]  # affine generator in type A
    theta = WA2.ws.highest_coroot_root
    assert WA2.separating_hyperplanes(a0, WA2.alcove_of(s0)) == {(theta.index, 1)}
    rng = random.Random(7)
    for w in rng.sample(list(WA2.enumerate_elements(6)), 50):
        assert WA2.separating_count(a0, WA2.alcove_of(w)) == w.length()


def test_commuting_left_right_actions():
    # left action of W_e and right action of W_e on extended alcoves commute
    rng = random.Random(8)
    els = list(WC2.enumerate_elements(3))
    for _ in range(40):
        g, u, h = rng.choice(els), rng.choice(els), rng.choice(els)
        left_then_right = WC2.alcove_of((g * u) * h)
        right_then_left = WC2.alcove_of(g * (u * h))
        assert left_then_right == right_then_left


def test_hyperplane_weight_oracle_matches_families():
    for weyl in (WA2, WC2, make(("A", 1, (2, 1)))):
        for r in weyl.ws.positive_roots:
            for k in (-2, -1, 0, 1, 2, 3):
                assert weyl.hyperplane_weight(r.index, k) == r.level_weight(k)


def test_hyperplane_weight_constant_on_orbits():
    # transport a hyperplane by a random group element; the weight of the
    # image equals the weight of the source
    rng = random.Random(9)
    weyl = WC2
    ws = weyl.ws
    els = [w for w in weyl.enumerate_elements(4) if weyl.pi_index(w) == 0]
    for _ in range(20):
        r = rng.choice(ws.positive_roots)
        k = rng.randint(-3, 3)
        g = rng.choice(els)
        tgt, sign = ws.w0_root_action[g.finite][r.index]
        cov = ws.positive_roots[tgt].covector
        shift = sum(g.translation[i] * cov[i] for i in range(ws.rank))
        k_img = sign * k + shift
        assert ws.positive_roots[tgt].level_weight(k_img) == r.level_weight(k)


def test_pi_gen_permutation():
    # conjugation by pi permutes the generators
    for weyl in (WA2, WA1):
        for pi, perm in zip(weyl.pi_elements, weyl.pi_gen_permutations):
            for i, s in enumerate(weyl.gens):
                assert pi * s * pi.inverse() == weyl.gens[perm[i]]
