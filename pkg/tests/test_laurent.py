import random

import pytest

from heckecell.laurent import NEG_INF, LaurentPoly, xi


def P(d):
    return LaurentPoly(d)


def rand_poly(rng, spread=5, terms=4):
    return LaurentPoly({rng.randint(-spread, spread): rng.randint(-9, 9) for _ in range(terms)})


def test_add_cancellation():
    assert P({1: 1, 0: 1}) + P({0: -1, -1: 1}) == P({1: 1, -1: 1})


def test_add_identity_and_doubling():
    p = P({3: 2, -1: 5})
    assert p + LaurentPoly.zero() == p
    d = P({1: 1, -1: -1})
    assert d + d == P({1: 2, -1: -2})


def test_mul_difference_of_squares():
    assert P({1: 1, -1: 1}) * P({1: 1, -1: -1}) == P({2: 1, -2: -1})


def test_mul_identity_and_square():
    p = P({2: 3, 0: -1})
    assert p * LaurentPoly.one() == p
    d = P({1: 1, -1: -1})
    assert d * d == P({2: 1, 0: -2, -2: 1})


def test_bar_examples():
    assert P({2: 1, 0: -3, -1: 1}).bar() == P({-2: 1, 0: -3, 1: 1})
    assert P({0: 5}).bar() == P({0: 5})
    sym = P({1: 1, -1: 1})
    assert sym.bar() == sym


def test_xi():
    assert xi(1) == P({1: 1, -1: -1})
    assert xi(2) == P({2: 1, -2: -1})
    with pytest.raises(ValueError):
        xi(0)


def test_filtration_membership():
    p = P({-1: 1, -3: 2})
    assert p.in_strictly_negative() and p.in_nonpositive()
    q = P({0: 1, -1: 1})
    assert not q.in_strictly_negative() and q.in_nonpositive()
    r = P({1: 1})
    assert not r.in_strictly_negative() and not r.in_nonpositive()
    assert LaurentPoly.zero().in_strictly_negative()


def test_degree():
    assert P({4: 1, -7: 2}).degree() == 4
    assert LaurentPoly.zero().degree() == NEG_INF


def test_bar_is_ring_involution():
    rng = random.Random(0)
    for _ in range(60):
        p, r = rand_poly(rng), rand_poly(rng)
        assert (p * r).bar() == p.bar() * r.bar()
        assert p.bar().bar() == p


def test_degree_additive_on_products():
    rng = random.Random(1)
    for _ in range(40):
        p, r = rand_poly(rng), rand_poly(rng)
        if p.is_zero() or r.is_zero():
            continue
        assert (p * r).degree() == p.degree() + r.degree()


def test_strictly_negative_bar_fixed_is_zero():
    # the uniqueness mechanism: no nonzero bar-symmetric element of A_{<0}
    rng = random.Random(2)
    for _ in range(60):
        p = rand_poly(rng)
        sym = p + p.bar()  # bar-symmetric by construction
        if sym.in_strictly_negative():
            assert sym.is_zero()


def test_text_and_json_forms():
    p = P({2: 1, 0: -2, -2: 1})
    assert str(p) == "q^2 - 2 + q^-2"
    assert p.to_json() == {"2": 1, "0": -2, "-2": 1}
    assert LaurentPoly.from_json(p.to_json()) == p
    assert str(LaurentPoly.zero()) == "0"
    assert str(P({-3: -4})) == "-4*q^-3"
