import random
from fractions import Fraction as Fr

import pytest

from meyersig import (
    NotSymplectic,
    NotUnimodular,
    RatMatrix,
    SL2Word,
    SymplecticElement,
    ZeroVector,
    direct_sum,
    gen_S,
    gen_T,
    random_transvection_product,
    sl2_word,
    standard_J,
    transvection,
)
from conftest import random_sl2


def test_standard_J_small():
    assert standard_J(1) == RatMatrix([[0, 1], [-1, 0]])
    assert standard_J(2) == RatMatrix(
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    )


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_standard_J_antisymmetric(g):
    j = standard_J(g)
    assert j.transpose() == -j


def test_constructor_rejects_non_symplectic():
    with pytest.raises(NotSymplectic):
        SymplecticElement([[1, 0], [0, 2]])
    with pytest.raises(NotSymplectic):
        SymplecticElement([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(NotSymplectic):
        SymplecticElement([[Fr(1, 2), 0], [0, 2]])


def test_transvection_basis_vectors():
    assert transvection((1, 0)).mat == RatMatrix([[1, -1], [0, 1]])
    assert transvection((0, 1)).mat == RatMatrix([[1, 0], [1, 1]])


def test_transvection_matches_pointwise_definition():
    # oracle: apply x -> x + (x^t J v) v to the standard basis directly
    r = random.Random(11)
    for _ in range(20):
        g = r.randint(1, 3)
        v = tuple(r.randint(-3, 3) for _ in range(2 * g))
        if all(x == 0 for x in v):
            continue
        j = standard_J(g)
        t = transvection(v)
        for k in range(2 * g):
            e = tuple(Fr(int(i == k)) for i in range(2 * g))
            coeff = sum(a * b for a, b in zip(e, j.mul_vec(v)))
            image = tuple(a + coeff * b for a, b in zip(e, v))
            assert tuple(t.mat.data[i][k] for i in range(2 * g)) == image


def test_transvection_squared_doubles_coefficient():
    r = random.Random(12)
    for _ in range(10):
        g = r.randint(1, 2)
        v = tuple(r.randint(-3, 3) for _ in range(2 * g))
        if all(x == 0 for x in v):
            continue
        t = transvection(v)
        j = standard_J(g)
        w = j.mul_vec(v)
        n = 2 * g
        doubled = RatMatrix(
            [
                [Fr(int(i == k)) + 2 * Fr(v[i]) * w[k] for k in range(n)]
                for i in range(n)
            ]
        )
        assert (t * t).mat == doubled


def test_transvection_rejects_zero_vector():
    with pytest.raises(ZeroVector):
        transvection((0, 0))


def test_direct_sum_identities():
    i1 = SymplecticElement.identity(1)
    assert direct_sum(i1, i1) == SymplecticElement.identity(2)
    a = SymplecticElement([[1, -1], [0, 1]])
    s = direct_sum(a, i1)  # constructor itself checks symplecticity
    assert s.g == 2
    # the a-block of the first summand lands in rows/cols (0, 2)
    assert s.mat.data[0][2] == Fr(-1)


def test_direct_sum_random_blocks_stay_symplectic():
    r = random.Random(13)
    for _ in range(10):
        a = random_transvection_product(r, 1, 5)
        b = random_transvection_product(r, 2, 5)
        s = direct_sum(a, b)
        assert s.g == 3


def test_products_inverses_powers_stay_symplectic():
    r = random.Random(14)
    for g in (1, 2, 3):
        for _ in range(8):
            a = random_transvection_product(r, g, r.randint(1, 30))
            a.inverse()
            a**3
            a**-2


def test_fast_inverse_formula():
    r = random.Random(15)
    for g in (1, 2, 3):
        j = standard_J(g)
        jinv = -j
        for _ in range(8):
            a = random_transvection_product(r, g, 6)
            assert a.inverse().mat == jinv * a.mat.transpose() * j
            assert a.inverse().mat == a.mat.inverse()
            assert a * a.inverse() == SymplecticElement.identity(g)


# --- SL(2,Z) words ----------------------------------------------------------


def test_word_for_translation_power():
    w = sl2_word(gen_T() ** 5)
    assert w.evaluate().mat == RatMatrix([[1, 5], [0, 1]])
    assert str(w) == "TTTTT"


def test_word_for_S():
    w = sl2_word(gen_S())
    assert w.evaluate() == gen_S()


def test_word_for_minus_identity():
    minus = SymplecticElement([[-1, 0], [0, -1]])
    w = sl2_word(minus)
    assert w.syllables == (("S", 2),)


def test_word_round_trip_on_random_products(seeded):
    for _ in range(100):
        m = random_sl2(seeded, letters=20)
        w = sl2_word(m)
        assert w.evaluate() == m


def test_word_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        sl2_word(RatMatrix([[2, 0], [0, 1]]))
    with pytest.raises(NotUnimodular):
        sl2_word(RatMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_word_letters_and_parsing():
    w = SL2Word((("S", -1), ("T", 3)))
    assert str(w) == "sTTT"
    assert SL2Word.from_letters("sTTT") == w
    assert SL2Word.from_letters("Tt") == SL2Word(())
    assert len(w) == 4
