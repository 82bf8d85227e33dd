from fractions import Fraction

import pytest

from rlah.polynomials import (
    ExactPoly,
    bell_poly,
    eq40_poly,
    eq40_weights,
    falling_basis,
    lemma1_sides,
    r_lah_bell_poly,
    rising_shifted,
    stirling2_expansion,
)
from rlah.tables import bell_numbers, r_lah_bell_numbers

SAMPLE_POINTS = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)]


def test_ring_operations():
    x = ExactPoly.x()
    p = (x + 1) * (x - 1)
    assert p == ExactPoly([-1, 0, 1])
    assert p.eval_at(3) == 8
    assert ExactPoly() + p == p
    assert p - p == ExactPoly()
    assert ExactPoly().degree == -1
    assert p.scale(Fraction(1, 2)) == ExactPoly([Fraction(-1, 2), 0, Fraction(1, 2)])
    assert 2 * x == ExactPoly([0, 2])
    assert ExactPoly([1, 2, 0, 0]).coeffs == (1, 2)


def test_to_json_is_exact_strings():
    assert ExactPoly([Fraction(1, 3), -2]).to_json() == ["1/3", "-2/1"]


def test_factorial_bases():
    assert falling_basis(3) == ExactPoly([0, 2, -3, 1])
    assert rising_shifted(1, 2) == ExactPoly([2, 1])
    assert rising_shifted(0, 5) == ExactPoly([1])
    with pytest.raises(ValueError):
        falling_basis(-1)


def test_factorial_bases_evaluate_like_products():
    for n in range(8):
        for v in range(-3, 9):
            prod_f = 1
            prod_r = 1
            for i in range(n):
                prod_f *= v - i
                prod_r *= v + 3 + i
            assert falling_basis(n).eval_at(v) == prod_f
            assert rising_shifted(n, 3).eval_at(v) == prod_r


def test_lemma1_examples():
    assert lemma1_sides(1, 1) == (ExactPoly([2, 1]), ExactPoly([2, 1]))
    for r in range(4):
        assert lemma1_sides(0, r) == (ExactPoly([1]), ExactPoly([1]))
    assert lemma1_sides(2, 0) == (ExactPoly([0, 1, 1]), ExactPoly([0, 1, 1]))


def test_lemma1_grid():
    for n in range(21):
        for r in range(5):
            lhs, rhs = lemma1_sides(n, r)
            assert lhs == rhs


def test_stirling2_expansion_is_monomial():
    for n in range(21):
        assert stirling2_expansion(n) == ExactPoly([0] * n + [1])


def test_r_lah_bell_poly_examples():
    assert r_lah_bell_poly(2, 1) == ExactPoly([6, 6, 1])
    assert r_lah_bell_poly(2, 1).eval_at(1) == 13
    assert r_lah_bell_poly(0, 3) == ExactPoly([1])


def test_r_lah_bell_poly_at_one_is_row_sum():
    for r in range(6):
        seq = r_lah_bell_numbers(30, r)
        for n in range(31):
            assert r_lah_bell_poly(n, r).eval_at(1) == seq[n]


def test_bell_poly():
    assert bell_poly(3) == ExactPoly([0, 1, 3, 1])
    assert bell_poly(3).eval_at(1) == 5
    assert bell_poly(0) == ExactPoly([1])
    bells = bell_numbers(15)
    assert all(bell_poly(n).eval_at(1) == bells[n] for n in range(16))


def test_stirling1_weighted_bell_polys():
    for n in range(16):
        for r in range(4):
            direct = r_lah_bell_poly(n, r)
            expanded = eq40_poly(n, r)
            assert direct == expanded
            for x in SAMPLE_POINTS:
                assert direct.eval_at(x) == expanded.eval_at(x)


def test_eq40_weights_small():
    # <x+2>_1 = x + 2, so the weights on B_0, B_1 are 2 and 1
    assert eq40_weights(1, 1) == [2, 1]
