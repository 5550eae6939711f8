import random
from fractions import Fraction

import pytest

from lct3 import GREVLEX, Poly, X, Y, Z, monomials_of_degree, poly_from_string, poly_str
from lct3.polynomials import elimination_order, grevlex_key


def test_difference_of_squares():
    assert (X + Y) * (X - Y) == X * X - Y * Y


def test_exact_divide_factored():
    p = X * X * Y + X * Y * Y
    assert p.exact_div(X + Y) == X * Y


def test_exact_divide_fails():
    assert (X * Y + Z * Z).exact_div(X) is None


def test_divide_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        X.exact_div(Poly.zero(3))


def test_monomials_of_degree_small():
    assert monomials_of_degree(0) == [(0, 0, 0)]
    assert monomials_of_degree(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(monomials_of_degree(3)) == 10


@pytest.mark.parametrize("d", range(11))
def test_monomials_of_degree_count(d):
    assert len(monomials_of_degree(d)) == (d + 1) * (d + 2) // 2


def test_monomials_are_grevlex_sorted():
    for d in range(6):
        keys = [grevlex_key(e) for e in monomials_of_degree(d)]
        assert keys == sorted(keys, reverse=True)


def test_grevlex_classic_order():
    # in degree 2: x^2 > xy > y^2 > xz > yz > z^2
    assert monomials_of_degree(2) == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]


def test_homogeneous_product_degree():
    rng = random.Random(7)
    for _ in range(25):
        d1, d2 = rng.randint(0, 3), rng.randint(0, 3)
        p = sum(
            (Poly.monomial(e, rng.randint(1, 5)) for e in monomials_of_degree(d1)),
            Poly.zero(3),
        )
        q = sum(
            (Poly.monomial(e, rng.randint(1, 5)) for e in monomials_of_degree(d2)),
            Poly.zero(3),
        )
        assert p.is_homogeneous() and q.is_homogeneous()
        assert (p * q).total_degree() == d1 + d2


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly({(1, 0, 0): 0.5}, 3)


def test_leading_monomial_grevlex():
    p = X * Y + Z * Z  # xy > z^2 in grevlex
    assert p.leading_monomial(GREVLEX) == (1, 1, 0)


def test_elimination_order_blocks():
    order = elimination_order(1)
    # anything containing the first variable beats anything without it
    assert order.key((1, 0, 0, 0)) > order.key((0, 5, 5, 5))


def test_diff():
    p = X**3 + 2 * X * Y * Z
    assert p.diff(0) == 3 * X * X + 2 * Y * Z
    assert p.diff(2) == 2 * X * Y


def test_evaluate():
    p = X * X - Y * Z
    assert p.evaluate((Fraction(2), Fraction(1), Fraction(4))) == 0
    assert p.evaluate((1, 1, 0)) == 1


def test_render_parse_round_trip():
    rng = random.Random(11)
    for _ in range(30):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = tuple(rng.randint(0, 3) for _ in range(3))
            terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        p = Poly(terms, 3)
        assert poly_from_string(poly_str(p)) == p


def test_render_examples():
    assert poly_str(X * X - Y * Y) == "x^2 - y^2"
    assert poly_str(Poly.zero(3)) == "0"
    assert poly_str(Poly.constant(Fraction(-3, 7), 3)) == "-3/7"


def test_set_var_one_dehomogenizes():
    p = X * X * Z - Y * Y * Y
    q = p.set_var_one(2)
    assert q.nvars == 2
    assert q == Poly({(2, 0): 1, (0, 3): -1}, 2)
