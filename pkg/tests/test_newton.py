from fractions import Fraction

import pytest

from lct3 import (
    classify,
    ideal_equal,
    maximal_ideal,
    monomial_mi,
    multiplier_ideal,
    newton_polyhedron,
)

F = Fraction

AXES = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_axes_at_three_halves():
    assert ideal_equal(monomial_mi(AXES, F(3, 2)), maximal_ideal())


def test_smooth_divisor():
    assert monomial_mi([(1, 0, 0)], F(1, 2)).is_unit()
    got = monomial_mi([(1, 0, 0)], 1)
    assert [str(g) for g in got.groebner()] == ["x"]


@pytest.mark.parametrize(
    "lam", [F(1, 3), F(1), F(3, 2), F(2), F(7, 3), F(3), F(7, 2), F(4), F(5)]
)
def test_smooth_divisor_floor_powers(lam):
    got = monomial_mi([(1, 0, 0)], lam)
    k = lam.numerator // lam.denominator
    if k == 0:
        assert got.is_unit()
    else:
        assert [str(g) for g in got.groebner()] == [f"x^{k}" if k > 1 else "x"]


def test_lambda_zero_unit():
    assert monomial_mi(AXES, 0).is_unit()


def test_monotone_in_lambda():
    grid = [F(k, 4) for k in range(0, 13)]
    ideals = [monomial_mi(AXES, lam) for lam in grid]
    for smaller, larger in zip(ideals, ideals[1:]):
        assert smaller.contains_ideal(larger)


def test_polyhedron_facets_valid():
    poly = newton_polyhedron(AXES + [(4, 0, 0)])
    for n, c in poly.facet_inequalities:
        assert all(k >= 0 for k in n)
        for p in poly.exponent_points:
            assert sum(a * b for a, b in zip(n, p)) >= c


def test_axes_facet_geometry():
    poly = newton_polyhedron(AXES)
    # the deep facet x+y+z >= 2 must be present
    assert ((1, 1, 1), 2) in poly.facet_inequalities
    assert not poly.strictly_inside((1, 1, 1), F(3, 2))  # on the boundary of (3/2)P
    assert poly.strictly_inside((2, 1, 1), F(3, 2))


def test_agrees_with_case_a_formula(coordinate_points):
    c = classify(coordinate_points)
    for lam in [F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3)]:
        closed = multiplier_ideal(c, coordinate_points, lam).ideal
        assert ideal_equal(closed, monomial_mi(AXES, lam))
