import random

import pytest

from lct3 import (
    Ideal,
    PointSet,
    Poly,
    X,
    Y,
    Z,
    general_points,
    hilbert_function,
    ideal_of_points,
    radical_zero_dim,
    variables,
    zero_dim_report,
)


def test_three_coordinate_points():
    report = zero_dim_report(Ideal([X * Y, X * Z, Y * Z]))
    assert report.is_zero_dimensional
    assert report.degree == 3
    assert report.is_reduced


def test_fat_point_not_reduced():
    # (x, y)^2 is saturated (primary away from z); S/(x,y)^2 has Hilbert
    # function 1, 3, 3, ... so the scheme is a triple structure on one point
    report = zero_dim_report(Ideal([X * X, X * Y, Y * Y]))
    assert report.is_zero_dimensional
    assert report.degree == 3
    assert not report.is_reduced


def test_cubic_pencil_basepoints():
    # nine basepoints of a general cubic pencil: complete intersection (3,3)
    rng = random.Random(17)
    while True:
        c1 = {e: rng.randint(-5, 5) for e in [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1), (2, 1, 0)]}
        c2 = {e: rng.randint(-5, 5) for e in [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1), (0, 2, 1)]}
        I = Ideal([Poly(c1, 3), Poly(c2, 3)])
        report = zero_dim_report(I)
        if report.is_zero_dimensional:
            break
    assert report.degree == 9
    assert report.is_reduced


def test_curve_is_not_zero_dimensional():
    report = zero_dim_report(Ideal([X * X + Y * Y + Z * Z]))
    assert not report.is_zero_dimensional
    assert report.degree == 0


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        zero_dim_report(Ideal([Poly.constant(1, 3)]))


def test_hilbert_function_of_points():
    I = ideal_of_points(PointSet.of([(1, 0, 0), (0, 1, 0), (1, 1, 0)]))
    values = [hilbert_function(I, t) for t in range(5)]
    assert values == [1, 2, 3, 3, 3]


def test_degree_additive_over_disjoint_sets():
    rng = random.Random(8)
    for _ in range(5):
        n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
        Z1 = general_points(n1, rng.randint(0, 10**6))
        Z2 = general_points(n2, rng.randint(0, 10**6))
        if set(Z1.points) & set(Z2.points):
            continue
        both = PointSet.of(
            [tuple(p.coords) for p in Z1] + [tuple(p.coords) for p in Z2]
        )
        assert zero_dim_report(ideal_of_points(both)).degree == n1 + n2


def test_radical_examples():
    x2, y2 = variables(2)
    one2 = Poly.constant(1, 2)
    assert radical_zero_dim(Ideal([x2 * x2, y2])).groebner() == Ideal([x2, y2]).groebner()
    already = Ideal([x2 * x2 - x2, y2])
    assert radical_zero_dim(already).groebner() == already.groebner()
    shifted = radical_zero_dim(Ideal([x2 * x2 - 2 * x2 + one2, y2 - x2]))
    assert shifted.groebner() == Ideal([x2 - one2, y2 - one2]).groebner()


def test_radical_rejects_positive_dimension():
    x2, y2 = variables(2)
    with pytest.raises(ValueError):
        radical_zero_dim(Ideal([x2 * y2]))
