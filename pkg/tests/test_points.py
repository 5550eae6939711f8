import random

import pytest

from lct3 import (
    Ideal,
    PointP2,
    PointSet,
    X,
    Y,
    Z,
    general_points,
    graded_piece,
    hilbert_function,
    ideal_equal,
    ideal_of_points,
    ideal_power,
    point_prime,
    symbolic_power,
)
from lct3.points import expected_interpolation_data, is_rank_general


def test_point_normalization():
    p = PointP2.of(2, 4, 6)
    assert p == PointP2.of(1, 2, 3)
    q = PointP2.of(0, -3, 6)
    assert q.coords[1] == 1


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        PointP2.of(0, 0, 0)


def test_repeated_points_rejected():
    with pytest.raises(ValueError):
        PointSet.of([(1, 0, 0), (2, 0, 0)])


def test_point_prime_of_coordinate_point():
    I = point_prime(PointP2.of(1, 0, 0))
    assert [str(g) for g in I.groebner()] == ["y", "z"]


def test_ideal_of_single_point():
    Z1 = PointSet.of([(1, 0, 0)])
    assert [str(g) for g in ideal_of_points(Z1).groebner()] == ["y", "z"]


def test_ideal_of_coordinate_points(coordinate_points):
    I = ideal_of_points(coordinate_points)
    expected = Ideal([X * Y, X * Z, Y * Z])
    assert ideal_equal(I, expected)
    for g in expected.groebner():
        assert I.contains(g)


def test_ideal_of_collinear_points(three_collinear):
    I = ideal_of_points(three_collinear)
    degrees = sorted(g.total_degree() for g in I.groebner())
    assert degrees == [1, 3]
    assert I.contains(Z)


def test_graded_pieces(three_collinear, coordinate_points, five_general):
    assert graded_piece(coordinate_points, 1).basis == ()
    collinear_lines = graded_piece(three_collinear, 1).basis
    assert [str(f) for f in collinear_lines] == ["z"]
    conics = graded_piece(five_general, 2).basis
    assert len(conics) == 1


def test_graded_piece_matches_ideal(three_collinear, five_general):
    for Z_ in (three_collinear, five_general):
        I = ideal_of_points(Z_)
        for d in range(1, 5):
            piece = graded_piece(Z_, d).basis
            dim_from_ideal = (d + 1) * (d + 2) // 2 - hilbert_function(I, d)
            assert len(piece) == dim_from_ideal
            for f in piece:
                assert I.contains(f)


def test_symbolic_power_basics(coordinate_points):
    assert symbolic_power(coordinate_points, 0).is_unit()
    assert ideal_equal(
        symbolic_power(coordinate_points, 1), ideal_of_points(coordinate_points)
    )


def test_symbolic_square_contains_xyz(coordinate_points):
    xyz = X * Y * Z
    S2 = symbolic_power(coordinate_points, 2)
    assert S2.contains(xyz)
    I2 = ideal_power(ideal_of_points(coordinate_points), 2)
    assert not I2.contains(xyz)


def test_powers_inside_symbolic_powers(supported_arrangements):
    for _, Z_ in supported_arrangements:
        I = ideal_of_points(Z_)
        for k in (1, 2):
            assert symbolic_power(Z_, k).contains_ideal(ideal_power(I, k))


def test_interpolation_dimension_for_random_sets():
    rng = random.Random(14)
    for _ in range(6):
        n = rng.randint(2, 8)
        Z_ = general_points(n, rng.randint(0, 10**6))
        d, _ = expected_interpolation_data(n)
        # from the first interpolation-regular degree on, the kernel has the
        # expected codimension-n dimension
        for t in range(d, d + 3):
            space = (t + 1) * (t + 2) // 2
            assert len(graded_piece(Z_, t).basis) == space - n


def test_general_points_deterministic():
    assert general_points(7, 123) == general_points(7, 123)
    assert is_rank_general(general_points(9, 77))
