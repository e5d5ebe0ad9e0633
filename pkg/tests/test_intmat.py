"""Integer 2x2 matrices and rational fixed points on the torus."""

from fractions import Fraction

import pytest

from bergcount.intmat import (
    Mat2Z,
    NotUnimodularError,
    TorusPointQ,
    fixed_points,
    is_fixed_point,
)


def test_parse_ok():
    m = Mat2Z.parse("2,1;1,1")
    assert m.rows() == [[2, 1], [1, 1]]
    assert Mat2Z.parse(" -3 , -2 ; 1 , 1 ").rows() == [[-3, -2], [1, 1]]


@pytest.mark.parametrize("text", ["2,1;1", "2,1,1;1,1", "a,1;1,1", "2;1", ""])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Mat2Z.parse(text)


def test_basic_algebra():
    m = Mat2Z(2, 1, 1, 1)
    assert m.det() == 1 and m.trace() == 3
    assert m.transpose() == m
    assert m @ m.inverse() == Mat2Z.identity()
    assert (m @ m).rows() == [[5, 3], [3, 2]]
    assert m.apply((1, -1)) == (1, 0)
    assert Mat2Z(0, 1, 1, 3).max_abs() == 3


def test_hyperbolic_predicate():
    assert Mat2Z(2, 1, 1, 1).is_hyperbolic()
    assert Mat2Z(0, 1, 1, 1).is_hyperbolic()  # det -1, trace 1
    assert not Mat2Z(1, 1, 0, 1).is_hyperbolic()  # parabolic
    assert not Mat2Z(0, -1, 1, 0).is_hyperbolic()  # elliptic
    assert not Mat2Z(0, 1, 1, 0).is_hyperbolic()  # det -1, trace 0
    with pytest.raises(NotUnimodularError):
        Mat2Z(2, 0, 0, 2).is_hyperbolic()


def test_inverse_requires_unimodular():
    with pytest.raises(NotUnimodularError):
        Mat2Z(2, 0, 0, 2).inverse()


def test_fixed_point_counts():
    for rows in [[[2, 1], [1, 1]], [[5, 3], [3, 2]], [[0, 1], [1, 1]],
                 [[-3, -2], [1, 1]], [[0, -1], [1, 3]], [[1, 1], [1, 2]]]:
        m = Mat2Z.from_rows(rows)
        mi = m - Mat2Z.identity()
        pts = fixed_points(m)
        assert len(pts) == abs(mi.det())
        assert len(set(pts)) == len(pts)
        for pt in pts:
            assert is_fixed_point(m, pt)


def test_known_fixed_sets():
    m = Mat2Z(2, 1, 1, 1)
    assert [(p.x, p.y) for p in fixed_points(m)] == [(Fraction(0), Fraction(0))]
    m = Mat2Z(5, 3, 3, 2)
    xy = {(p.x, p.y) for p in fixed_points(m)}
    assert (Fraction(0), Fraction(0)) in xy and len(xy) == 5
    for x, y in xy:
        assert 0 <= x < 1 and 0 <= y < 1


def test_torus_point_reduction():
    p = TorusPointQ(Fraction(7, 3), Fraction(-1, 4))
    assert p.x == Fraction(1, 3) and p.y == Fraction(3, 4)
    assert p == TorusPointQ(Fraction(1, 3), Fraction(3, 4))
