"""Exact arithmetic in Q(sqrt(disc)) and spectral data."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from bergcount.intmat import Mat2Z, NotHyperbolicError
from bergcount.qfield import ContextMismatchError, QuadNum, eigen_data

DISC = 5


def rand_num(rng: random.Random, disc: int = DISC) -> QuadNum:
    return QuadNum(
        disc,
        rng.randint(-9, 9),
        rng.randint(-9, 9),
        rng.choice([1, 2, 3, 5, 7]),
    )


def to_float(x: QuadNum) -> float:
    return (x.a + x.b * DISC ** 0.5) / x.c


def test_normalization():
    x = QuadNum(5, 2, 4, -6)
    assert (x.a, x.b, x.c) == (-1, -2, 3)
    assert QuadNum(5, 0, 0, 7) == QuadNum(5, 0)
    with pytest.raises(ZeroDivisionError):
        QuadNum(5, 1, 1, 0)
    with pytest.raises(ValueError):
        QuadNum(-3, 1)


def test_field_axioms_random():
    rng = random.Random(0)
    for _ in range(200):
        x, y, z = (rand_num(rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x - x == QuadNum(DISC, 0)
        if y != QuadNum(DISC, 0):
            assert (x / y) * y == x


def test_comparisons_match_floats():
    rng = random.Random(1)
    for _ in range(500):
        x, y = rand_num(rng), rand_num(rng)
        fx, fy = to_float(x), to_float(y)
        if abs(fx - fy) < 1e-9:
            continue
        assert (x < y) == (fx < fy)
        assert (x > y) == (fx > fy)
        assert (x <= y) == (fx <= fy)


def test_sign_and_abs():
    root = QuadNum.sqrt_disc(5)
    assert root.sign() == 1
    assert (-root).sign() == -1
    assert QuadNum(5, 0).sign() == 0
    x = QuadNum(5, -9, 4)  # -9 + 4 sqrt(5) < 0
    assert x.sign() == -1
    assert abs(x) == -x
    y = QuadNum(5, -8, 4)  # -8 + 4 sqrt(5) > 0
    assert y.sign() == 1


def test_floor_matches_isqrt():
    rng = random.Random(2)
    for _ in range(300):
        x = rand_num(rng)
        n = x.__floor__()
        one = QuadNum(DISC, 1)
        nq = QuadNum(DISC, n)
        assert nq <= x < nq + one


def test_conjugate_and_rational():
    x = QuadNum(5, 3, 2, 4)
    assert x * x.conjugate() == QuadNum(5, 9 - 4 * 5, 0, 16)
    assert x + x.conjugate() == QuadNum(5, 6, 0, 4)
    r = QuadNum(5, 7, 0, 3)
    assert r.is_rational() and r.as_fraction() == Fraction(7, 3)
    assert not x.is_rational()
    with pytest.raises(ValueError):
        x.as_fraction()


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        QuadNum(5, 1) + QuadNum(8, 1)


def test_fraction_interop():
    x = QuadNum(5, 1, 1, 2)
    assert x + Fraction(1, 2) == QuadNum(5, 2, 1, 2)
    assert x * 2 == QuadNum(5, 1, 1)
    assert 1 - x == QuadNum(5, 1, -1, 2)


@pytest.mark.parametrize(
    "rows",
    [[[2, 1], [1, 1]], [[0, 1], [1, 1]], [[1, 1], [1, 2]], [[-3, -2], [1, 1]],
     [[0, -1], [1, 3]], [[5, 3], [3, 2]], [[-2, 1], [1, -1]]],
)
def test_eigen_identities(rows):
    m = Mat2Z.from_rows(rows)
    ed = eigen_data(m)
    disc = m.trace() ** 2 - 4 * m.det()
    one = QuadNum(disc, 1)
    assert ed.lam + ed.mu == QuadNum(disc, m.trace())
    assert ed.lam * ed.mu == QuadNum(disc, m.det())
    assert abs(ed.lam) > one > abs(ed.mu)
    # frame coordinates transform by the eigenvalues under the map
    for w in [(1, 0), (0, 1), (3, -2)]:
        s, u = ed.frame_coords(w)
        s2, u2 = ed.frame_coords(m.apply(w))
        assert s2 == ed.mu * s and u2 == ed.lam * u
        ss, us = ed.frame_signs(w)
        assert ss == s.sign() and us == u.sign()


def test_eigen_rejects_non_hyperbolic():
    with pytest.raises(NotHyperbolicError):
        eigen_data(Mat2Z.from_rows([[1, 1], [0, 1]]))
