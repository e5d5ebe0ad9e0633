"""Exact arithmetic in a real quadratic field Q(sqrt(disc)).

Every number is stored as (a + b*sqrt(disc)) / c with integer a, b, c,
normalized so that c > 0 and gcd(a, b, c) = 1.  The discriminant is kept
as given (square factors are not extracted); two values are comparable
only when their discriminants agree.  All sign decisions are exact
integer comparisons -- no floating point is ever consulted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


class ContextMismatchError(ValueError):
    """Raised when mixing numbers from different quadratic fields."""


class QuadNum:
    __slots__ = ("disc", "a", "b", "c")

    def __init__(self, disc: int, a: int, b: int = 0, c: int = 1):
        if disc <= 0:
            raise ValueError(f"discriminant must be positive, got {disc}")
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        if g > 1:
            a //= g
            b //= g
            c //= g
        self.disc = disc
        self.a = a
        self.b = b
        self.c = c

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, disc: int, n: int) -> "QuadNum":
        return cls(disc, n, 0, 1)

    @classmethod
    def sqrt_disc(cls, disc: int) -> "QuadNum":
        return cls(disc, 0, 1, 1)

    @classmethod
    def from_fraction(cls, disc: int, q: Fraction) -> "QuadNum":
        return cls(disc, q.numerator, 0, q.denominator)

    # -- helpers ------------------------------------------------------

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.disc != self.disc:
                raise ContextMismatchError(
                    f"cannot mix sqrt({self.disc}) with sqrt({other.disc})"
                )
            return other
        if isinstance(other, int):
            return QuadNum(self.disc, other)
        if isinstance(other, Fraction):
            return QuadNum(self.disc, other.numerator, 0, other.denominator)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(
            self.disc,
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(
            self.disc,
            self.a * o.c - o.a * self.c,
            self.b * o.c - o.b * self.c,
            self.c * o.c,
        )

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(
            self.disc,
            self.a * o.a + self.b * o.b * self.disc,
            self.a * o.b + self.b * o.a,
            self.c * o.c,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # 1/((a+b*r)/c) = c*(a-b*r) / (a^2 - b^2*disc)
        norm = o.a * o.a - o.b * o.b * o.disc
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadNum(
            self.disc,
            (self.a * o.a - self.b * o.b * self.disc) * o.c,
            (self.b * o.a - self.a * o.b) * o.c,
            self.c * norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __neg__(self):
        return QuadNum(self.disc, -self.a, -self.b, self.c)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / (self ** (-n))
        result = QuadNum(self.disc, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.disc, self.a, -self.b, self.c)

    # -- order --------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| against |b|*sqrt(disc)
        lhs = a * a
        rhs = b * b * self.disc
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1 if lhs < rhs else 0
        return -1 if lhs > rhs else 1 if lhs < rhs else 0

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ContextMismatchError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c

    def __hash__(self):
        return hash((self.disc, self.a, self.b, self.c))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    # -- conversions --------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.a, self.c)

    def __floor__(self) -> int:
        # floor((a + b*sqrt(disc))/c) via exact integer sqrt bounds
        if self.b >= 0:
            t = isqrt(self.b * self.b * self.disc)  # floor(b*sqrt(disc))
        else:
            s = isqrt(self.b * self.b * self.disc)
            t = -s if s * s == self.b * self.b * self.disc else -s - 1
        n = (self.a + t) // self.c
        # adjust for rounding at the c-division boundary
        while QuadNum(self.disc, n + 1) <= self:
            n += 1
        while QuadNum(self.disc, n) > self:
            n -= 1
        return n

    def __float__(self) -> float:
        return (self.a + self.b * self.disc**0.5) / self.c

    def __repr__(self):
        return f"QuadNum({self.disc}, {self.a}, {self.b}, {self.c})"

    def __str__(self):
        if self.b == 0:
            body = str(self.a)
        elif self.a == 0:
            body = f"{self.b}√{self.disc}"
        else:
            body = f"{self.a}{self.b:+}√{self.disc}"
        return body if self.c == 1 else f"({body})/{self.c}"

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "disc": self.disc,
            "approx": float(self),
        }


@dataclass(frozen=True)
class EigenData:
    """Exact spectral data of a hyperbolic 2x2 integer matrix.

    ``lam`` is the eigenvalue with |lam| > 1 and ``mu`` the other one;
    the direction vectors have entries in Q(sqrt(disc)) and are not
    normalized.
    """

    disc: int
    lam: QuadNum
    mu: QuadNum
    unstable_dir: tuple[QuadNum, QuadNum]
    stable_dir: tuple[QuadNum, QuadNum]

    def frame_coords(self, w: tuple[int, int]) -> tuple[QuadNum, QuadNum]:
        """Coordinates of an integer vector in the (stable, unstable) frame.

        Solves w = s*stable_dir + u*unstable_dir exactly.
        """
        sx, sy = self.stable_dir
        ux, uy = self.unstable_dir
        den = sx * uy - sy * ux
        wx, wy = w
        s = (uy * wx - ux * wy) / den
        u = (sx * wy - sy * wx) / den
        return s, u

    def frame_signs(self, w: tuple[int, int]) -> tuple[int, int]:
        """Signs of the stable/unstable coordinates of w (exact)."""
        sx, sy = self.stable_dir
        ux, uy = self.unstable_dir
        d = (sx * uy - sy * ux).sign()
        wx, wy = w
        s = (uy * wx - ux * wy).sign() * d
        u = (sx * wy - sy * wx).sign() * d
        return s, u


def eigen_data(m) -> EigenData:
    """Exact eigenvalues and eigendirections of a hyperbolic matrix."""
    from .intmat import NotHyperbolicError  # cycle-free: plain exception

    if not m.is_hyperbolic():
        raise NotHyperbolicError(f"{m} is not hyperbolic")
    tr = m.trace()
    det = m.det()
    disc = tr * tr - 4 * det
    root = QuadNum.sqrt_disc(disc)
    if tr > 0:
        lam = (QuadNum(disc, tr) + root) / 2
        mu = (QuadNum(disc, tr) - root) / 2
    else:
        lam = (QuadNum(disc, tr) - root) / 2
        mu = (QuadNum(disc, tr) + root) / 2
    zero = QuadNum(disc, 0)

    def direction(ev: QuadNum) -> tuple[QuadNum, QuadNum]:
        if m.b != 0:
            return QuadNum(disc, m.b), ev - m.a
        return ev - m.d, QuadNum(disc, m.c)

    ed = EigenData(
        disc=disc,
        lam=lam,
        mu=mu,
        unstable_dir=direction(lam),
        stable_dir=direction(mu),
    )
    # paranoia: the defining identities must hold exactly
    assert lam * mu == QuadNum(disc, det) and lam + mu == QuadNum(disc, tr)
    for ev, (x, y) in ((lam, ed.unstable_dir), (mu, ed.stable_dir)):
        mx = m.a * x + m.b * y
        my = m.c * x + m.d * y
        assert mx - ev * x == zero and my - ev * y == zero
    return ed
