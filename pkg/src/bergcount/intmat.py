"""Exact 2x2 integer matrix algebra and torus fixed points.

Matrices are row-major [[a, b], [c, d]] with arbitrary-precision integer
entries.  The text format accepted and produced everywhere is
``"a,b;c,d"`` (whitespace optional); the JSON form is ``[[a,b],[c,d]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotHyperbolicError(ValueError):
    """The matrix is not a hyperbolic toral automorphism."""


class NotUnimodularError(ValueError):
    """The matrix is not in GL(2, Z)."""


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    # -- constructors / parsing ---------------------------------------

    @classmethod
    def identity(cls) -> "Mat2Z":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "Mat2Z":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def from_columns(cls, e, f) -> "Mat2Z":
        return cls(e[0], f[0], e[1], f[1])

    @classmethod
    def parse(cls, text: str) -> "Mat2Z":
        rows = text.strip().split(";")
        if len(rows) != 2:
            raise ValueError(
                f"expected 'a,b;c,d' (one ';'), got {len(rows) - 1} in {text!r}"
            )
        entries = []
        pos = 0
        for row in rows:
            parts = row.split(",")
            if len(parts) != 2:
                raise ValueError(
                    f"expected two entries per row in {text!r} near position {pos}"
                )
            for part in parts:
                try:
                    entries.append(int(part.strip()))
                except ValueError:
                    raise ValueError(
                        f"bad integer {part.strip()!r} at position "
                        f"{text.find(part, pos)} in {text!r}"
                    ) from None
                pos = text.find(part, pos) + len(part)
        return cls(*entries)

    # -- formatting ----------------------------------------------------

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.c), (self.b, self.d)

    # -- algebra ---------------------------------------------------------

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __mul__(self, k: int) -> "Mat2Z":
        if not isinstance(k, int):
            return NotImplemented
        return Mat2Z(self.a * k, self.b * k, self.c * k, self.d * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Mat2Z":
        return self * -1

    def __add__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: "Mat2Z") -> "Mat2Z":
        return self + (-other)

    def transpose(self) -> "Mat2Z":
        return Mat2Z(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2Z":
        det = self.det()
        if det == 1:
            return Mat2Z(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return Mat2Z(-self.d, self.b, self.c, -self.a)
        raise NotUnimodularError(f"{self} has determinant {det}")

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def max_abs(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    # -- predicates ------------------------------------------------------

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def is_hyperbolic(self) -> bool:
        det = self.det()
        if det == 1:
            return abs(self.trace()) > 2
        if det == -1:
            return self.trace() != 0
        raise NotUnimodularError(
            f"{self} has determinant {det}; not a toral automorphism"
        )


@dataclass(frozen=True, order=True)
class TorusPointQ:
    """A rational point of the torus, coordinates reduced into [0, 1)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % 1)
        object.__setattr__(self, "y", self.y % 1)

    def __add__(self, other: "TorusPointQ") -> "TorusPointQ":
        return TorusPointQ(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "TorusPointQ") -> "TorusPointQ":
        return TorusPointQ(self.x - other.x, self.y - other.y)

    def to_json(self) -> dict:
        return {
            "x": [self.x.numerator, self.x.denominator],
            "y": [self.y.numerator, self.y.denominator],
        }


def is_fixed_point(m: Mat2Z, pt: TorusPointQ) -> bool:
    """Exact test of M*pt == pt modulo Z^2."""
    x = m.a * pt.x + m.b * pt.y - pt.x
    y = m.c * pt.x + m.d * pt.y - pt.y
    return x.denominator == 1 and y.denominator == 1


def fixed_points(m: Mat2Z) -> list[TorusPointQ]:
    """All torus fixed points of a hyperbolic automorphism.

    Every fixed point has coordinates with denominator dividing
    q = |det(M - I)|, so a scan of the q x q rational grid is complete.
    The list is sorted lexicographically and starts at (0, 0).
    """
    if not m.is_hyperbolic():
        raise NotHyperbolicError(f"{m} is not hyperbolic")
    mi = m - Mat2Z.identity()
    q = abs(mi.det())
    points = []
    for i in range(q):
        for j in range(q):
            if (mi.a * i + mi.b * j) % q == 0 and (mi.c * i + mi.d * j) % q == 0:
                points.append(TorusPointQ(Fraction(i, q), Fraction(j, q)))
    points.sort()
    assert len(points) == q
    return points
