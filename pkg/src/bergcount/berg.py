"""Closed-form data of Berg partitions: connectivity matrices, rectangle
dimensions, counting formulas, hinged bounds, and symmetry classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .bifan import SIGMA, BasisPair, CuttingWord, cutting_word, fan_bases
from .intmat import Mat2Z, NotHyperbolicError
from .qfield import EigenData, QuadNum, eigen_data


@dataclass(frozen=True)
class ConnectivityMatrix:
    """Nonnegative unimodular matrix [[k, l], [m, n]] counting rectangle
    crossings; its Perron eigenvalue is the expansion rate of the map."""

    k: int
    l: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.k, self.l, self.m, self.n) < 0:
            raise ValueError(f"negative entry in {self}")
        if self.det() not in (1, -1):
            raise ValueError(f"{self} is not unimodular")
        if not self.mat().is_hyperbolic():
            raise ValueError(f"{self} has no Perron eigenvalue > 1")

    @classmethod
    def from_mat(cls, m: Mat2Z) -> "ConnectivityMatrix":
        return cls(m.a, m.b, m.c, m.d)

    def mat(self) -> Mat2Z:
        return Mat2Z(self.k, self.l, self.m, self.n)

    def det(self) -> int:
        return self.k * self.n - self.l * self.m

    def trace(self) -> int:
        return self.k + self.n

    def entry_sum(self) -> int:
        return self.k + self.l + self.m + self.n

    def entries(self) -> tuple[int, int, int, int]:
        return self.k, self.l, self.m, self.n

    def sigma_conj(self) -> "ConnectivityMatrix":
        return ConnectivityMatrix(self.n, self.m, self.l, self.k)

    def canonical(self) -> "ConnectivityMatrix":
        other = self.sigma_conj()
        return self if self.entries() <= other.entries() else other

    def rows(self) -> list[list[int]]:
        return self.mat().rows()

    def __str__(self):
        return str(self.mat())


def transpose(c: ConnectivityMatrix) -> ConnectivityMatrix:
    return ConnectivityMatrix(c.k, c.m, c.l, c.n)


def j_conjugate(c: ConnectivityMatrix) -> ConnectivityMatrix:
    """sigma * C^T * sigma: the diagonal entries exchanged."""
    return ConnectivityMatrix(c.n, c.l, c.m, c.k)


def count_berg(c: ConnectivityMatrix) -> int:
    """Number of nonequivalent Berg partitions sharing this matrix."""
    return c.entry_sum() // 2


def center_is_integer(c: ConnectivityMatrix) -> bool:
    """True iff both fixed points can sit at the spine centers, i.e. the
    diagonal entries agree mod 2 and so do the off-diagonal ones."""
    return (c.k - c.n) % 2 == 0 and (c.l - c.m) % 2 == 0


def is_isolated(c: ConnectivityMatrix) -> bool:
    """True iff one rectangle of the bi-partition projects 1-1 to the torus.

    Equivalent to (u - v)(p - q) > 0 for the rectangle dimensions; in
    integer terms (n - k)^2 > (m - l)^2.  Equality never occurs for
    hyperbolic C (it would force a rational eigenvalue).
    """
    d1 = c.l + c.n - c.m - c.k
    d2 = c.m + c.n - c.l - c.k
    assert d1 != 0 and d2 != 0
    return d1 * d2 > 0


def hinged_pairs_isolated(c: ConnectivityMatrix) -> int:
    """Number of hinged pairs among the equivalence classes (isolated case)."""
    if not is_isolated(c):
        raise ValueError(f"{c} is not isolated")
    return c.l // 2 + c.m // 2


def hinged_bound_connected(c: ConnectivityMatrix) -> int:
    """Upper bound on the size of a hinged family for a connected shape.

    floor(sqrt(l/m + ((n-k)/(2m))^2) - |n-k|/(2m)) + 2, evaluated by exact
    integer inequalities (t is admissible iff (2mt + |n-k|)^2 <= 4lm + (n-k)^2).
    """
    if is_isolated(c):
        raise ValueError(f"{c} is not connected")
    if c.l < c.m:
        return hinged_bound_connected(c.sigma_conj())
    d = abs(c.n - c.k)
    rhs = 4 * c.l * c.m + d * d
    t = (isqrt(rhs) - d) // (2 * c.m)  # candidate, then exact adjustment
    while (2 * c.m * (t + 1) + d) ** 2 <= rhs:
        t += 1
    while t > 0 and (2 * c.m * t + d) ** 2 > rhs:
        t -= 1
    return t + 2


def rectangle_dims(
    c: ConnectivityMatrix,
) -> tuple[QuadNum, QuadNum, QuadNum, QuadNum]:
    """Rectangle dimensions (u, v, p, q) for a connectivity matrix.

    (p, q) is the Perron column eigenvector and (u, v) the Perron row
    eigenvector, scaled so that u*p + v*q = 1 (unit torus area).
    """
    disc = c.trace() ** 2 - 4 * c.det()
    lam = (QuadNum(disc, c.trace()) + QuadNum.sqrt_disc(disc)) / 2
    u = QuadNum(disc, c.m)
    v = lam - c.k
    rho = u * c.l + v * v  # u*l + v*(lam-k) = u*p0 + v*q0 before scaling
    p = c.l / rho
    q = v / rho
    assert u * p + v * q == QuadNum(disc, 1)
    return u, v, p, q


@dataclass(frozen=True)
class BergShape:
    """A Berg partition shape: fan basis, connectivity matrix, dimensions."""

    index: int
    basis: BasisPair
    C_raw: ConnectivityMatrix  # in the basis order (e first)
    C: ConnectivityMatrix  # canonical representative
    u: QuadNum
    v: QuadNum
    p: QuadNum
    q: QuadNum
    lam: QuadNum  # signed eigenvalue of M, |lam| > 1
    mu: QuadNum
    isolated: bool

    @property
    def abs_lam(self) -> QuadNum:
        return abs(self.lam)

    def dims_json(self) -> dict:
        return {
            "u": self.u.to_json(),
            "v": self.v.to_json(),
            "p": self.p.to_json(),
            "q": self.q.to_json(),
        }


def shape_from_basis(m: Mat2Z, bp: BasisPair, index: int = 0) -> BergShape:
    """Build the Berg shape carried by one fan node of M."""
    ed = bp.ctx
    b = bp.matrix()
    sign = 1 if m.trace() > 0 else -1
    rep = (b.inverse() @ m) @ b
    c_raw = ConnectivityMatrix.from_mat((rep * sign).transpose())
    se, ue = ed.frame_coords(bp.e)
    sf, uf = ed.frame_coords(bp.f)
    den = se * uf - sf * ue
    u, v = -sf, se
    p, q = ue / den, uf / den
    one = QuadNum(ed.disc, 1)
    assert u * p + v * q == one
    # covering and packing identities, exactly
    al = abs(ed.lam)
    k, l, mm, n = c_raw.entries()
    assert al * p == k * p + l * q and al * q == mm * p + n * q
    assert al * u == k * u + mm * v and al * v == l * u + n * v
    return BergShape(
        index=index,
        basis=bp,
        C_raw=c_raw,
        C=c_raw.canonical(),
        u=u,
        v=v,
        p=p,
        q=q,
        lam=ed.lam,
        mu=ed.mu,
        isolated=is_isolated(c_raw),
    )


def shapes(m: Mat2Z, word: CuttingWord | None = None) -> list[BergShape]:
    """The N distinct Berg shapes of M, at fan indices 0..N-1."""
    if word is None:
        word = cutting_word(m)
    bases = fan_bases(m, word.N, word.basis0.ctx)
    return [shape_from_basis(m, bp, i) for i, bp in enumerate(bases)]


def connectivity_matrices(
    m: Mat2Z, word: CuttingWord | None = None
) -> list[ConnectivityMatrix]:
    """Canonical connectivity matrices of M, indexed by fan position."""
    return [s.C for s in shapes(m, word)]


def total_berg_count(m: Mat2Z, word: CuttingWord | None = None) -> int:
    """Total number of nonequivalent Berg partitions of M."""
    return sum(count_berg(c) for c in connectivity_matrices(m, word))


def all_ones_total(n: int) -> int:
    """Closed form for the all-ones semi-period of length N."""
    if n % 2 == 1:
        return n * (n * n + 6 * n + 5) // 12
    return n * (n * n + 6 * n + 8) // 12


def w_poly(x: int, y: int) -> Fraction:
    """W(x, y) in the periodic-word closed form."""
    num = (x * x + y * y) * (x * y + 6) + 6 * (x + y) * (x * y + 1) + 10 * x * y
    return Fraction(num, 12)


def periodic_word_total(n_ones: int, n_zeros: int) -> int:
    """Closed form for a periodic word with n_ones 1s and n_zeros 0s.

    Only stated for n_ones != n_zeros, and for odd length only when the
    count of 1s is even (relabel the letters otherwise).
    """
    if n_ones == n_zeros:
        raise ValueError("closed form requires n_ones != n_zeros")
    total = w_poly(n_ones, n_zeros)
    if (n_ones + n_zeros) % 2 == 1:
        if n_ones % 2 == 1:
            raise ValueError("odd-length form needs an even count of 1s")
        total += Fraction(n_ones, 4)
    assert total.denominator == 1
    return int(total)


@dataclass(frozen=True)
class SymmetryReport:
    has_order4: bool
    has_simple2: bool
    has_shift2: bool
    paper_type: str  # "I".."VI" or "none"
    witness: str

    def to_json(self) -> dict:
        return {
            "order4": self.has_order4,
            "simple2": self.has_simple2,
            "shift2": self.has_shift2,
            "type": self.paper_type,
            "witness": self.witness,
        }


def classify_symmetry(w: CuttingWord) -> SymmetryReport:
    """Detect reversal symmetries of the cutting sequence.

    The reversed sequence is s_{-n-1}; an alignment with shift t against
    the sequence itself is an order-2 symmetry (simple when t is even,
    shift type when odd), an alignment against the complement has order 4.
    """
    full = [int(ch) for ch in w.full_period()]
    period = len(full)
    simple2 = shift2 = order4 = False
    witness = ""

    def reversed_match(t: int, complement: bool) -> bool:
        return all(
            full[j] == (1 - full[(t - 1 - j) % period] if complement
                        else full[(t - 1 - j) % period])
            for j in range(period)
        )

    for t in range(2 * period):
        if reversed_match(t, False):
            if t % 2 == 0:
                simple2 = True
            else:
                shift2 = True
            if not witness:
                witness = f"reverse matches at shift {t}"
        if reversed_match(t, True):
            if not order4:
                witness = witness or f"complemented reverse matches at shift {t}"
            order4 = True

    if w.kind == "semi-period":
        if order4:
            paper_type = "V" if w.N % 2 == 1 else "VI"
        else:
            paper_type = "none"
    else:
        if order4:
            paper_type = "IV" if w.N % 2 == 0 else "none"
        elif simple2:
            paper_type = "I" if w.N % 2 == 0 else "II"
        elif shift2 and w.N % 2 == 0:
            paper_type = "III"
        else:
            paper_type = "none"
    return SymmetryReport(
        has_order4=order4,
        has_simple2=simple2,
        has_shift2=shift2,
        paper_type=paper_type,
        witness=witness or "no reversal symmetry",
    )


def matrix_report(m: Mat2Z) -> dict:
    """Full JSON-ready analysis record for one matrix."""
    word = cutting_word(m)
    shape_list = shapes(m, word)
    sym = classify_symmetry(word)
    out = {
        "matrix": m.rows(),
        "word": word.word,
        "kind": word.kind,
        "N": word.N,
        "K": word.K,
        "sign": word.sign,
        "generator": word.G.rows(),
        "basis0": word.basis0.to_json(),
        "shapes": [],
        "symmetry": sym.to_json(),
        "total": 0,
    }
    total = 0
    for s in shape_list:
        count = count_berg(s.C)
        total += count
        rec = {
            "index": s.index,
            "C": s.C.rows(),
            "count": count,
            "isolated": s.isolated,
            "dims": s.dims_json(),
        }
        if s.isolated:
            rec["hinged_pairs"] = hinged_pairs_isolated(s.C)
        else:
            rec["hinged_bound"] = hinged_bound_connected(s.C)
        out["shapes"].append(rec)
    out["total"] = total
    return out
