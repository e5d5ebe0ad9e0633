"""Brute-force verification of the counting formulas.

Placements of a Berg partition with a fixed shape correspond to points of
the superlattice (D - I)^(-1) L inside the box P = [-u, v] x [0, p+q] drawn
in eigen-coordinates, subject to middle conditions when an eigenvalue is
negative.  Everything here enumerates such points exactly and quotients by
the central symmetry of P, independently of the closed-form counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .berg import BergShape, ConnectivityMatrix, count_berg, shape_from_basis
from .bifan import BasisPair
from .intmat import Mat2Z, TorusPointQ, is_fixed_point
from .qfield import QuadNum, eigen_data

Vec = tuple[int, int]


@dataclass(frozen=True)
class PlacementBox:
    """The box P of one shape together with the superlattice frame.

    Lattice points are handled in the integer coordinates of the basis
    {e', f'} with e' = (M - I)^(-1) e and f' = (M - I)^(-1) f.  In that
    basis e and f themselves have the integer coordinates col_e, col_f,
    the columns of sign(tr M) * C^T - I.
    """

    shape: BergShape
    mat: Mat2Z  # the automorphism the box belongs to (after reduction)
    case_id: int  # 1: lam,mu > 0; 2: lam < 0 < mu; 3: lam,mu < 0
    col_e: Vec
    col_f: Vec

    def eprime_std(self) -> tuple[Fraction, Fraction]:
        return self._prime_std(self.shape.basis.e)

    def fprime_std(self) -> tuple[Fraction, Fraction]:
        return self._prime_std(self.shape.basis.f)

    def _prime_std(self, w: Vec) -> tuple[Fraction, Fraction]:
        mi = self.mat - Mat2Z.identity()
        d = mi.det()
        # adjugate over determinant
        x = Fraction(mi.d * w[0] - mi.b * w[1], d)
        y = Fraction(-mi.c * w[0] + mi.a * w[1], d)
        return x, y

    def center_sum(self) -> Vec:
        return (self.col_e[0] + self.col_f[0], self.col_e[1] + self.col_f[1])


@dataclass(frozen=True)
class BergPlacement:
    shape: BergShape
    lattice_point: Vec
    p1: TorusPointQ  # anchors the horizontal spine J^s
    p2: TorusPointQ  # anchors the vertical spine J^u
    offset_h: QuadNum  # position of p2 - p1 along J^s, in [0, u+v]
    offset_v: QuadNum  # position along J^u, in [0, p+q]


def build_box(shape: BergShape, m: Mat2Z) -> PlacementBox:
    """Attach the placement box to a shape; the (det = -1, tr > 0) sign
    combination is reduced to the inverse map, which shares the fixed
    points and carries the transposed connectivity matrix."""
    if m.det() == -1 and m.trace() > 0:
        return build_box(_dual_shape(shape, m), m.inverse())
    tr = m.trace()
    assert tr != 0
    if m.det() == 1:
        case_id = 1 if tr > 0 else 3
    else:
        assert tr < 0
        case_id = 2
    s = 1 if tr > 0 else -1
    k, l, mm, n = shape.C_raw.entries()
    col_e = (s * k - 1, s * l)
    col_f = (s * mm, s * n - 1)
    return PlacementBox(shape, m, case_id, col_e, col_f)


def _dual_shape(shape: BergShape, m: Mat2Z) -> BergShape:
    """The shape of M^(-1) carried by the same lattice basis, with vectors
    re-signed to land in the eigen-quadrants of the inverse map."""
    mi = m.inverse()
    ed = eigen_data(mi)
    cand = []
    for w in (shape.basis.e, shape.basis.f):
        for v in (w, (-w[0], -w[1])):
            ss, us = ed.frame_signs(v)
            if us > 0:
                cand.append((ss, v))
    first = [v for ss, v in cand if ss > 0]
    second = [v for ss, v in cand if ss < 0]
    assert len(first) == 1 and len(second) == 1
    bp = BasisPair(first[0], second[0], ed)
    assert bp.is_fan_node()
    dual = shape_from_basis(mi, bp, shape.index)
    assert dual.C_raw.entry_sum() == shape.C_raw.entry_sum()
    return dual


def box_points(box: PlacementBox) -> tuple[list[Vec], list[Vec]]:
    """All superlattice points of the closed box P, and the admissible
    subset after the middle conditions for negative eigenvalues.

    Returns (raw, admissible), each a sorted list of integer pairs.
    """
    sh = box.shape
    u, v, p, q = sh.u, sh.v, sh.p, sh.q
    lam, mu = sh.lam, sh.mu
    disc = lam.disc
    one = QuadNum(disc, 1)
    zero = QuadNum(disc, 0)

    # A = i*p + j*q = (lam-1)*y with y in [0, p+q]
    # B = i*v - j*u = (mu-1)*x with x in [-u, v]
    a_ends = sorted([zero, (lam - 1) * (p + q)])
    b_ends = sorted([(mu - 1) * v, (one - mu) * u])
    # invert (i = A*u + B*q, j = A*v - B*p since up + vq = 1)
    i_lo = math.floor(a_ends[0] * u + b_ends[0] * q)
    i_hi = -math.floor(-(a_ends[1] * u + b_ends[1] * q))
    j_lo = math.floor(a_ends[0] * v - b_ends[1] * p)
    j_hi = -math.floor(-(a_ends[1] * v - b_ends[0] * p))

    lam_abs = abs(lam)
    neg_lam = lam.sign() < 0
    neg_mu = mu.sign() < 0
    pq = p + q
    raw: list[Vec] = []
    adm: list[Vec] = []
    for i in range(i_lo, i_hi + 1):
        for j in range(j_lo, j_hi + 1):
            a = i * p + j * q
            if not _between(a, a_ends[0], a_ends[1]):
                continue
            b = i * v - j * u
            if not _between(b, b_ends[0], b_ends[1]):
                continue
            raw.append((i, j))
            y = a / (lam - 1)
            x = b / (mu - 1)
            if neg_lam:
                t = y * (lam_abs + 1)
                if not _between(t, pq, pq * lam_abs):
                    continue
            if neg_mu:
                t = x * (lam_abs + 1)
                if not _between(t, v - u * lam_abs, v * lam_abs - u):
                    continue
            adm.append((i, j))
    raw.sort()
    adm.sort()
    return raw, adm


def _between(x: QuadNum, lo: QuadNum, hi: QuadNum) -> bool:
    return lo <= x <= hi


def placement_lattice_points(shape: BergShape, m: Mat2Z) -> list[Vec]:
    """Admissible superlattice points of the shape's box."""
    return box_points(build_box(shape, m))[1]


def quotient_by_equivalence(points: list[Vec], box: PlacementBox) -> int:
    """Number of placement classes under the central symmetry of P."""
    cx, cy = box.center_sum()
    pts = set(points)
    seen: set[Vec] = set()
    classes = 0
    for pt in points:
        if pt in seen:
            continue
        partner = (cx - pt[0], cy - pt[1])
        assert partner in pts, f"set not centrally symmetric at {pt}"
        seen.add(pt)
        seen.add(partner)
        classes += 1
    return classes


def hinged_chain_sizes(points: list[Vec], box: PlacementBox) -> list[int]:
    """Sizes of the maximal chains of admissible points under translation
    by e alone or by f alone.  Partitions whose points lie in one chain
    are hinged: they share the fixed points in their skeletons."""
    pts = set(points)
    sizes = []
    for step in (box.col_e, box.col_f):
        for pt in points:
            prev = (pt[0] - step[0], pt[1] - step[1])
            if prev in pts:
                continue  # not the start of a chain
            size = 0
            cur = pt
            while cur in pts:
                size += 1
                cur = (cur[0] + step[0], cur[1] + step[1])
            sizes.append(size)
    return sorted(sizes, reverse=True)


def max_hinged_family(points: list[Vec], box: PlacementBox) -> int:
    return max(hinged_chain_sizes(points, box))


def hinged_pair_count(points: list[Vec], box: PlacementBox) -> int:
    """Number of hinged pairs among the placement classes of an isolated
    shape: equivalence classes whose two member placements are translates
    of each other by e or by f."""
    cx, cy = box.center_sum()
    count = 0
    seen: set[Vec] = set()
    for pt in points:
        partner = (cx - pt[0], cy - pt[1])
        if partner == pt or pt in seen:
            continue
        seen.add(pt)
        seen.add(partner)
        d = (partner[0] - pt[0], partner[1] - pt[1])
        for step in (box.col_e, box.col_f):
            if d == step or d == (-step[0], -step[1]):
                count += 1
                break
    return count


def fixed_pair_cosets(points: list[Vec], box: PlacementBox) -> int:
    """Number of distinct fixed-point pairs realized by admissible points
    (cosets of the original lattice inside the superlattice)."""
    (e1, e2), (f1, f2) = box.col_e, box.col_f
    det = e1 * f2 - e2 * f1
    cosets = set()
    for i, j in points:
        alpha = Fraction(i * f2 - j * f1, det)
        beta = Fraction(e1 * j - e2 * i, det)
        cosets.add((alpha % 1, beta % 1))
    return len(cosets)


def realize_placement(shape: BergShape, m: Mat2Z, pt: Vec) -> BergPlacement:
    """Concrete placement for one admissible lattice point: p1 at the
    origin, p2 at the projection of the superlattice point."""
    box = build_box(shape, m)
    sh = box.shape
    i, j = pt
    ex, ey = box.eprime_std()
    fx, fy = box.fprime_std()
    wx, wy = i * ex + j * fx, i * ey + j * fy
    p1 = TorusPointQ(Fraction(0), Fraction(0))
    p2 = TorusPointQ(wx, wy)
    lam, mu = sh.lam, sh.mu
    u, v, p, q = sh.u, sh.v, sh.p, sh.q
    x = (i * v - j * u) / (mu - 1)
    y = (i * p + j * q) / (lam - 1)
    offset_h = v - x
    offset_v = y
    zero = QuadNum(lam.disc, 0)
    if not (zero <= offset_h <= u + v and zero <= offset_v <= p + q):
        raise ValueError(f"infeasible placement at {pt}")
    return BergPlacement(sh, pt, p1, p2, offset_h, offset_v)


def verify_markov(pl: BergPlacement, m: Mat2Z) -> bool:
    """Exact Markov check: both anchors are fixed points, the contracted
    horizontal spine stays inside itself, and the vertical spine lies
    inside its expanded image."""
    if not is_fixed_point(m, pl.p1) or not is_fixed_point(m, pl.p2):
        return False
    sh = pl.shape
    # the (det = -1, tr > 0) box belongs to the inverse map, which shares
    # its Berg partitions; check the Markov property for that map
    lam, mu = sh.lam, sh.mu
    zero = QuadNum(lam.disc, 0)
    ls = sh.u + sh.v
    lu = sh.p + sh.q
    oh, ov = pl.offset_h, pl.offset_v
    if not (zero <= oh <= ls and zero <= ov <= lu):
        return False
    amu = abs(mu)
    if mu.sign() > 0:
        lo, hi = oh - amu * oh, oh + amu * (ls - oh)
    else:
        lo, hi = oh - amu * (ls - oh), oh + amu * oh
    if not (zero <= lo and hi <= ls):
        return False
    alam = abs(lam)
    if lam.sign() > 0:
        lo, hi = ov - alam * ov, ov + alam * (lu - ov)
    else:
        lo, hi = ov - alam * (lu - ov), ov + alam * ov
    return lo <= zero and lu <= hi


def verify_shape(shape: BergShape, m: Mat2Z) -> dict:
    """One verification record: oracle counts against the closed form."""
    box = build_box(shape, m)
    raw, adm = box_points(box)
    classes = quotient_by_equivalence(adm, box)
    formula = count_berg(shape.C)
    return {
        "C": shape.C.rows(),
        "box_points": len(raw),
        "raw_points": len(adm),
        "classes": classes,
        "formula": formula,
        "match": classes == formula,
        "case_id": box.case_id,
    }


def pick_check(v1: Vec, v2: Vec) -> bool:
    """Pick's lemma on the closed parallelogram spanned by v1, v2:
    area = interior + (boundary excluding vertices)/2 + 1."""
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise ValueError("degenerate parallelogram")
    area = abs(det)
    xs = [0, v1[0], v2[0], v1[0] + v2[0]]
    ys = [0, v1[1], v2[1], v1[1] + v2[1]]
    interior = boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            # barycentric coordinates in the v1, v2 frame
            a = Fraction(x * v2[1] - y * v2[0], det)
            b = Fraction(y * v1[0] - x * v1[1], det)
            if not (0 <= a <= 1 and 0 <= b <= 1):
                continue
            on_edge = a in (0, 1) or b in (0, 1)
            vertex = a in (0, 1) and b in (0, 1)
            if vertex:
                continue
            if on_edge:
                boundary += 1
            else:
                interior += 1
    return area == interior + Fraction(boundary, 2) + 1
