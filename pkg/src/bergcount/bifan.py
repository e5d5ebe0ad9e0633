"""The cutting algorithm on lattice bases and the bi-fan of a matrix.

A node of the bi-fan is an ordered unimodular basis {e, f} of Z^2 with e
strictly inside the first quadrant of the (stable, unstable) eigenframe
and f strictly inside the second.  Walking the fan forward emits the
binary cutting sequence; the basic (semi-)period yields the generator of
the GL(2,Z) centralizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import Mat2Z, NotHyperbolicError
from .qfield import EigenData, eigen_data

E1 = Mat2Z(1, 0, 1, 1)  # right factor when the bit is 1 (f is kept)
E0 = Mat2Z(1, 1, 0, 1)  # right factor when the bit is 0 (e is kept)
SIGMA = Mat2Z(0, 1, 1, 0)

Vec = tuple[int, int]


def _add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1])


def _sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1])


def _neg(u: Vec) -> Vec:
    return (-u[0], -u[1])


@dataclass(frozen=True)
class BasisPair:
    """One node of the bi-fan: e in quadrant I, f in quadrant II."""

    e: Vec
    f: Vec
    ctx: EigenData

    def matrix(self) -> Mat2Z:
        return Mat2Z.from_columns(self.e, self.f)

    def is_fan_node(self) -> bool:
        if abs(self.matrix().det()) != 1:
            return False
        se, ue = self.ctx.frame_signs(self.e)
        sf, uf = self.ctx.frame_signs(self.f)
        return se > 0 and ue > 0 and sf < 0 and uf > 0

    def to_json(self) -> dict:
        return {"e": list(self.e), "f": list(self.f)}


@dataclass(frozen=True)
class CuttingWord:
    """Basic (semi-)period of the cutting sequence plus the generator."""

    word: str
    kind: str  # "period" | "semi-period"
    N: int
    G: Mat2Z  # generator, in standard lattice coordinates
    K: int  # G^K == sign * M
    sign: int
    basis0: BasisPair

    def bit(self, n: int) -> int:
        """Bit s_n of the doubly infinite cutting sequence."""
        period = self.N if self.kind == "period" else 2 * self.N
        k = n % period
        raw = int(self.word[k % self.N])
        if self.kind == "semi-period" and k >= self.N:
            raw = 1 - raw
        return raw

    def full_period(self) -> str:
        if self.kind == "period":
            return self.word
        return self.word + "".join(str(1 - int(ch)) for ch in self.word)

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "kind": self.kind,
            "N": self.N,
            "K": self.K,
            "sign": self.sign,
            "generator": self.G.rows(),
            "basis0": self.basis0.to_json(),
        }


def seed_basis(ed: EigenData) -> BasisPair:
    """A fan node reached from the standard basis by the cutting step."""
    a: Vec = (1, 0)
    b: Vec = (0, 1)
    if ed.frame_signs(a)[0] < 0:
        a = _neg(a)
    if ed.frame_signs(b)[0] > 0:
        b = _neg(b)
    # invariant: a right of the unstable line, b left of it
    while True:
        sa, ua = ed.frame_signs(a)
        sb, ub = ed.frame_signs(b)
        if ua > 0 and ub > 0:
            break
        if ua < 0 and ub < 0:
            # the cone closed around the negative unstable branch; the
            # flipped pair straddles the positive one
            a, b = _neg(b), _neg(a)
            continue
        c = _add(a, b)
        if ed.frame_signs(c)[0] > 0:
            a = c
        else:
            b = c
    bp = BasisPair(a, b, ed)
    assert bp.is_fan_node()
    return bp


def step_forward(bp: BasisPair) -> tuple[BasisPair, int]:
    """Successor node and the emitted bit s_n."""
    c = _add(bp.e, bp.f)
    if bp.ctx.frame_signs(c)[0] > 0:  # c in quadrant I: f is kept
        return BasisPair(c, bp.f, bp.ctx), 1
    return BasisPair(bp.e, c, bp.ctx), 0


def step_backward(bp: BasisPair) -> tuple[BasisPair, int]:
    """Predecessor node and the bit s_{n-1}."""
    g = _sub(bp.e, bp.f)
    if bp.ctx.frame_signs(g)[1] <= 0:
        g = _neg(g)
    if bp.ctx.frame_signs(g)[0] < 0:  # g in quadrant II
        return BasisPair(bp.e, g, bp.ctx), 0
    return BasisPair(g, bp.f, bp.ctx), 1


def reconstruct(bp: BasisPair, bits) -> BasisPair:
    """Apply a word segment as a product of elementary column operations."""
    m = bp.matrix()
    for bit in bits:
        m = m @ (E1 if int(bit) else E0)
    (e0, e1), (f0, f1) = m.columns()
    return BasisPair((e0, e1), (f0, f1), bp.ctx)


def word_matrix(bits, semi: bool = False) -> Mat2Z:
    """The basis representation of the generator for a given word."""
    m = Mat2Z.identity()
    for bit in bits:
        m = m @ (E1 if int(bit) else E0)
    if semi:
        m = m @ SIGMA
    return m


_MAX_PERIOD_SEARCH = 4096


def cutting_word(m: Mat2Z, ed: EigenData | None = None) -> CuttingWord:
    """Cutting sequence of M's eigenframe with basic (semi-)period data.

    Starting from the seed node, forward steps are taken until the map
    sending the seed basis to the current one (directly, or with e/f
    exchanged) commutes with M; commutation is the exact period test.
    """
    if ed is None:
        ed = eigen_data(m)
    b0 = seed_basis(ed)
    m0 = b0.matrix()
    m0_inv = m0.inverse()
    bits: list[int] = []
    bp = b0
    for _ in range(_MAX_PERIOD_SEARCH):
        bp, bit = step_forward(bp)
        bits.append(bit)
        bn = bp.matrix()
        t_semi = (bn @ SIGMA) @ m0_inv
        if t_semi @ m == m @ t_semi:
            g, kind = t_semi, "semi-period"
            break
        t_per = bn @ m0_inv
        if t_per @ m == m @ t_per:
            g, kind = t_per, "period"
            break
    else:  # pragma: no cover - termination is guaranteed by hyperbolicity
        raise AssertionError(f"no (semi-)period found for {m}")
    n = len(bits)
    word = "".join(str(b) for b in bits)
    k, sign = _power_match(g, m)
    return CuttingWord(word=word, kind=kind, N=n, G=g, K=k, sign=sign, basis0=b0)


def _power_match(g: Mat2Z, m: Mat2Z) -> tuple[int, int]:
    """Smallest K >= 1 with G^K == +/-M; entries of G^K grow monotonically."""
    bound = m.max_abs()
    p = g
    k = 1
    while True:
        if p == m:
            return k, 1
        if p == -m:
            return k, -1
        if p.max_abs() > bound or k > 256:
            raise AssertionError(f"generator {g} never reaches +/-{m}")
        p = p @ g
        k += 1


def fan_bases(m: Mat2Z, count: int, ed: EigenData | None = None) -> list[BasisPair]:
    """The first `count` fan nodes starting at the seed node (index 0)."""
    if ed is None:
        ed = eigen_data(m)
    bp = seed_basis(ed)
    out = [bp]
    for _ in range(count - 1):
        bp, _bit = step_forward(bp)
        out.append(bp)
    return out


def nonneg_representation_scan(m: Mat2Z, bound: int) -> list[BasisPair]:
    """All small unimodular bases representing M or its generator by a
    nonnegative matrix.

    Exhaustive over entries in [-bound, bound]; every hit is expected to
    be a fan node up to the sign flip {a, b} -> {-a, -b}.
    """
    if not m.is_hyperbolic():
        raise NotHyperbolicError(f"{m} is not hyperbolic")
    ed = eigen_data(m)
    g = cutting_word(m, ed).G
    hits = []
    rng = range(-bound, bound + 1)
    for a0 in rng:
        for a1 in rng:
            for b0 in rng:
                for b1 in rng:
                    basis = Mat2Z(a0, b0, a1, b1)
                    if abs(basis.det()) != 1:
                        continue
                    inv = basis.inverse()
                    for target in (m, g):
                        rep = (inv @ target) @ basis
                        if (
                            rep.a >= 0
                            and rep.b >= 0
                            and rep.c >= 0
                            and rep.d >= 0
                        ):
                            hits.append(BasisPair((a0, a1), (b0, b1), ed))
                            break
    return hits
