"""Deterministic SVG drawings of bi-partitions.

All geometry arrives exact; conversion to floats happens only here, at a
fixed decimal precision, so identical inputs give byte-identical output.
The two rectangles are drawn in the standard arrangement: the u-by-p
rectangle left of the origin, the v-by-q rectangle to the right, with the
lattice generated by e = (v, p) and f = (-u, q).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .berg import BergShape, shapes
from .bifan import CuttingWord, cutting_word
from .intmat import Mat2Z
from .oracle import BergPlacement
from .qfield import QuadNum

DEFAULT_SHOW = {
    "tiling": True,
    "spines": True,
    "fixed_points": True,
    "image_overlay": False,
    "middles": False,
    "neighbor_labels": False,
}


@dataclass
class RenderSpec:
    shape: BergShape
    placement: BergPlacement | None = None
    show: dict = field(default_factory=lambda: dict(DEFAULT_SHOW))
    width: int = 480
    height: int = 480
    precision: int = 6


class _Canvas:
    """Maps exact torus coordinates to pixel space, y axis pointing up."""

    def __init__(self, spec: RenderSpec, x0, x1, y0, y1):
        if spec.width < 40 or spec.height < 40:
            raise ValueError("canvas too small")
        margin = 12.0
        sx = (spec.width - 2 * margin) / (x1 - x0)
        sy = (spec.height - 2 * margin) / (y1 - y0)
        self.scale = min(sx, sy)
        if self.scale <= 0:
            raise ValueError("canvas too small")
        self.margin = margin
        self.x0, self.y1 = x0, y1
        self.height = spec.height
        self.prec = spec.precision

    def fmt(self, value: float) -> str:
        out = f"{value:.{self.prec}f}".rstrip("0").rstrip(".")
        return "0" if out in ("-0", "") else out

    def pt(self, x: float, y: float) -> tuple[str, str]:
        px = self.margin + (x - self.x0) * self.scale
        py = self.margin + (self.y1 - y) * self.scale
        return self.fmt(px), self.fmt(py)

    def rect(self, x0, y0, x1, y1, style: str, extra: str = "") -> str:
        ax, ay = self.pt(min(x0, x1), max(y0, y1))
        bx, by = self.pt(max(x0, x1), min(y0, y1))
        w = self.fmt(float(bx) - float(ax))
        h = self.fmt(float(by) - float(ay))
        return f'<rect x="{ax}" y="{ay}" width="{w}" height="{h}" {style}{extra}/>'

    def line(self, x0, y0, x1, y1, style: str) -> str:
        ax, ay = self.pt(x0, y0)
        bx, by = self.pt(x1, y1)
        return f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {style}/>'

    def circle(self, x, y, r: float, style: str) -> str:
        ax, ay = self.pt(x, y)
        return f'<circle cx="{ax}" cy="{ay}" r="{self.fmt(r)}" {style}/>'

    def text(self, x, y, s: str, style: str) -> str:
        ax, ay = self.pt(x, y)
        return f'<text x="{ax}" y="{ay}" {style}>{s}</text>'


R1_STYLE = 'fill="#c8dcf0" stroke="#335577" stroke-width="1"'
R2_STYLE = 'fill="#f0dcc8" stroke="#775533" stroke-width="1"'
TILE_STYLE = 'fill="none" stroke="#999999" stroke-width="0.5" stroke-dasharray="3,2"'
SPINE_H = 'stroke="#cc2222" stroke-width="2"'
SPINE_V = 'stroke="#2222cc" stroke-width="2"'
MIDDLE_STYLE = 'stroke="#22aa22" stroke-width="4" stroke-opacity="0.6"'
OVERLAY_STYLE = 'fill="none" stroke="#aa22aa" stroke-width="1" stroke-dasharray="5,3"'
FIXED_STYLE = 'fill="#111111"'
LABEL_STYLE = 'font-family="monospace" font-size="11" fill="#222222"'


def rectangle_corners(shape: BergShape) -> dict[str, tuple[float, float, float, float]]:
    """Float corners (x0, y0, x1, y1) of R1 and R2 in torus coordinates."""
    u, v, p, q = (float(shape.u), float(shape.v), float(shape.p), float(shape.q))
    return {"R1": (-u, 0.0, 0.0, p), "R2": (0.0, 0.0, v, q)}


def lattice_vectors(shape: BergShape) -> tuple[tuple[float, float], tuple[float, float]]:
    u, v, p, q = (float(shape.u), float(shape.v), float(shape.p), float(shape.q))
    return (v, p), (-u, q)


def _metadata(spec: RenderSpec) -> str:
    sh = spec.shape
    meta = {
        "index": sh.index,
        "C": sh.C.rows(),
        "dims": sh.dims_json(),
        "lam": sh.lam.to_json(),
        "mu": sh.mu.to_json(),
        "isolated": sh.isolated,
        "area": 1,
    }
    if spec.placement is not None:
        meta["placement"] = {
            "lattice_point": list(spec.placement.lattice_point),
            "offset_h": spec.placement.offset_h.to_json(),
            "offset_v": spec.placement.offset_v.to_json(),
        }
    return json.dumps(meta, sort_keys=True, separators=(",", ":"))


def render_bipartition(spec: RenderSpec) -> str:
    sh = spec.shape
    u, v, p, q = (float(sh.u), float(sh.v), float(sh.p), float(sh.q))
    lam, mu = float(sh.lam), float(sh.mu)
    ext = max(u + v, p + q)
    cv = _Canvas(spec, -u - 0.25 * ext, v + 0.25 * ext, -0.25 * ext, max(p, q) + 0.25 * ext)
    body: list[str] = []

    e_vec, f_vec = (v, p), (-u, q)
    if spec.show.get("tiling"):
        for i in (-1, 0, 1):
            for j in (-1, 0, 1):
                dx = i * e_vec[0] + j * f_vec[0]
                dy = i * e_vec[1] + j * f_vec[1]
                style = TILE_STYLE if (i, j) != (0, 0) else None
                if style:
                    body.append(cv.rect(-u + dx, dy, 0 + dx, p + dy, style))
                    body.append(cv.rect(0 + dx, dy, v + dx, q + dy, style))
    body.append(cv.rect(-u, 0, 0, p, R1_STYLE))
    body.append(cv.rect(0, 0, v, q, R2_STYLE))

    if spec.show.get("image_overlay"):
        # images of the rectangles under the map, axis aligned, scaled by
        # mu horizontally and lam vertically about the origin
        body.append(cv.rect(mu * -u, 0, 0, lam * p, OVERLAY_STYLE))
        body.append(cv.rect(0, 0, mu * v, lam * q, OVERLAY_STYLE))

    if spec.show.get("spines"):
        body.append(cv.line(-u, 0, v, 0, SPINE_H))
        body.append(cv.line(0, -q, 0, p, SPINE_V))

    if spec.show.get("middles"):
        beta = abs(lam)
        # central subinterval of relative length (beta-1)/(beta+1)
        ls, lu = u + v, p + q
        cs = ls * (beta - 1) / (beta + 1)
        cu = lu * (beta - 1) / (beta + 1)
        mid_s = (-u + v) / 2
        mid_u = (p - q) / 2
        body.append(cv.line(mid_s - cs / 2, 0, mid_s + cs / 2, 0, MIDDLE_STYLE))
        body.append(cv.line(0, mid_u - cu / 2, 0, mid_u + cu / 2, MIDDLE_STYLE))

    if spec.show.get("fixed_points"):
        if spec.placement is not None:
            oh = float(spec.placement.offset_h)
            ov = float(spec.placement.offset_v)
            body.append(cv.circle(oh - u, 0, 3.0, FIXED_STYLE))
            body.append(cv.circle(0, ov - q, 3.0, FIXED_STYLE))
        else:
            body.append(cv.circle(0, 0, 3.0, FIXED_STYLE))

    if spec.show.get("neighbor_labels"):
        body.append(cv.text(-u / 2, p / 2, "R1", LABEL_STYLE))
        body.append(cv.text(v / 2, q / 2, "R2", LABEL_STYLE))
        body.append(cv.text(e_vec[0] - u / 2, e_vec[1] + p / 2, "R1+e", LABEL_STYLE))
        body.append(cv.text(f_vec[0] + v / 2, f_vec[1] + q / 2, "R2+f", LABEL_STYLE))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f"<metadata>{_metadata(spec)}</metadata>",
        *body,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_fan(m: Mat2Z, from_index: int, to_index: int,
               panel: int = 220, precision: int = 6) -> str:
    """A row of successive bi-partition shapes, labeled with index and bit."""
    if to_index < from_index:
        raise ValueError("empty index range")
    if from_index < 0:
        raise ValueError("fan panels start at index 0")
    word = cutting_word(m)
    shape_list = shapes(m, word)
    panels = []
    for idx in range(from_index, to_index + 1):
        sh = shape_list[idx % word.N] if idx < word.N else None
        if sh is None:
            # indices past one (semi-)period repeat the same shapes
            sh = shape_list[idx % word.N]
        spec = RenderSpec(sh, width=panel, height=panel, precision=precision)
        spec.show = dict(DEFAULT_SHOW)
        spec.show["fixed_points"] = False
        svg = render_bipartition(spec)
        inner = svg.split("\n", 1)[1].rsplit("</svg>", 1)[0]
        x = (idx - from_index) * panel
        label = (f'<text x="8" y="14" font-family="monospace" font-size="12" '
                 f'fill="#222222">n={idx} s={word.bit(idx)}</text>')
        panels.append(f'<g transform="translate({x},0)">\n{inner}{label}\n</g>')
    width = (to_index - from_index + 1) * panel
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{panel}" viewBox="0 0 {width} {panel}">',
        *panels,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
