"""SVG figures for region documents.

The disk/half-plane families are drawn as exact vector primitives in data
coordinates (a uniform scale maps data to pixels, so circle attributes can
be read back verbatim).  The chordal and Kostic sets have no simple
Euclidean boundary and are rasterized on a grid; each cell is painted when
its center passes the membership predicate inflated by half the cell
diagonal (scaled by the per-row Lipschitz constant for the Kostic set), so
any cell that meets the set is painted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DataError,
    Disk,
    DiskComplement,
    HalfPlane,
    Intersection,
    Pencil,
    PointAtInfinity,
    Region,
    WholePlane,
)
from .document import RegionDocument, region_from_dict
from .reference import chordal_mask, kostic_mask, kostic_row_lipschitz

__all__ = ["ViewportDegenerate", "RenderOptions", "auto_viewport", "render_svg"]


class ViewportDegenerate(DataError):
    """An explicitly requested viewport has no area."""


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    grid: int = 400
    viewport: tuple[float, float, float, float] | None = None
    include_chordal: bool = True
    include_kostic: bool = True
    markers: bool = True

    def __post_init__(self):
        if self.viewport is not None:
            xmin, xmax, ymin, ymax = self.viewport
            if not (xmax > xmin and ymax > ymin):
                raise ViewportDegenerate(f"viewport {self.viewport} has no area")


def _fmt(value: float) -> str:
    value = float(value)
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _feature_boxes(region: Region) -> list[tuple[float, float, float, float]]:
    if isinstance(region, (Disk, DiskComplement)):
        c, r = region.center, region.radius
        return [(c.real - r, c.real + r, c.imag - r, c.imag + r)]
    if isinstance(region, HalfPlane):
        a = region.alpha
        return [(0.0, 0.0, 0.0, 0.0), (a.real, a.real, a.imag, a.imag)]
    if isinstance(region, Intersection):
        return _feature_boxes(region.left) + _feature_boxes(region.right)
    return []  # whole plane / point at infinity contribute nothing finite


def auto_viewport(regions, points=(), margin: float = 0.2):
    """Bounding box of all finite region features and points, padded by margin.

    Falls back to a unit-sized viewport when the features collapse to a
    single point (or there are none at all).
    """
    boxes = []
    for region in regions:
        boxes.extend(_feature_boxes(region))
    for p in points:
        p = complex(p)
        boxes.append((p.real, p.real, p.imag, p.imag))
    if not boxes:
        return (-0.5, 0.5, -0.5, 0.5)
    xmin = min(b[0] for b in boxes)
    xmax = max(b[1] for b in boxes)
    ymin = min(b[2] for b in boxes)
    ymax = max(b[3] for b in boxes)
    span = max(xmax - xmin, ymax - ymin)
    if span == 0.0:
        return (xmin - 0.5, xmax + 0.5, ymin - 0.5, ymax + 0.5)
    pad = margin * span
    return (xmin - pad, xmax + pad, ymin - pad, ymax + pad)


def _mask_runs(mask_row: np.ndarray):
    flags = np.concatenate(([0], mask_row.astype(np.int8), [0]))
    edges = np.flatnonzero(np.diff(flags))
    return zip(edges[::2], edges[1::2])


def _raster_rects(mask: np.ndarray, xmin, ymin, dx, dy, fill: str) -> list[str]:
    rects = []
    for i in range(mask.shape[0]):
        for j0, j1 in _mask_runs(mask[i]):
            rects.append(
                f'<rect x="{_fmt(xmin + j0 * dx)}" y="{_fmt(ymin + i * dy)}" '
                f'width="{_fmt((j1 - j0) * dx)}" height="{_fmt(dy)}" fill="{fill}"/>'
            )
    return rects


def _clip_line(p0: complex, direction: complex, viewport) -> tuple[complex, complex] | None:
    """Clip the infinite line p0 + t*direction to the viewport rectangle."""
    xmin, xmax, ymin, ymax = viewport
    t_low, t_high = -math.inf, math.inf
    # Liang-Barsky over both axes.
    for d, v, low, high in (
        (direction.real, p0.real, xmin, xmax),
        (direction.imag, p0.imag, ymin, ymax),
    ):
        if d == 0.0:
            if not (low <= v <= high):
                return None
            continue
        t0 = (low - v) / d
        t1 = (high - v) / d
        if t0 > t1:
            t0, t1 = t1, t0
        t_low = max(t_low, t0)
        t_high = min(t_high, t1)
    if not (t_low < t_high) or math.isinf(t_low) or math.isinf(t_high):
        return None
    return (p0 + t_low * direction, p0 + t_high * direction)


class _Painter:
    def __init__(self, viewport, stroke_width: float):
        self.viewport = viewport
        self.sw = stroke_width
        self.elements: list[str] = []
        self.defs: list[str] = []
        self._mask_count = 0

    def circle(self, center: complex, radius: float, stroke: str, fill: str, dashed=False):
        dash = f' stroke-dasharray="{_fmt(6 * self.sw)} {_fmt(4 * self.sw)}"' if dashed else ""
        self.elements.append(
            f'<circle cx="{_fmt(center.real)}" cy="{_fmt(center.imag)}" r="{_fmt(radius)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(self.sw)}" fill="{fill}"{dash}/>'
        )

    def hatched_exterior(self, center: complex, radius: float, stroke: str, dashed=False):
        xmin, xmax, ymin, ymax = self.viewport
        self._mask_count += 1
        mid = f"hole{self._mask_count}"
        self.defs.append(
            f'<mask id="{mid}" maskUnits="userSpaceOnUse" '
            f'x="{_fmt(xmin)}" y="{_fmt(ymin)}" '
            f'width="{_fmt(xmax - xmin)}" height="{_fmt(ymax - ymin)}">'
            f'<rect x="{_fmt(xmin)}" y="{_fmt(ymin)}" width="{_fmt(xmax - xmin)}" '
            f'height="{_fmt(ymax - ymin)}" fill="white"/>'
            f'<circle cx="{_fmt(center.real)}" cy="{_fmt(center.imag)}" '
            f'r="{_fmt(radius)}" fill="black"/></mask>'
        )
        self.elements.append(
            f'<rect x="{_fmt(xmin)}" y="{_fmt(ymin)}" width="{_fmt(xmax - xmin)}" '
            f'height="{_fmt(ymax - ymin)}" fill="url(#hatch)" mask="url(#{mid})"/>'
        )
        self.circle(center, radius, stroke, "none", dashed=dashed)

    def bisector_line(self, alpha: complex, stroke: str, dashed=False):
        if alpha == 0:
            return
        direction = 1j * alpha / abs(alpha)
        seg = _clip_line(alpha / 2.0, direction, self.viewport)
        if seg is None:
            return
        p, q = seg
        dash = f' stroke-dasharray="{_fmt(6 * self.sw)} {_fmt(4 * self.sw)}"' if dashed else ""
        self.elements.append(
            f'<line x1="{_fmt(p.real)}" y1="{_fmt(p.imag)}" '
            f'x2="{_fmt(q.real)}" y2="{_fmt(q.imag)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(self.sw)}"{dash}/>'
        )

    def region(self, region: Region, stroke: str, fill: str, dashed=False):
        if isinstance(region, Disk):
            self.circle(region.center, region.radius, stroke, fill, dashed)
        elif isinstance(region, DiskComplement):
            self.hatched_exterior(region.center, region.radius, stroke, dashed)
        elif isinstance(region, HalfPlane):
            self.bisector_line(region.alpha, stroke, dashed)
        elif isinstance(region, Intersection):
            self.region(region.left, stroke, fill, dashed)
            self.region(region.right, stroke, fill, dashed)
        elif isinstance(region, (WholePlane, PointAtInfinity)):
            pass  # nothing finite to draw
        else:
            raise TypeError(f"not a region: {region!r}")


_PRIMARY_KEY = {"plain": "gamma", "tilde": "gammaTilde", "simplified": "gammaS"}


def render_svg(doc: RegionDocument, pencil: Pencil | None = None,
               options: RenderOptions | None = None) -> str:
    """Render a region document; the pencil enables the raster layers."""
    opts = options or RenderOptions()
    primary = [region_from_dict(row[_PRIMARY_KEY[doc.variant]]) for row in doc.rows]
    overlay = (
        [region_from_dict(row["gammaTilde"]) for row in doc.rows]
        if doc.variant == "plain"
        else []
    )
    spectrum_points = []
    if doc.spectrum is not None:
        spectrum_points = [complex(z["re"], z["im"]) for z in doc.spectrum["finite"]]

    viewport = opts.viewport or auto_viewport(primary + overlay, spectrum_points)
    xmin, xmax, ymin, ymax = viewport
    scale = opts.width / (xmax - xmin)
    height = max(1, round(scale * (ymax - ymin)))
    sw = 1.5 / scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.width}" height="{height}" '
        f'viewBox="0 0 {opts.width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<g transform="translate({_fmt(-scale * xmin)},{_fmt(height + scale * ymin)}) '
        f'scale({_fmt(scale)},{_fmt(-scale)})">',
        "<defs>",
        f'<pattern id="hatch" patternUnits="userSpaceOnUse" '
        f'width="{_fmt(10 * sw)}" height="{_fmt(10 * sw)}" patternTransform="rotate(45)">'
        f'<line x1="0" y1="0" x2="0" y2="{_fmt(10 * sw)}" '
        f'stroke="#b0b8c4" stroke-width="{_fmt(2 * sw)}"/></pattern>',
    ]

    painter = _Painter(viewport, sw)
    for region in primary:
        painter.region(region, "#1f4e9c", "rgba(31,78,156,0.12)")
    overlay_painter = _Painter(viewport, sw)
    for region in overlay:
        overlay_painter.region(region, "#1f9c48", "none", dashed=True)
    parts.extend(painter.defs)
    parts.extend(overlay_painter.defs)
    parts.append("</defs>")

    if pencil is not None and opts.grid > 0 and (opts.include_chordal or opts.include_kostic):
        n_cells = opts.grid
        dx = (xmax - xmin) / n_cells
        dy = (ymax - ymin) / n_cells
        xs = xmin + (np.arange(n_cells) + 0.5) * dx
        ys = ymin + (np.arange(n_cells) + 0.5) * dy
        zs = xs[None, :] + 1j * ys[:, None]
        half_diag = math.hypot(dx, dy) / 2.0
        if opts.include_chordal:
            mask = chordal_mask(pencil, zs, tol=half_diag)
            parts.append('<g id="raster-chordal">')
            parts.extend(_raster_rects(mask, xmin, ymin, dx, dy, "#c7d8f0"))
            parts.append("</g>")
        if opts.include_kostic:
            row_tols = half_diag * kostic_row_lipschitz(pencil)
            mask = kostic_mask(pencil, zs, row_tols=row_tols)
            parts.append('<g id="raster-kostic">')
            parts.extend(_raster_rects(mask, xmin, ymin, dx, dy, "#f2c49b"))
            parts.append("</g>")

    parts.append(f'<g id="regions-{doc.variant}">')
    parts.extend(painter.elements)
    parts.append("</g>")
    if overlay:
        parts.append('<g id="regions-tilde">')
        parts.extend(overlay_painter.elements)
        parts.append("</g>")

    if opts.markers and spectrum_points:
        arm = 5.0 * sw
        marker_sw = 1.4 * sw
        parts.append('<g id="eigenvalues">')
        for z in spectrum_points:
            parts.append(
                f'<path d="M {_fmt(z.real - arm)} {_fmt(z.imag - arm)} '
                f'L {_fmt(z.real + arm)} {_fmt(z.imag + arm)} '
                f'M {_fmt(z.real - arm)} {_fmt(z.imag + arm)} '
                f'L {_fmt(z.real + arm)} {_fmt(z.imag - arm)}" '
                f'stroke="#c0392b" stroke-width="{_fmt(marker_sw)}" fill="none"/>'
            )
        parts.append("</g>")

    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
