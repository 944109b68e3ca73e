"""Standalone SVG figures for scenes.

Affine points become labeled dots, lines are clipped exactly (in rational
arithmetic) to the viewport rectangle, and ideal points are drawn as
labeled direction arrows on the viewport border, so the conjugate of a
midpoint stays visible.  Elements with no visible locus are skipped with a
warning rather than an error.  Output is deterministic for fixed input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import ProjLine, ProjPoint
from .scene import Scene

Viewport = tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class RenderOptions:
    """Viewport rectangle (xmin, ymin, xmax, ymax) and output geometry."""

    viewport: Viewport
    width_px: int = 800
    height_px: int = 600
    point_labels: bool = True
    line_labels: bool = True

    def __post_init__(self) -> None:
        xmin, ymin, xmax, ymax = self.viewport
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("viewport must have positive width and height")
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("pixel dimensions must be positive")


_POINT_STYLE = 'fill="#c0392b"'
_LINE_STYLE = 'stroke="#2c3e50" stroke-width="1.5"'
_ARROW_STYLE = 'stroke="#c0392b" stroke-width="1.5" fill="none"'
_LABEL_STYLE = 'font-family="sans-serif" font-size="13px" fill="#222"'


def _fmt(value: float) -> str:
    return f"{value:.2f}"


class _Mapper:
    def __init__(self, options: RenderOptions) -> None:
        self.xmin, self.ymin, self.xmax, self.ymax = (Fraction(v) for v in options.viewport)
        self.width = options.width_px
        self.height = options.height_px

    def to_px(self, x: Fraction, y: Fraction) -> tuple[float, float]:
        px = float((x - self.xmin) / (self.xmax - self.xmin)) * self.width
        py = float((self.ymax - y) / (self.ymax - self.ymin)) * self.height
        return px, py

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax


def _clip_line(l: ProjLine, mapper: _Mapper) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] | None:
    # Exact intersections of a*x + b*y + c = 0 with the four border lines.
    a, b, c = l.coeffs.as_tuple()
    if a == 0 and b == 0:
        return None  # the ideal line has no affine locus
    candidates: list[tuple[Fraction, Fraction]] = []
    if b != 0:
        for x in (mapper.xmin, mapper.xmax):
            y = -(c + a * x) / b
            if mapper.ymin <= y <= mapper.ymax:
                candidates.append((x, y))
    if a != 0:
        for y in (mapper.ymin, mapper.ymax):
            x = -(c + b * y) / a
            if mapper.xmin <= x <= mapper.xmax:
                candidates.append((x, y))
    unique = sorted(set(candidates))
    if len(unique) < 2:
        return None
    return unique[0], unique[-1]


def _border_anchor(dx: int, dy: int, mapper: _Mapper) -> tuple[Fraction, Fraction]:
    # Walk from the viewport center along (dx, dy) to the border.
    cx = (mapper.xmin + mapper.xmax) / 2
    cy = (mapper.ymin + mapper.ymax) / 2
    t = None
    if dx > 0:
        t = (mapper.xmax - cx) / dx
    elif dx < 0:
        t = (mapper.xmin - cx) / dx
    if dy > 0:
        ty = (mapper.ymax - cy) / dy
        t = ty if t is None or ty < t else t
    elif dy < 0:
        ty = (mapper.ymin - cy) / dy
        t = ty if t is None or ty < t else t
    assert t is not None
    return cx + t * dx, cy + t * dy


def _arrow_path(tip: tuple[float, float], direction: tuple[float, float]) -> str:
    length = math.hypot(*direction)
    ux, uy = direction[0] / length, direction[1] / length
    tail = (tip[0] - 18 * ux, tip[1] - 18 * uy)
    left = (tip[0] - 7 * ux + 4 * uy, tip[1] - 7 * uy - 4 * ux)
    right = (tip[0] - 7 * ux - 4 * uy, tip[1] - 7 * uy + 4 * ux)
    return (
        f"M {_fmt(tail[0])} {_fmt(tail[1])} L {_fmt(tip[0])} {_fmt(tip[1])} "
        f"M {_fmt(left[0])} {_fmt(left[1])} L {_fmt(tip[0])} {_fmt(tip[1])} "
        f"L {_fmt(right[0])} {_fmt(right[1])}"
    )


def render_scene(scene: Scene, options: RenderOptions) -> tuple[str, list[str]]:
    """Render every named element; returns the SVG text and warnings."""
    mapper = _Mapper(options)
    warnings: list[str] = []
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{options.width_px}" height="{options.height_px}" '
        f'viewBox="0 0 {options.width_px} {options.height_px}">',
        f'<rect class="frame" x="0.5" y="0.5" width="{options.width_px - 1}" '
        f'height="{options.height_px - 1}" fill="white" stroke="#999"/>',
    ]

    for name, l in scene.lines.items():
        segment = _clip_line(l, mapper)
        if segment is None:
            warnings.append(f"line {name} = {l} does not cross the viewport; omitted")
            continue
        (x1, y1), (x2, y2) = segment
        px1, py1 = mapper.to_px(x1, y1)
        px2, py2 = mapper.to_px(x2, y2)
        parts.append(
            f'<line class="scene-line" data-name="{name}" {_LINE_STYLE} '
            f'x1="{_fmt(px1)}" y1="{_fmt(py1)}" x2="{_fmt(px2)}" y2="{_fmt(py2)}"/>'
        )
        if options.line_labels:
            mx, my = (px1 + px2) / 2, (py1 + py2) / 2
            parts.append(
                f'<text class="line-label" {_LABEL_STYLE} '
                f'x="{_fmt(mx + 4)}" y="{_fmt(my - 4)}">{name}</text>'
            )

    for name, p in scene.points.items():
        x0, x1, x2 = p.coords.as_tuple()
        if x2 == 0:
            anchor = _border_anchor(x0, x1, mapper)
            tip = mapper.to_px(*anchor)
            # Pixel y grows downward, so the drawn direction flips y.
            parts.append(
                f'<path class="scene-point-inf" data-name="{name}" {_ARROW_STYLE} '
                f'd="{_arrow_path(tip, (x0, -x1))}"/>'
            )
            if options.point_labels:
                lx = min(max(tip[0] - 14, 4.0), options.width_px - 18)
                ly = min(max(tip[1] + 16, 16.0), options.height_px - 6)
                parts.append(
                    f'<text class="point-label" {_LABEL_STYLE} '
                    f'x="{_fmt(lx)}" y="{_fmt(ly)}">{name}</text>'
                )
            continue
        ax = Fraction(x0, x2)
        ay = Fraction(x1, x2)
        if not mapper.contains(ax, ay):
            warnings.append(f"point {name} = {p} outside viewport; omitted")
            continue
        px, py = mapper.to_px(ax, ay)
        parts.append(
            f'<circle class="scene-point" data-name="{name}" {_POINT_STYLE} '
            f'cx="{_fmt(px)}" cy="{_fmt(py)}" r="3.5"/>'
        )
        if options.point_labels:
            parts.append(
                f'<text class="point-label" {_LABEL_STYLE} '
                f'x="{_fmt(px + 6)}" y="{_fmt(py - 6)}">{name}</text>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n", warnings
