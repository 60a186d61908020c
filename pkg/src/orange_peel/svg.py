"""Minimal deterministic SVG plots of planar curves."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

import numpy as np

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    height_px: int = 800
    margin_fraction: float = 0.05
    stroke_relative: float = 0.002

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("image dimensions must be positive")
        if not 0 <= self.margin_fraction < 0.5:
            raise ValueError(f"margin_fraction must lie in [0, 0.5), got {self.margin_fraction!r}")
        if not self.stroke_relative > 0:
            raise ValueError("stroke_relative must be positive")


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(
    x: np.ndarray,
    y: np.ndarray,
    markers: Sequence[tuple[float, float]] = (),
    options: RenderOptions | None = None,
) -> str:
    """Render one polyline and optional filled circle markers.

    The view box is the data bounding box (markers included) widened by
    ``margin_fraction`` on each side, scaled uniformly into the image. The
    y axis points up. Stroke width is ``stroke_relative`` times the bounding
    box diagonal; markers have twice the stroke width as radius.
    """
    opts = options or RenderOptions()
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 2:
        raise ValueError("need matching 1-d coordinate arrays with at least 2 points")
    xs = np.concatenate([x, [m[0] for m in markers]])
    ys = np.concatenate([y, [m[1] for m in markers]])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    span_x = max(x1 - x0, 1e-300)
    span_y = max(y1 - y0, 1e-300)
    m = opts.margin_fraction
    x0 -= m * span_x
    x1 += m * span_x
    y0 -= m * span_y
    y1 += m * span_y
    w, h = opts.width_px, opts.height_px
    scale = min(w / (x1 - x0), h / (y1 - y0))
    # centre the drawing in the image
    ox = 0.5 * (w - scale * (x1 - x0))
    oy = 0.5 * (h - scale * (y1 - y0))

    def px(u):
        return ox + scale * (u - x0)

    def py(v):
        return h - (oy + scale * (v - y0))

    stroke = opts.stroke_relative * scale * math.hypot(x1 - x0, y1 - y0)

    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=f"{w}px",
        height=f"{h}px",
        viewBox=f"0 0 {w} {h}",
    )
    pts = " ".join(f"{_fmt(px(u))},{_fmt(py(v))}" for u, v in zip(x.tolist(), y.tolist()))
    ET.SubElement(
        root,
        "polyline",
        points=pts,
        fill="none",
        stroke="black",
        **{"stroke-width": _fmt(stroke), "stroke-linejoin": "round"},
    )
    for mx, my in markers:
        ET.SubElement(
            root, "circle", cx=_fmt(px(mx)), cy=_fmt(py(my)), r=_fmt(2 * stroke), fill="red"
        )
    return ET.tostring(root, encoding="unicode") + "\n"
