"""Deterministic SVG pictures of two-dimensional configurations.

Space runs horizontally and time vertically.  Balls are circles, diamonds are
squares rotated by 45 degrees, and light cones are hatched wedges with null
(45 degree) sides.  Numbers are printed with fixed precision so equal input
gives byte-identical output.
"""
from __future__ import annotations

import math

from .errors import Unsupported
from .shapes import Kind

SIZE = 400
EXTENT = 1.25  # half-width of the drawn window in world units
ARC_SEGMENTS = 16
RAY = 4 * EXTENT

PALETTE = ("#9e9e9e", "#6d8fb3", "#b38f6d", "#7fa37a", "#a77fb0", "#b36d6d")


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class Canvas:
    def __init__(self, size: int = SIZE, extent: float = EXTENT):
        self.size = size
        self.extent = extent
        self.scale = size / (2 * extent)
        self.items: list[str] = []

    def xy(self, x: float, t: float) -> tuple[str, str]:
        return _fmt(self.size / 2 + x * self.scale), _fmt(self.size / 2 - t * self.scale)

    def points(self, pts) -> str:
        return " ".join(",".join(self.xy(x, t)) for x, t in pts)

    def polygon(self, pts, style: str):
        self.items.append(f'<polygon points="{self.points(pts)}" style="{style}"/>')

    def polyline(self, pts, style: str):
        self.items.append(f'<polyline points="{self.points(pts)}" style="{style}"/>')

    def circle(self, x, t, r, style: str):
        cx, cy = self.xy(x, t)
        self.items.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(r * self.scale)}" style="{style}"/>')

    def text(self, x, t, label: str, size: int = 12):
        cx, cy = self.xy(x, t)
        self.items.append(
            f'<text x="{cx}" y="{cy}" font-family="sans-serif" font-size="{size}" '
            f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )

    def document(self) -> str:
        s = self.size
        head = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">',
            "<defs>",
            '<pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">',
            '<line x1="0" y1="0" x2="0" y2="6" style="stroke:#9e9e9e;stroke-width:1"/>',
            "</pattern>",
            f'<clipPath id="frame"><rect x="0" y="0" width="{s}" height="{s}"/></clipPath>',
            "</defs>",
            f'<rect x="0" y="0" width="{s}" height="{s}" style="fill:#ffffff"/>',
            '<g clip-path="url(#frame)">',
        ]
        return "\n".join(head + self.items + ["</g>", "</svg>"]) + "\n"


def _arc(cx, ct, r, a0, a1):
    return [
        (cx + r * math.cos(a0 + (a1 - a0) * i / ARC_SEGMENTS), ct + r * math.sin(a0 + (a1 - a0) * i / ARC_SEGMENTS))
        for i in range(ARC_SEGMENTS + 1)
    ]


def cone_polygons(kind: Kind, cx: float, ct: float, r: float) -> list:
    """Outlines of the causal future and past of a shape, truncated far outside the window."""
    out = []
    for sign in (1, -1):  # future, past
        if kind is Kind.BALL:
            h = r / math.sqrt(2)
            right, left = (cx + h, ct - sign * h), (cx - h, ct - sign * h)
            arc = _arc(cx, ct, r, -sign * math.pi / 4, -sign * 3 * math.pi / 4)
        else:
            tip = (cx, ct - sign * r)
            right = left = tip
            arc = [tip]
        far_left = (left[0] - RAY, left[1] + sign * RAY)
        far_right = (right[0] + RAY, right[1] + sign * RAY)
        out.append([far_left, far_right, *arc])
    return out


def shape_outline(kind: Kind, cx: float, ct: float, r: float) -> list:
    return [(cx + r, ct), (cx, ct + r), (cx - r, ct), (cx, ct - r)] if kind is Kind.DIAMOND else []


def render_svg(n: int, kind: Kind, maps, cones: bool = False, path_samples=None) -> str:
    """Draw the images of ``maps`` (and optionally sampled path trajectories)."""
    if n != 2:
        raise Unsupported(f"rendering supports n = 2 only, got n = {n}")
    cv = Canvas()
    e = cv.extent
    axis = "stroke:#000000;stroke-width:0.75"
    cv.polyline([(-e, 0), (e, 0)], axis)
    cv.polyline([(0, -e), (0, e)], axis)
    cv.text(e - 0.06, -0.07, "x")
    cv.text(0.07, e - 0.06, "t")

    unit = "fill:none;stroke:#000000;stroke-width:0.75;stroke-dasharray:4,3"
    if kind is Kind.BALL:
        cv.circle(0, 0, 1, unit)
    else:
        cv.polygon(shape_outline(kind, 0, 0, 1), unit)

    shapes = [(float(f.translate.x[0]), float(f.translate.t), float(f.scale)) for f in maps]
    if cones:
        for cx, ct, r in shapes:
            for poly in cone_polygons(kind, cx, ct, r):
                cv.polygon(poly, "fill:url(#hatch);stroke:none")

    if path_samples:
        trails = {}
        for _, sample in path_samples:
            for i, f in enumerate(sample):
                trails.setdefault(i, []).append((float(f.translate.x[0]), float(f.translate.t)))
        for i in sorted(trails):
            cv.polyline(trails[i], f"fill:none;stroke:{PALETTE[i % len(PALETTE)]};stroke-width:1")
        for i, f in enumerate(path_samples[-1][1]):
            cx, ct, r = float(f.translate.x[0]), float(f.translate.t), float(f.scale)
            style = f"fill:none;stroke:{PALETTE[i % len(PALETTE)]};stroke-width:1;stroke-dasharray:2,2"
            if kind is Kind.BALL:
                cv.circle(cx, ct, r, style)
            else:
                cv.polygon(shape_outline(kind, cx, ct, r), style)

    for i, (cx, ct, r) in enumerate(shapes):
        style = f"fill:{PALETTE[i % len(PALETTE)]};fill-opacity:0.6;stroke:#404040;stroke-width:0.75"
        if kind is Kind.BALL:
            cv.circle(cx, ct, r, style)
        else:
            cv.polygon(shape_outline(kind, cx, ct, r), style)
        cv.text(cx, ct, str(i), size=10)
    return cv.document()
