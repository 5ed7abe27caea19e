"""
Arrangement Rendering Module

Draws the periodic arrangement on a two-dimensional coset, using the
coordinates of the first basis as axes: hyperplane lines a_i = kp - 1/2,
lattice weights and chamber-class labels. Output is SVG (svgwrite) or a
character grid.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import svgwrite

from ..arrangement.enumeration import ChamberEnumeration

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
PIXELS_PER_UNIT = 60
MARGIN = 40

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LineSegment:
    coordinate: int
    level: Fraction
    start: Point
    end: Point

    @property
    def label(self) -> str:
        return f"a{self.coordinate + 1}={float(self.level):g}"


@dataclass
class PlaneView:
    """
    Everything drawn for one window of a rank-two coset.

    Attributes:
        axes: Coordinates used as horizontal and vertical axis
        window: ((u_lo, u_hi), (v_lo, v_hi)) in axis coordinates
        lines: Clipped hyperplane segments
        points: Integer weights in the window with their class label
        labels: Class label positions (centroid of the class's weights per chamber)
    """

    axes: Tuple[int, int]
    window: Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]
    lines: List[LineSegment] = field(default_factory=list)
    points: Dict[Tuple[int, int], str] = field(default_factory=dict)
    labels: List[Tuple[str, Point]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'axes': [f"a{a + 1}" for a in self.axes],
            'window': [[str(lo), str(hi)] for lo, hi in self.window],
            'lines': [
                {'label': s.label, 'start': [str(c) for c in s.start],
                 'end': [str(c) for c in s.end]}
                for s in self.lines
            ],
            'chambers': [{'label': name, 'position': [str(c) for c in pos]}
                         for name, pos in self.labels],
        }


def _clip(coefficients: Tuple[Fraction, Fraction], constant: Fraction,
          window) -> Optional[Tuple[Point, Point]]:
    """Segment of {c0 u + c1 v = constant} inside the closed window."""
    (u_lo, u_hi), (v_lo, v_hi) = window
    c0, c1 = coefficients
    found = set()
    if c1 != 0:
        for u in (u_lo, u_hi):
            v = (constant - c0 * u) / c1
            if v_lo <= v <= v_hi:
                found.add((u, v))
    if c0 != 0:
        for v in (v_lo, v_hi):
            u = (constant - c1 * v) / c0
            if u_lo <= u <= u_hi:
                found.add((u, v))
    if len(found) < 2:
        return None
    ordered = sorted(found)
    return ordered[0], ordered[-1]


def build_plane_view(enumeration: ChamberEnumeration, radius: int = 0) -> PlaneView:
    """
    Collect lines, weights and labels for the closed box of class A widened by `radius` periods.

    Args:
        enumeration: Output of enumerate_classes for a coset of dimension two
        radius: Extra periods on each side of the window

    Returns:
        PlaneView

    Raises:
        ValueError: If the coset is not two-dimensional
    """
    arrangement = enumeration.arrangement
    if arrangement.d != 2:
        raise ValueError(f"rendering needs a two-dimensional coset, got n - k = {arrangement.d}")

    p = arrangement.p
    axes = tuple(arrangement.search_basis)
    anchor = enumeration.classes[0].representative
    window = tuple(
        (Fraction(p * (anchor[a] - radius)) - HALF, Fraction(p * (anchor[a] + 1 + radius)) - HALF)
        for a in axes
    )
    view = PlaneView(axes=axes, window=window)

    origin = arrangement.weight_from_basis((0, 0))
    unit_u = arrangement.weight_from_basis((1, 0))
    unit_v = arrangement.weight_from_basis((0, 1))
    corners = [(u, v) for u in window[0] for v in window[1]]
    for i in range(arrangement.n):
        coefficients = (unit_u[i] - origin[i], unit_v[i] - origin[i])
        if coefficients == (0, 0):
            continue
        values = [origin[i] + coefficients[0] * u + coefficients[1] * v for u, v in corners]
        first = math.ceil((min(values) + HALF) / p)
        last = math.floor((max(values) + HALF) / p)
        for k in range(first, last + 1):
            level = Fraction(k * p) - HALF
            segment = _clip(coefficients, level - origin[i], window)
            if segment is not None:
                view.lines.append(LineSegment(i, level, segment[0], segment[1]))

    members: Dict[Tuple[int, ...], List[Tuple[int, int]]] = {}
    names: Dict[Tuple[int, ...], str] = {}
    for u in range(math.ceil(window[0][0]), math.floor(window[0][1]) + 1):
        for v in range(math.ceil(window[1][0]), math.floor(window[1][1]) + 1):
            weight = arrangement.weight_from_basis((u, v))
            if any(c.denominator != 1 for c in weight):
                continue
            chamber = tuple(int(c) // p for c in weight)
            index = enumeration.index_of(chamber)
            name = enumeration.classes[index].label if index is not None else '?'
            view.points[(u, v)] = name
            members.setdefault(chamber, []).append((u, v))
            names[chamber] = name

    for chamber in sorted(members):
        pts = members[chamber]
        centroid = (Fraction(sum(u for u, _ in pts), len(pts)),
                    Fraction(sum(v for _, v in pts), len(pts)))
        view.labels.append((names[chamber], centroid))

    logger.info(f"Plane view with {len(view.lines)} lines and {len(view.labels)} chambers")
    return view


def render_svg(view: PlaneView) -> str:
    """SVG text of a plane view."""
    (u_lo, u_hi), (v_lo, v_hi) = view.window
    width = float(u_hi - u_lo) * PIXELS_PER_UNIT + 2 * MARGIN
    height = float(v_hi - v_lo) * PIXELS_PER_UNIT + 2 * MARGIN

    def screen(point: Point) -> Tuple[float, float]:
        u, v = point
        return (MARGIN + float(u - u_lo) * PIXELS_PER_UNIT,
                MARGIN + float(v_hi - v) * PIXELS_PER_UNIT)

    dwg = svgwrite.Drawing(size=(width, height))
    dwg.add(dwg.rect(insert=(0, 0), size=(width, height), fill="white"))

    lines = dwg.g(id="hyperplanes", stroke="black", stroke_width=2)
    for segment in view.lines:
        lines.add(dwg.line(start=screen(segment.start), end=screen(segment.end)))
        x, y = screen(segment.start)
        lines.add(dwg.text(segment.label, insert=(x + 4, y - 4), font_size="10px",
                           stroke="none", fill="gray"))
    dwg.add(lines)

    dots = dwg.g(id="weights", fill="gray")
    for point in sorted(view.points):
        dots.add(dwg.circle(center=screen(point), r=2))
    dwg.add(dots)

    for name, position in view.labels:
        dwg.add(dwg.text(name, insert=screen(position), font_size="18px", text_anchor="middle",
                         font_weight="bold", fill="black"))
    return dwg.tostring()


def render_ascii(view: PlaneView) -> str:
    """Character grid of integer weights labelled by chamber class, top row first."""
    (u_lo, u_hi), (v_lo, v_hi) = view.window
    us = range(math.ceil(u_lo), math.floor(u_hi) + 1)
    vs = range(math.floor(v_hi), math.ceil(v_lo) - 1, -1)
    rows = [f"a{view.axes[1] + 1} \\ a{view.axes[0] + 1}"]
    for v in vs:
        rows.append(f"{v:>4} " + " ".join(view.points.get((u, v), '.') for u in us))
    rows.append("     " + " ".join(str(u)[-1] for u in us))
    return "\n".join(rows) + "\n"
