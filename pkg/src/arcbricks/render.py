"""SVG and TikZ pictures of colored diagrams.

Points sit on a unit-spaced baseline; an arc is a chain of cubic segments
through waypoints offset 0.4 units above or below each interior point.
Green arcs are solid, red ones dashed.  Purely cosmetic, but the output is
byte-deterministic so goldens stay stable.
"""

from __future__ import annotations

from .arcs import GREEN, Arc, ColoredDiagram

OFFSET = 0.4
SCALE = 40.0
MARGIN = 1.0


def _waypoints(arc: Arc) -> list[tuple[float, float]]:
    pts = [(float(arc.left), 0.0)]
    for m in arc.interior:
        pts.append((float(m), OFFSET if m in arc.above else -OFFSET))
    pts.append((float(arc.right), 0.0))
    return pts


def _svg_xy(x: float, y: float) -> tuple[float, float]:
    # SVG's y axis points down; above-the-line means smaller y.
    return (MARGIN + x) * SCALE, (MARGIN - y) * SCALE


def _svg_path(arc: Arc) -> str:
    pts = _waypoints(arc)
    x0, y0 = _svg_xy(*pts[0])
    parts = [f"M {x0:.1f} {y0:.1f}"]
    for (xa, ya), (xb, yb) in zip(pts, pts[1:]):
        ax, ay = _svg_xy(xa, ya)
        bx, by = _svg_xy(xb, yb)
        c1x = ax + 0.5 * SCALE
        c2x = bx - 0.5 * SCALE
        parts.append(f"C {c1x:.1f} {ay:.1f} {c2x:.1f} {by:.1f} {bx:.1f} {by:.1f}")
    return " ".join(parts)


def render_svg(diagram: ColoredDiagram) -> str:
    width = (diagram.n + 1 + 2 * MARGIN) * SCALE
    height = 2 * MARGIN * SCALE
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
    ]
    for arc, color in diagram.entries:
        dash = '' if color == GREEN else ' stroke-dasharray="6 4"'
        stroke = "green" if color == GREEN else "red"
        lines.append(
            f'  <path d="{_svg_path(arc)}" fill="none" stroke="{stroke}" '
            f'stroke-width="2"{dash}/>'
        )
    for p in range(1, diagram.n + 2):
        cx, cy = _svg_xy(float(p), 0.0)
        lines.append(f'  <circle cx="{cx:.1f}" cy="{cy:.1f}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_tikz(diagram: ColoredDiagram) -> str:
    lines = ["\\begin{tikzpicture}[thick, rounded corners=8pt]"]
    for p in range(1, diagram.n + 2):
        lines.append(f"  \\fill ({p},0) circle (1.2pt);")
    for arc, color in diagram.entries:
        style = "green" if color == GREEN else "red, dashed"
        coords = " -- ".join(f"({x:.1f},{y:.1f})" for x, y in _waypoints(arc))
        lines.append(f"  \\draw[{style}] {coords};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
