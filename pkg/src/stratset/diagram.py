"""Lattice-path pictures of simplices in a product.

A nondegenerate simplex of ``X x Y`` with components spanning an
``a``-simplex and a ``b``-simplex is a path in the ``(a+1) x (b+1)`` grid
taking steps right, up or diagonally.  The first factor runs to the right.
"""
from __future__ import annotations

from .sset import FinSSet, SSetError

UNIT = 40
MARGIN = 30


class DiagramError(ValueError):
    pass


def resolve_simplex(P: FinSSet, ref: str) -> int:
    """Cell id from an integer id, a cell label, or ``"x0,x1,../y0,y1,.."`` vertex lists."""
    ref = ref.strip()
    if ref.isdigit():
        c = int(ref)
        if c >= len(P):
            raise DiagramError(f"no cell {c}; the object has {len(P)} cells")
        return c
    if "/" in ref:
        left, right = ref.split("/", 1)
        xs = [t.strip() for t in left.split(",")]
        ys = [t.strip() for t in right.split(",")]
        if len(xs) != len(ys):
            raise DiagramError(f"vertex lists have different lengths {len(xs)} and {len(ys)}")
        ref = "[" + ",".join(f"({x},{y})" for x, y in zip(xs, ys)) + "]"
        if len(xs) == 1:
            ref = ref[1:-1]
    try:
        return P.find(ref)
    except SSetError as exc:
        raise DiagramError(str(exc)) from None


def lattice_path(P: FinSSet, c: int) -> tuple:
    """``(points, a, b)``: grid points visited by cell ``c`` and the grid size."""
    if getattr(P, "factors", None) is None:
        raise DiagramError("diagrams need a product object (prod, pretensor or tensor)")
    _, _, al, be = P.keys[c]
    return list(zip(al, be)), al[-1], be[-1]


def _axis_labels(P: FinSSet, c: int) -> tuple:
    X, Y = P.factors
    x0, y0, _, _ = P.keys[c]
    return [X.labels[v] for v in X.vertices(x0)], [Y.labels[v] for v in Y.vertices(y0)]


def steps(points: list) -> list:
    names = {(1, 0): "right", (0, 1): "up", (1, 1): "diagonal"}
    return [names[(q[0] - p[0], q[1] - p[1])] for p, q in zip(points, points[1:])]


def ascii_diagram(P: FinSSet, c: int) -> str:
    points, a, b = lattice_path(P, c)
    xl, yl = _axis_labels(P, c)
    on = set(points)
    moves = set(zip(points, points[1:]))
    pad = max(len(s) for s in yl) + 1
    lines = [f"{P.labels[c]}", "steps: " + " ".join(steps(points)) if len(points) > 1 else "steps: (vertex)"]
    for y in range(b, -1, -1):
        row = [yl[y].rjust(pad - 1), " "]
        for x in range(a + 1):
            row.append("●" if (x, y) in on else "·")
            if x < a:
                row.append("───" if ((x, y), (x + 1, y)) in moves else "   ")
        lines.append("".join(row).rstrip())
        if y > 0:
            row = [" " * pad]
            for x in range(a + 1):
                row.append("│" if ((x, y - 1), (x, y)) in moves else " ")
                if x < a:
                    row.append(" ╱ " if ((x, y - 1), (x + 1, y)) in moves else "   ")
            lines.append("".join(row).rstrip())
    foot = [" " * pad]
    for x in range(a + 1):
        foot.append(xl[x].ljust(4) if x < a else xl[x])
    lines.append("".join(foot).rstrip())
    return "\n".join(lines) + "\n"


def svg_diagram(P: FinSSet, c: int) -> str:
    points, a, b = lattice_path(P, c)
    xl, yl = _axis_labels(P, c)
    w = 2 * MARGIN + a * UNIT
    h = 2 * MARGIN + b * UNIT

    def at(x, y):
        return MARGIN + x * UNIT, h - MARGIN - y * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"  <title>{_escape(P.labels[c])}</title>",
        '  <g fill="#999">',
    ]
    for y in range(b + 1):
        for x in range(a + 1):
            px, py = at(x, y)
            out.append(f'    <circle cx="{px}" cy="{py}" r="2"/>')
    out.append("  </g>")
    poly = " ".join("{},{}".format(*at(x, y)) for x, y in points)
    out.append(f'  <polyline points="{poly}" fill="none" stroke="black" stroke-width="2"/>')
    out.append('  <g fill="black">')
    for x, y in points:
        px, py = at(x, y)
        out.append(f'    <circle cx="{px}" cy="{py}" r="4"/>')
    out.append("  </g>")
    out.append('  <g font-family="monospace" font-size="10" text-anchor="middle">')
    for x in range(a + 1):
        px, py = at(x, 0)
        out.append(f'    <text x="{px}" y="{py + 18}">{_escape(xl[x])}</text>')
    for y in range(b + 1):
        px, py = at(0, y)
        out.append(f'    <text x="{px - 16}" y="{py + 3}">{_escape(yl[y])}</text>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render(P: FinSSet, c: int, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return ascii_diagram(P, c)
    if fmt == "svg":
        return svg_diagram(P, c)
    raise DiagramError(f"unknown format {fmt!r}; use ascii or svg")
