"""Static SVG pictures of planar point sets, nets and witness ranges."""

from __future__ import annotations

from xml.sax.saxutils import escape

from smallnets.errors import DimensionError
from smallnets.geometry import PointSet
from smallnets.oracles import Box, Disk, Halfplane

SIZE = 480
PAD = 24
COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


class _View:
    def __init__(self, pts):
        xs = [float(p[0]) for p in pts]
        ys = [float(p[1]) for p in pts]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0) or 1.0
        self.k = (SIZE - 2 * PAD) / span

    def __call__(self, p):
        return PAD + (float(p[0]) - self.x0) * self.k, SIZE - PAD - (float(p[1]) - self.y0) * self.k


def _witness_svg(w, view, label, color):
    if isinstance(w, Box):
        (x1, y1), (x2, y2) = view(w.lo), view(w.hi)
        shape = (
            f'<rect x="{min(x1, x2):.2f}" y="{min(y1, y2):.2f}" width="{abs(x2 - x1):.2f}" '
            f'height="{abs(y2 - y1):.2f}" fill="{color}" fill-opacity="0.12" stroke="{color}"/>'
        )
        tx, ty = min(x1, x2), min(y1, y2) - 3
    elif isinstance(w, Disk):
        cx, cy = view(w.center)
        r = float(w.radius_sq) ** 0.5 * view.k
        shape = f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="{color}" fill-opacity="0.12" stroke="{color}"/>'
        tx, ty = cx, cy - r - 3
    elif isinstance(w, Halfplane):
        # draw the boundary line across the view, hatched side marked by the label
        a, b, c = float(w.a), float(w.b), float(w.c)
        ends = []
        lo = view.x0 - PAD / view.k
        hi = view.x0 + SIZE / view.k
        if abs(b) > 1e-12:
            ends = [(x, (c - a * x) / b) for x in (lo, hi)]
        else:
            ends = [(c / a, view.y0 - PAD / view.k), (c / a, view.y0 + SIZE / view.k)]
        (x1, y1), (x2, y2) = view(ends[0]), view(ends[1])
        shape = f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="{color}" stroke-dasharray="6 3"/>'
        tx, ty = (x1 + x2) / 2, (y1 + y2) / 2
    else:
        raise TypeError(f"cannot draw {w!r}")
    text = f'<text x="{tx:.2f}" y="{ty:.2f}" font-size="11" fill="{color}">{escape(label)}</text>' if label else ""
    return shape + text


def render_svg(P: PointSet, net_points=(), witnesses=None) -> str:
    """SVG with P coloured by label, net points as red squares, witnesses outlined."""
    if P.dim != 2:
        raise DimensionError("only planar point sets can be drawn")
    witnesses = witnesses or {}
    net_points = list(net_points)
    view = _View(list(P.points) + net_points)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for t, (name, w) in enumerate(sorted(witnesses.items())):
        out.append(_witness_svg(w, view, name, COLORS[t % len(COLORS)]))
    labels = P.labels or [0] * P.n
    for p, lab in zip(P.points, labels):
        x, y = view(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{COLORS[lab % len(COLORS)]}"/>')
    for q in net_points:
        x, y = view(q)
        out.append(f'<rect x="{x - 4:.2f}" y="{y - 4:.2f}" width="8" height="8" fill="none" stroke="#d62728" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
