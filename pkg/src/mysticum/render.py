"""Static SVG drawings of a sextuple on the conic.

The conic is drawn as the unit circle through the real stereographic map
z -> ((1 - z^2)/(1 + z^2), 2z/(1 + z^2)), with infinity at (-1, 0).
Only presentation happens here, so floats are fine.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import GaussianRational
from .hexagram import Hexad
from .plane import P1Point

__all__ = ["NonRealPoint", "render_svg", "stereographic", "CENTER_CHORDS"]

SIZE = 1000
WORLD = 2.2  # default half-width of the visible square in conic coordinates
MAX_WORLD = 12.0  # centres farther out than this are left off the figure

# chords through Q4, Q5, Q6 for an alignment
CENTER_CHORDS = {
    "Q4": ("AE", "CD", "BF"),
    "Q5": ("AF", "CE", "BD"),
    "Q6": ("AD", "BE", "CF"),
}
_COLOURS = {"Q4": "#c0392b", "Q5": "#2471a3", "Q6": "#1e8449"}


class NonRealPoint(ValueError):
    pass


def _real(z: P1Point):
    if z.is_infinite:
        return None
    u = z.u
    if isinstance(u, GaussianRational):
        if not u.is_real():
            raise NonRealPoint(f"{z} is not real; the sextuple cannot be drawn")
        u = u.re
    return Fraction(u)


def stereographic(z: P1Point) -> tuple[float, float]:
    x = _real(z)
    if x is None:
        return (-1.0, 0.0)
    x = float(x)
    d = 1 + x * x
    return ((1 - x * x) / d, 2 * x / d)


def _px(pt, world=WORLD):
    s = SIZE / (2 * world)
    return (SIZE / 2 + pt[0] * s, SIZE / 2 - pt[1] * s)


def _meet(p1, p2, p3, p4):
    """Intersection of lines p1p2 and p3p4, or None if parallel."""
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, p3, p4
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < 1e-12:
        return None
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return ((a * (x3 - x4) - (x1 - x2) * b) / den, (a * (y3 - y4) - (y1 - y2) * b) / den)


def _clip_line(p, q, world=WORLD):
    """The visible segment of the infinite line pq, or None."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    ts = []
    for k, d in ((0, dx), (1, dy)):
        if abs(d) < 1e-15:
            continue
        for edge in (-world, world):
            t = (edge - p[k]) / d
            x, y = p[0] + t * dx, p[1] + t * dy
            if -world - 1e-9 <= x <= world + 1e-9 and -world - 1e-9 <= y <= world + 1e-9:
                ts.append(t)
    if len(ts) < 2:
        return None
    t0, t1 = min(ts), max(ts)
    return ((p[0] + t0 * dx, p[1] + t0 * dy), (p[0] + t1 * dx, p[1] + t1 * dy))


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _line(a, b, colour, world, width=1.5, dash=None):
    (x1, y1), (x2, y2) = _px(a, world), _px(b, world)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{colour}" stroke-width="{width}"{extra}/>')


def _dot(pt, world, r=5, colour="black"):
    x, y = _px(pt, world)
    return f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r}" fill="{colour}"/>'


def _text(pt, label, world, dx=0.0, dy=0.0):
    x, y = _px(pt, world)
    return (f'<text x="{_f(x + dx)}" y="{_f(y + dy)}" font-family="sans-serif" '
            f'font-size="22" text-anchor="middle" dominant-baseline="middle">{label}</text>')


def _visible(pt, world) -> bool:
    return abs(pt[0]) <= world and abs(pt[1]) <= world


def _world(centres) -> float:
    """Half-width of the view: the default square, grown to fit every centre
    within MAX_WORLD with a 15% margin."""
    reach = [max(abs(c[0]), abs(c[1])) for c in centres]
    reach = [r for r in reach if r <= MAX_WORLD]
    return max([WORLD] + [1.15 * r for r in reach])


def render_svg(h: Hexad, chords: bool = True, title: str | None = None) -> str:
    """SVG text for a hexad: conic, six labelled points and, when ``chords``
    is set, the chords through Q4, Q5, Q6 and the line through the centres."""
    pos = {X: stereographic(h[X]) for X in "ABCDEF"}
    centres = {}
    if chords:
        for q, pairs in CENTER_CHORDS.items():
            c = _meet(pos[pairs[0][0]], pos[pairs[0][1]], pos[pairs[1][0]], pos[pairs[1][1]])
            if c is not None:
                centres[q] = c
    w = _world(centres.values())
    body = []
    cx, cy = _px((0, 0), w)
    r = SIZE / (2 * w)
    body.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="none" '
                f'stroke="black" stroke-width="2"/>')
    if chords:
        for q, pairs in CENTER_CHORDS.items():
            for pr in pairs:
                body.append(_line(pos[pr[0]], pos[pr[1]], _COLOURS[q], w))
        if len(centres) >= 2:
            a, b = list(centres.values())[:2]
            seg = _clip_line(a, b, w)
            if seg is not None:
                body.append(_line(seg[0], seg[1], "#555555", w, 2, dash="8,6"))
        for q, c in centres.items():
            if _visible(c, w):
                body.append(_dot(c, w, 6, _COLOURS[q]))
                body.append(_text(c, q, w, 18, -18))
    for X in "ABCDEF":
        x, y = pos[X]
        body.append(_dot((x, y), w))
        body.append(_text((x * 1.12, y * 1.12), f"{X}={h[X]}", w))
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">')
    clip = (f'<defs><clipPath id="box"><rect x="0" y="0" width="{SIZE}" height="{SIZE}"/>'
            f'</clipPath></defs>')
    parts = [head, clip, f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    if title:
        parts.append(f"<title>{title}</title>")
    parts.append('<g clip-path="url(#box)">')
    parts.extend(body)
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
