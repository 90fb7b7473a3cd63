"""Static SVG drawing of a two-dimensional fan."""

from .fan import GITFan

SIZE = 400
SCALE = 170


def _clip(polygon, a):
    """Sutherland-Hodgman step against the halfplane a.x >= 0."""
    out = []
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        fp = a[0] * p[0] + a[1] * p[1]
        fq = a[0] * q[0] + a[1] * q[1]
        if fp >= 0:
            out.append(p)
        if (fp >= 0) != (fq >= 0):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _region(cone):
    poly = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]
    for a in cone.inequalities:
        poly = _clip(poly, a)
    for e in cone.equations:
        poly = _clip(_clip(poly, e), tuple(-x for x in e))
    return poly


def _to_px(x, y):
    return SIZE / 2 + SCALE * x, SIZE / 2 - SCALE * y


def _edge_point(direction):
    """Where the ray through ``direction`` leaves the unit square."""
    m = max(abs(direction[0]), abs(direction[1]))
    return direction[0] / m, direction[1] / m


def fan_svg(fan: GITFan) -> str:
    if fan.cones and fan.cones[0].ambient_dim != 2:
        raise ValueError("only two-dimensional fans can be plotted")
    palette = ["#cfe2f3", "#d9ead3", "#fff2cc", "#f4cccc", "#d9d2e9", "#fce5cd"]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    chambers = [c for c in fan.cones if c.dim == 2]
    for i, c in enumerate(chambers):
        pts = " ".join("%.2f,%.2f" % _to_px(*p) for p in _region(c))
        label = " ".join(str(tuple(r)) for r in c.rays)
        lines.append(f'<polygon class="chamber" points="{pts}" fill="{palette[i % len(palette)]}" '
                     f'stroke="none"><title>cone {label}</title></polygon>')
    cx, cy = _to_px(0, 0)
    for c in fan.cones:
        if c.dim != 1:
            continue
        directions = list(c.rays) or [c.lineality[0], tuple(-x for x in c.lineality[0])]
        for d in directions:
            ex, ey = _to_px(*_edge_point(d))
            lines.append(f'<line class="ray" x1="{cx:.2f}" y1="{cy:.2f}" x2="{ex:.2f}" y2="{ey:.2f}" '
                         'stroke="black" stroke-width="1.5"/>')
            lx, ly = _to_px(*(1.08 * t for t in _edge_point(d)))
            lines.append(f'<text class="ray-label" x="{lx:.2f}" y="{ly:.2f}" font-size="12" '
                         f'text-anchor="middle">({d[0]},{d[1]})</text>')
    lines.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="2.5" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
