"""Minimal SVG emission for the experiment CLI: line plots, disc layouts,
and heatmaps. No plotting dependency; output is deterministic for fixed
input, which keeps repeated runs byte-identical."""

from __future__ import annotations

import math

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]

_W, _H = 640, 480
_ML, _MR, _MT, _MB = 70, 20, 40, 50


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    if hi <= lo:
        return [lo]
    step = 10 ** math.floor(math.log10((hi - lo) / max(n, 1)))
    for mult in (1, 2, 5, 10):
        if (hi - lo) / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-12 * abs(step):
        out.append(t)
        t += step
    return out


def line_plot(
    series,
    path,
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    logy: bool = False,
    dashed: frozenset | set = frozenset(),
) -> None:
    """Write a line/scatter plot.

    series: list of (label, xs, ys); NaN/non-positive (log scale) points are
    skipped. Labels in ``dashed`` render with a dashed stroke.
    """
    pts_all = [
        (x, y)
        for _, xs, ys in series
        for x, y in zip(xs, ys)
        if math.isfinite(y) and (not logy or y > 0)
    ]
    if not pts_all:
        pts_all = [(0.0, 1.0), (1.0, 2.0)]
    x_lo = min(p[0] for p in pts_all)
    x_hi = max(p[0] for p in pts_all)
    ys_t = [math.log10(p[1]) if logy else p[1] for p in pts_all]
    y_lo, y_hi = min(ys_t), max(ys_t)
    if x_hi == x_lo:
        x_hi = x_lo + 1
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def sx(x):
        return _ML + (x - x_lo) / (x_hi - x_lo) * (_W - _ML - _MR)

    def sy(y):
        yt = math.log10(y) if logy else y
        return _H - _MB - (yt - y_lo) / (y_hi - y_lo) * (_H - _MT - _MB)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W/2:.0f}" y="24" text-anchor="middle" font-size="15">{title}</text>',
        f'<text x="{_W/2:.0f}" y="{_H-10}" text-anchor="middle">{xlabel}</text>',
        f'<text x="16" y="{_H/2:.0f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {_H/2:.0f})">{ylabel}</text>',
        f'<rect x="{_ML}" y="{_MT}" width="{_W-_ML-_MR}" height="{_H-_MT-_MB}" '
        f'fill="none" stroke="black"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        parts.append(
            f'<line x1="{_fmt(sx(t))}" y1="{_H-_MB}" x2="{_fmt(sx(t))}" y2="{_H-_MB+5}" stroke="black"/>'
            f'<text x="{_fmt(sx(t))}" y="{_H-_MB+18}" text-anchor="middle">{t:g}</text>'
        )
    if logy:
        dec_lo, dec_hi = math.floor(y_lo), math.ceil(y_hi)
        y_ticks = [10.0**k for k in range(dec_lo, dec_hi + 1)]
        labels = [f"1e{k}" for k in range(dec_lo, dec_hi + 1)]
    else:
        y_ticks = _ticks(y_lo, y_hi)
        labels = [f"{t:g}" for t in y_ticks]
    for t, lab in zip(y_ticks, labels):
        yy = sy(t)
        if _MT - 1 <= yy <= _H - _MB + 1:
            parts.append(
                f'<line x1="{_ML-5}" y1="{_fmt(yy)}" x2="{_ML}" y2="{_fmt(yy)}" stroke="black"/>'
                f'<text x="{_ML-8}" y="{_fmt(yy+4)}" text-anchor="end">{lab}</text>'
            )
    for i, (label, xs, ys) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        coords = [
            (sx(x), sy(y))
            for x, y in zip(xs, ys)
            if math.isfinite(y) and (not logy or y > 0)
        ]
        if len(coords) >= 2:
            pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in coords)
            dash = ' stroke-dasharray="6,4"' if label in dashed else ""
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"{dash}/>'
            )
        for a, b in coords:
            parts.append(f'<circle cx="{_fmt(a)}" cy="{_fmt(b)}" r="2.5" fill="{color}"/>')
        ly = _MT + 16 + 16 * i
        parts.append(
            f'<line x1="{_W-_MR-130}" y1="{ly-4}" x2="{_W-_MR-105}" y2="{ly-4}" '
            f'stroke="{color}" stroke-width="2"/>'
            f'<text x="{_W-_MR-100}" y="{ly}">{label}</text>'
        )
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def disc_plot(support_set, path, title: str = "") -> None:
    """Draw the unit disc with the support discs inside it."""
    size = 520
    c, scale = size / 2, size / 2 - 20

    def sx(v):
        return c + v * scale

    def sy(v):
        return c - v * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" '
        f'viewBox="0 0 {size} {size + 30}" font-family="sans-serif" font-size="13">',
        f'<rect width="{size}" height="{size + 30}" fill="white"/>',
        f'<text x="{c}" y="20" text-anchor="middle">{title}</text>',
        f'<circle cx="{c}" cy="{c + 15}" r="{scale}" fill="none" stroke="black"/>',
    ]
    for disc in support_set.supports:
        parts.append(
            f'<circle cx="{_fmt(sx(disc.center.x))}" cy="{_fmt(sy(disc.center.y) + 15)}" '
            f'r="{_fmt(disc.radius * scale)}" fill="#1f77b4" fill-opacity="0.45" '
            f'stroke="#1f77b4"/>'
        )
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def heatmap(xs, ys, values, path, title: str = "") -> None:
    """Cell heatmap on scattered rectangular cells (NaN cells skipped)."""
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        finite = [0.0]
    v_lo, v_hi = min(finite), max(finite)
    span = (v_hi - v_lo) or 1.0
    xs_u = sorted(set(xs))
    cell = (xs_u[1] - xs_u[0]) if len(xs_u) > 1 else 0.1
    size = 520
    c, scale = size / 2, size / 2 - 20
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" '
        f'viewBox="0 0 {size} {size + 30}" font-family="sans-serif" font-size="13">',
        f'<rect width="{size}" height="{size + 30}" fill="white"/>',
        f'<text x="{c}" y="20" text-anchor="middle">{title}</text>',
    ]
    half = cell / 2
    for x, y, v in zip(xs, ys, values):
        if not math.isfinite(v):
            continue
        t = (v - v_lo) / span
        r = int(255 * t)
        b = int(255 * (1 - t))
        g = int(90 + 60 * (1 - abs(2 * t - 1)))
        px = c + (x - half) * scale
        py = c - (y + half) * scale + 15
        parts.append(
            f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{_fmt(cell * scale)}" '
            f'height="{_fmt(cell * scale)}" fill="rgb({r},{g},{b})"/>'
        )
    parts.append(f'<circle cx="{c}" cy="{c + 15}" r="{scale}" fill="none" stroke="black"/>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")
