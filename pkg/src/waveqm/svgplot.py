"""Minimal self-contained SVG output: polyline charts and matrix heat maps.

No plotting process is spawned and nothing is interactive; these exist
so the command-line tool can emit figure files next to its CSV output.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f", "#bcbd22")

_W, _H = 720, 480
_ML, _MR, _MT, _MB = 70, 24, 36, 52


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(n - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = min(s for s in (mag, 2 * mag, 2.5 * mag, 5 * mag, 10 * mag) if s >= raw)
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-12 * step:
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def line_chart(
    series: list[tuple[str, np.ndarray, np.ndarray]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
) -> str:
    """Render labeled (x, y) polylines to an SVG string."""
    xs = np.concatenate([np.asarray(x, dtype=float) for _, x, _ in series])
    ys = np.concatenate([np.asarray(y, dtype=float) for _, _, y in series])
    x_lo, x_hi = float(xs.min()), float(xs.max())
    y_lo, y_hi = float(ys.min()), float(ys.max())
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.04 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x: float) -> float:
        return _ML + (x - x_lo) / (x_hi - x_lo) * (_W - _ML - _MR)

    def py(y: float) -> float:
        return _H - _MB - (y - y_lo) / (y_hi - y_lo) * (_H - _MT - _MB)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.0f}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">{title}</text>',
    ]
    axis = f'stroke="#333" stroke-width="1"'
    parts.append(f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" {axis}/>')
    parts.append(f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" {axis}/>')
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        parts.append(f'<line x1="{x:.1f}" y1="{_H - _MB}" x2="{x:.1f}" y2="{_H - _MB + 5}" {axis}/>')
        parts.append(
            f'<text x="{x:.1f}" y="{_H - _MB + 18}" text-anchor="middle" font-family="sans-serif" font-size="11">{_fmt(t)}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        parts.append(f'<line x1="{_ML - 5}" y1="{y:.1f}" x2="{_ML}" y2="{y:.1f}" {axis}/>')
        parts.append(
            f'<text x="{_ML - 8}" y="{y + 4:.1f}" text-anchor="end" font-family="sans-serif" font-size="11">{_fmt(t)}</text>'
        )
    if xlabel:
        parts.append(
            f'<text x="{(_ML + _W - _MR) / 2:.0f}" y="{_H - 12}" text-anchor="middle" font-family="sans-serif" font-size="13">{xlabel}</text>'
        )
    if ylabel:
        parts.append(
            f'<text x="16" y="{(_MT + _H - _MB) / 2:.0f}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="13" transform="rotate(-90 16 {(_MT + _H - _MB) / 2:.0f})">{ylabel}</text>'
        )
    for i, (label, x, y) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{px(float(a)):.2f},{py(float(b)):.2f}" for a, b in zip(x, y))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.6"/>')
        ly = _MT + 16 + 15 * i
        parts.append(f'<line x1="{_W - _MR - 120}" y1="{ly - 4}" x2="{_W - _MR - 96}" y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{_W - _MR - 90}" y="{ly}" font-family="sans-serif" font-size="11">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def heatmap(matrix: np.ndarray, title: str = "", separators: tuple[int, ...] = ()) -> str:
    """Render a matrix as a diverging red/blue heat map.

    separators draws heavy grid lines before the given row/column
    indices, which is how the four Hamiltonian compartments are shown.
    """
    A = np.asarray(matrix, dtype=float)
    n = A.shape[0]
    cell = max(4, min(14, 560 // max(n, 1)))
    pad, top = 40, 40
    w = h = pad * 2 + cell * n
    vmax = float(np.abs(A).max()) or 1.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h + top}" viewBox="0 0 {w} {h + top}">',
        f'<rect width="{w}" height="{h + top}" fill="white"/>',
        f'<text x="{w / 2:.0f}" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">{title}</text>',
    ]
    for i in range(n):
        for j in range(n):
            v = A[i, j] / vmax
            mag = min(1.0, abs(v)) ** 0.5  # sqrt stretch keeps small couplings visible
            if v >= 0:
                r, g, b = 255, round(255 * (1 - mag)), round(255 * (1 - mag))
            else:
                r, g, b = round(255 * (1 - mag)), round(255 * (1 - mag)), 255
            parts.append(
                f'<rect x="{pad + j * cell}" y="{top + pad + i * cell}" width="{cell}" height="{cell}" '
                f'fill="rgb({r},{g},{b})"/>'
            )
    for s in separators:
        o = pad + s * cell
        parts.append(f'<line x1="{o}" y1="{top + pad}" x2="{o}" y2="{top + pad + n * cell}" stroke="#000" stroke-width="1.5"/>')
        parts.append(f'<line x1="{pad}" y1="{top + o}" x2="{pad + n * cell}" y2="{top + o}" stroke="#000" stroke-width="1.5"/>')
    parts.append(
        f'<rect x="{pad}" y="{top + pad}" width="{cell * n}" height="{cell * n}" fill="none" stroke="#000" stroke-width="1"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(path: str | Path, svg: str) -> None:
    Path(path).write_text(svg, encoding="utf-8")
