"""Minimal deterministic SVG line charts.

Pure string assembly with fixed number formatting, so the same data
always yields the same bytes (a golden-file requirement the big plotting
libraries cannot meet because they embed generated ids).  One document
holds one or more panels stacked vertically; every panel draws one
polyline per named series, and a shared legend maps series names to
stroke colors.
"""

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2",
)

_MARGIN_LEFT = 64.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 28.0
_MARGIN_BOTTOM = 34.0
_LEGEND_ROW = 18.0
_FONT = "font-family=\"sans-serif\""


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick(v: float) -> str:
    return f"{v:.4g}"


def _extent(values, pad_fraction: float = 0.05):
    lo = min(values)
    hi = max(values)
    if hi == lo:
        lo -= 0.5
        hi += 0.5
    pad = (hi - lo) * pad_fraction
    return lo - pad, hi + pad


def render_line_chart(panels, width: int = 720, panel_height: int = 260) -> str:
    """Render panels of named polylines into one SVG document.

    `panels` is a list of (title, series) where series is a list of
    (name, points) and points is a list of (x, y).  Series sharing a name
    across panels share a color.  Returns the SVG text.
    """
    if not panels:
        raise ValueError("at least one panel is required")
    names = []
    for _, series in panels:
        for name, _ in series:
            if name not in names:
                names.append(name)
    if not names:
        raise ValueError("panels contain no series")
    colors = {name: PALETTE[i % len(PALETTE)] for i, name in enumerate(names)}

    legend_rows = (len(names) + 2) // 3
    legend_height = 10.0 + legend_rows * _LEGEND_ROW
    total_height = legend_height + len(panels) * panel_height

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {width} {_fmt(total_height)}" '
        f'width="{width}" height="{_fmt(total_height)}">',
        f'<rect x="0" y="0" width="{width}" height="{_fmt(total_height)}" '
        f'fill="#ffffff"/>',
        '<g class="legend">',
    ]
    for i, name in enumerate(names):
        row, col = divmod(i, 3)
        x = _MARGIN_LEFT + col * (width - _MARGIN_LEFT - _MARGIN_RIGHT) / 3.0
        y = 16.0 + row * _LEGEND_ROW
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(y - 4.0)}" x2="{_fmt(x + 22.0)}" '
            f'y2="{_fmt(y - 4.0)}" stroke="{colors[name]}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_fmt(x + 28.0)}" y="{_fmt(y)}" {_FONT} '
            f'font-size="12">{name}</text>'
        )
    parts.append("</g>")

    for pi, (title, series) in enumerate(panels):
        top = legend_height + pi * panel_height
        plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
        plot_h = panel_height - _MARGIN_TOP - _MARGIN_BOTTOM
        xs = [x for _, pts in series for x, _ in pts]
        ys = [y for _, pts in series for _, y in pts]
        if not xs:
            raise ValueError(f"panel {title!r} has no points")
        x_lo, x_hi = _extent(xs)
        y_lo, y_hi = _extent(ys)

        def sx(v):
            return _MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

        def sy(v):
            return top + _MARGIN_TOP + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

        parts.append('<g class="panel">')
        parts.append(
            f'<text x="{_fmt(_MARGIN_LEFT)}" y="{_fmt(top + 18.0)}" {_FONT} '
            f'font-size="13" font-weight="bold">{title}</text>'
        )
        axis_y = top + _MARGIN_TOP + plot_h
        parts.append(
            f'<line x1="{_fmt(_MARGIN_LEFT)}" y1="{_fmt(axis_y)}" '
            f'x2="{_fmt(_MARGIN_LEFT + plot_w)}" y2="{_fmt(axis_y)}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{_fmt(_MARGIN_LEFT)}" y1="{_fmt(top + _MARGIN_TOP)}" '
            f'x2="{_fmt(_MARGIN_LEFT)}" y2="{_fmt(axis_y)}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        if y_lo < 0.0 < y_hi:
            zero_y = sy(0.0)
            parts.append(
                f'<line x1="{_fmt(_MARGIN_LEFT)}" y1="{_fmt(zero_y)}" '
                f'x2="{_fmt(_MARGIN_LEFT + plot_w)}" y2="{_fmt(zero_y)}" '
                f'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 3"/>'
            )
        parts.append(
            f'<text x="{_fmt(_MARGIN_LEFT - 6.0)}" y="{_fmt(top + _MARGIN_TOP + 4.0)}" '
            f'{_FONT} font-size="10" text-anchor="end">{_tick(y_hi)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_MARGIN_LEFT - 6.0)}" y="{_fmt(axis_y + 4.0)}" '
            f'{_FONT} font-size="10" text-anchor="end">{_tick(y_lo)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_MARGIN_LEFT)}" y="{_fmt(axis_y + 16.0)}" '
            f'{_FONT} font-size="10">{_tick(x_lo)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_MARGIN_LEFT + plot_w)}" y="{_fmt(axis_y + 16.0)}" '
            f'{_FONT} font-size="10" text-anchor="end">{_tick(x_hi)}</text>'
        )
        for name, pts in series:
            if not pts:
                continue
            coords = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
            parts.append(
                f'<polyline fill="none" stroke="{colors[name]}" '
                f'stroke-width="1.5" points="{coords}"/>'
            )
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
