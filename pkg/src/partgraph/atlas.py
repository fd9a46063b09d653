"""Deterministic SVG atlas of small partition graphs.

Every vertex is drawn at integer grid coordinates: x is the first part
minus the number of parts, so conjugate partitions mirror across the dashed
vertical axis at x = 0 and self-conjugate partitions sit on it; y merely
separates the vertices of a column.  Output bytes depend only on the input
graphs: coordinates use fixed two-decimal formatting and all iteration
follows vertex index order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import PartitionGraph
from .morphology import GraphAnalysis
from .partitions import Partition, format_parts

MODES = ("structure", "degree", "simplex", "central_spine")

STEP = 40        # pixels per grid unit
MARGIN = 60
NODE_RADIUS = 8.0
THICK_OUTLINE = 3.0

# 8-step sequential ramp, light to dark, sampled linearly over the value range
PALETTE = ("#ffffd9", "#edf8b1", "#c7e9b4", "#7fcdbb",
           "#41b6c4", "#1d91c0", "#225ea8", "#0c2c84")

SC_BLUE = "#1f3d7a"
FRAMEWORK_TINT = "#d7e3f4"
BOUNDARY_GRAY = "#d9d9d9"
THICK_CENTRAL_GRAY = "#8c8c8c"
NARROW_CENTRAL_SILVER = "#c0c0c0"
EDGE_GRAY = "#b0b0b0"
AXIS_GRAY = "#888888"
OUTLINE = "#333333"
WHITE = "#ffffff"


@dataclass(frozen=True)
class AtlasLayout:
    """Integer grid coordinates for one panel, keyed by partition."""

    n: int
    positions: dict[Partition, tuple[int, int]]


def layout(g: PartitionGraph) -> AtlasLayout:
    """x = first part minus length; each x-column stacks its vertices in
    decreasing lexicographic order with consecutive y values centered on 0."""
    columns: dict[int, list[Partition]] = {}
    for lam in g.vertices:  # vertex order is already decreasing lex
        columns.setdefault(lam[0] - len(lam), []).append(lam)
    positions: dict[Partition, tuple[int, int]] = {}
    for x, column in columns.items():
        shift = len(column) // 2
        for i, lam in enumerate(column):
            positions[lam] = (x, i - shift)
    return AtlasLayout(g.n, positions)


def color_for(value: float, vmin: float, vmax: float) -> str:
    """Palette entry for a value within [vmin, vmax]; pure and total."""
    if vmax <= vmin:
        return PALETTE[0]
    t = (value - vmin) / (vmax - vmin)
    idx = round(t * (len(PALETTE) - 1))
    return PALETTE[min(max(idx, 0), len(PALETTE) - 1)]


def series_value_range(analyses: Iterable[GraphAnalysis],
                       mode: str) -> tuple[int, int] | None:
    """Shared (min, max) for a value-colored series; None for categorical modes."""
    if mode == "degree":
        values = [d for a in analyses for d in a.invariants.degree]
    elif mode == "simplex":
        values = [d for a in analyses for d in a.invariants.dim_loc]
    else:
        return None
    return min(values), max(values)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _vertex_style(lam: Partition, analysis: GraphAnalysis, mode: str,
                  value_range: tuple[int, int] | None,
                  ) -> tuple[str, str, float]:
    """(fill, stroke, stroke_width) for one vertex under one annotation mode."""
    rep = analysis.report
    if mode in ("degree", "simplex"):
        i = analysis.graph.index_of(lam)
        value = (analysis.invariants.degree[i] if mode == "degree"
                 else analysis.invariants.dim_loc[i])
        return color_for(value, *value_range), OUTLINE, 1.0
    sc = lam in rep.sc_axis
    if mode == "structure":
        if sc:
            fill = SC_BLUE
        elif lam in rep.framework:
            fill = FRAMEWORK_TINT
        else:
            fill = WHITE
        return fill, OUTLINE, 1.0
    if mode == "central_spine":
        # one fill per vertex: the most specific class wins
        if sc:
            fill = "#000000"
        elif lam in rep.central_regions.get(1, frozenset()):
            fill = NARROW_CENTRAL_SILVER
        elif lam in rep.central_regions.get(2, frozenset()):
            fill = THICK_CENTRAL_GRAY
        elif lam in rep.framework:
            fill = BOUNDARY_GRAY
        else:
            fill = WHITE
        width = THICK_OUTLINE if lam in rep.spine.vertices else 1.0
        return fill, "#000000", width
    raise ValueError(f"unknown atlas mode: {mode!r}")


def _extent(lay: AtlasLayout) -> tuple[int, int, int, int]:
    xs = [p[0] for p in lay.positions.values()]
    ys = [p[1] for p in lay.positions.values()]
    return min(xs), max(xs), min(ys), max(ys)


def panel_size(lay: AtlasLayout) -> tuple[float, float]:
    x0, x1, y0, y1 = _extent(lay)
    return ((x1 - x0) * STEP + 2 * MARGIN, (y1 - y0) * STEP + 2 * MARGIN)


def _panel_body(analysis: GraphAnalysis, lay: AtlasLayout, mode: str,
                value_range: tuple[int, int] | None,
                ox: float, oy: float) -> list[str]:
    """SVG elements for one panel whose top-left corner is (ox, oy)."""
    g = analysis.graph
    x0, x1, y0, y1 = _extent(lay)
    width, height = panel_size(lay)

    def px(x: int) -> float:
        return ox + MARGIN + (x - x0) * STEP

    def py(y: int) -> float:
        return oy + MARGIN + (y - y0) * STEP

    parts = [
        f'<text x="{_fmt(ox + 10)}" y="{_fmt(oy + 24)}" '
        f'font-family="Helvetica, Arial, sans-serif" font-size="16">'
        f'G_{g.n}</text>'
    ]
    ax = px(0)  # x = 0 always lies between (n,) and (1,)*n
    parts.append(
        f'<line x1="{_fmt(ax)}" y1="{_fmt(oy + MARGIN / 2)}" '
        f'x2="{_fmt(ax)}" y2="{_fmt(oy + height - MARGIN / 2)}" '
        f'stroke="{AXIS_GRAY}" stroke-width="1" stroke-dasharray="6 4"/>'
    )
    for u, v in g.edges():
        xu, yu = lay.positions[g.vertices[u]]
        xv, yv = lay.positions[g.vertices[v]]
        parts.append(
            f'<line x1="{_fmt(px(xu))}" y1="{_fmt(py(yu))}" '
            f'x2="{_fmt(px(xv))}" y2="{_fmt(py(yv))}" '
            f'stroke="{EDGE_GRAY}" stroke-width="1"/>'
        )
    for lam in g.vertices:
        x, y = lay.positions[lam]
        fill, stroke, sw = _vertex_style(lam, analysis, mode, value_range)
        parts.append(
            f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" '
            f'r="{_fmt(NODE_RADIUS)}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{_fmt(sw)}"/>'
        )
    return parts


def _document(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    background = (f'<rect x="0" y="0" width="{_fmt(width)}" '
                  f'height="{_fmt(height)}" fill="{WHITE}"/>')
    return "\n".join([head, background, *body, "</svg>"]) + "\n"


def render_panel(analysis: GraphAnalysis, mode: str,
                 value_range: tuple[int, int] | None = None) -> str:
    """Standalone single-panel document for one n."""
    if mode not in MODES:
        raise ValueError(f"unknown atlas mode: {mode!r}")
    lay = layout(analysis.graph)
    if value_range is None:
        value_range = series_value_range([analysis], mode)
    width, height = panel_size(lay)
    return _document(width, height,
                     _panel_body(analysis, lay, mode, value_range, 0.0, 0.0))


def render_series(analyses: Sequence[GraphAnalysis], mode: str,
                  group_size: int = 4, columns: int = 2) -> list[str]:
    """Multi-panel documents: consecutive groups of panels on a fixed grid.

    Value-colored modes share one color range across the whole series, not
    per document.
    """
    if mode not in MODES:
        raise ValueError(f"unknown atlas mode: {mode!r}")
    ordered = sorted(analyses, key=lambda a: a.n)
    value_range = series_value_range(ordered, mode)
    docs = []
    for start in range(0, len(ordered), group_size):
        group = ordered[start:start + group_size]
        layouts = [layout(a.graph) for a in group]
        sizes = [panel_size(lay) for lay in layouts]
        cell_w = max(w for w, _ in sizes)
        cell_h = max(h for _, h in sizes)
        body: list[str] = []
        for k, (a, lay) in enumerate(zip(group, layouts)):
            row, col = divmod(k, columns)
            body.extend(_panel_body(a, lay, mode, value_range,
                                    col * cell_w, row * cell_h))
        rows_used = -(-len(group) // columns)
        docs.append(_document(columns * cell_w, rows_used * cell_h, body))
    return docs


def render_focus(analysis: GraphAnalysis, label_gutter: float = 180.0) -> str:
    """Single enlarged structural panel with the self-conjugate vertices
    labeled outside the drawing and tied to their circles by leader lines."""
    lay = layout(analysis.graph)
    width, height = panel_size(lay)
    body = _panel_body(analysis, lay, "structure", None, 0.0, 0.0)
    x0, _, y0, _ = _extent(lay)
    label_x = width + 16
    for lam in analysis.report.sc_axis:
        x, y = lay.positions[lam]
        cx = MARGIN + (x - x0) * STEP
        cy = MARGIN + (y - y0) * STEP
        body.append(
            f'<line x1="{_fmt(cx + NODE_RADIUS)}" y1="{_fmt(cy)}" '
            f'x2="{_fmt(label_x - 6)}" y2="{_fmt(cy)}" '
            f'stroke="#555555" stroke-width="1"/>'
        )
        body.append(
            f'<text x="{_fmt(label_x)}" y="{_fmt(cy + 5)}" '
            f'font-family="Helvetica, Arial, sans-serif" font-size="14">'
            f'{format_parts(lam)}</text>'
        )
    return _document(width + label_gutter, height, body)


def render_atlas(analyses: Sequence[GraphAnalysis],
                 modes: Iterable[str] = MODES,
                 group_size: int = 4,
                 focus_n: int = 12) -> dict[str, str]:
    """All series documents plus the focus page, keyed by file name."""
    out: dict[str, str] = {}
    for mode in modes:
        for k, doc in enumerate(render_series(analyses, mode,
                                              group_size=group_size), start=1):
            out[f"atlas_{mode}_part{k}.svg"] = doc
    for a in analyses:
        if a.n == focus_n:
            out[f"g{focus_n}_focus.svg"] = render_focus(a)
    return out
