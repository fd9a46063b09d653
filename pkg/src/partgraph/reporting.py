"""Summary tables over ranges of n, plus JSON / DOT / CSV graph exports.

All emitters are deterministic: vertex order is the graph's decreasing
lexicographic index order, edges are listed with u < v, and the infinite
axial distance is spelled "inf" in every format.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import ClassVar

from .graph import DEFAULT_MAX_N
from .morphology import GraphAnalysis, analyze
from .partitions import format_parts

EXPORT_FORMATS = ("json", "dot", "csv")

VERTEX_CSV_HEADER = ("n", "id", "parts", "degree", "dim_loc", "d_ax",
                     "in_framework", "in_interior", "self_conjugate", "in_spine")
EDGE_CSV_HEADER = ("n", "u", "v")


@dataclass(frozen=True)
class BasicCountsRow:
    kind: ClassVar[str] = "basic"
    n: int
    partitions: int
    edges: int
    self_conjugate: int
    framework: int


@dataclass(frozen=True)
class MaximaRow:
    kind: ClassVar[str] = "maxima"
    n: int
    max_degree: int
    max_dim_loc: int


@dataclass(frozen=True)
class CentralSpineRow:
    kind: ClassVar[str] = "central_spine"
    n: int
    narrow_central: int
    thick_central: int
    spine: int
    interior: int


@dataclass(frozen=True)
class SpectraRow:
    kind: ClassVar[str] = "spectra"
    n: int
    degree_spectrum: tuple[int, ...]
    simplex_spectrum: tuple[int, ...]


def _analyses(n_values: Iterable[int],
              analyses: Mapping[int, GraphAnalysis] | None,
              max_n: int | None) -> Iterable[GraphAnalysis]:
    for n in n_values:
        if analyses is not None and n in analyses:
            yield analyses[n]
        else:
            yield analyze(n, max_n=max_n)


def basic_counts(n_values: Iterable[int], *,
                 analyses: Mapping[int, GraphAnalysis] | None = None,
                 max_n: int | None = DEFAULT_MAX_N) -> list[BasicCountsRow]:
    """Vertex, edge, self-conjugate, and framework counts per n."""
    return [
        BasicCountsRow(a.n, len(a.graph), a.graph.edge_count,
                       len(a.report.sc_axis), len(a.report.framework))
        for a in _analyses(n_values, analyses, max_n)
    ]


def maxima(n_values: Iterable[int], *,
           analyses: Mapping[int, GraphAnalysis] | None = None,
           max_n: int | None = DEFAULT_MAX_N) -> list[MaximaRow]:
    """Maximal degree and maximal local simplex dimension per n."""
    return [
        MaximaRow(a.n, a.invariants.max_degree, a.invariants.max_dim_loc)
        for a in _analyses(n_values, analyses, max_n)
    ]


def central_spine(n_values: Iterable[int], *,
                  analyses: Mapping[int, GraphAnalysis] | None = None,
                  max_n: int | None = DEFAULT_MAX_N) -> list[CentralSpineRow]:
    """Central-region sizes (r = 1, 2), spine size, and interior size per n."""
    rows = []
    for a in _analyses(n_values, analyses, max_n):
        rep = a.report
        rows.append(CentralSpineRow(
            a.n, len(rep.central_regions[1]), len(rep.central_regions[2]),
            len(rep.spine.vertices), len(rep.interior)))
    return rows


def spectra_report(n_values: Iterable[int], *,
                   analyses: Mapping[int, GraphAnalysis] | None = None,
                   max_n: int | None = DEFAULT_MAX_N) -> list[SpectraRow]:
    """Attained degree values and attained dim_loc values per n."""
    return [
        SpectraRow(a.n, a.invariants.degree_spectrum,
                   a.invariants.simplex_spectrum)
        for a in _analyses(n_values, analyses, max_n)
    ]


def _cell(value) -> str:
    if isinstance(value, tuple):
        return " ".join(str(v) for v in value)
    return str(value)


def rows_to_csv(rows) -> str:
    """One CSV document for a homogeneous list of table rows."""
    if not rows:
        return ""
    names = [f.name for f in dataclasses.fields(rows[0])]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for row in rows:
        writer.writerow([_cell(getattr(row, name)) for name in names])
    return buf.getvalue()


def rows_to_text(rows) -> str:
    """Aligned plain-text rendering of a homogeneous list of table rows."""
    if not rows:
        return ""
    names = [f.name for f in dataclasses.fields(rows[0])]
    table = [names] + [[_cell(getattr(row, name)) for name in names]
                       for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(names))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip()
             for line in table]
    return "\n".join(lines) + "\n"


def _dax_json(d: int | float):
    return "inf" if math.isinf(d) else int(d)


def export_json(analysis: GraphAnalysis) -> str:
    """One JSON document: vertices with invariants and membership flags, edges."""
    g, inv, rep = analysis.graph, analysis.invariants, analysis.report
    sc = frozenset(rep.sc_axis)
    spine_set = rep.spine.vertices
    vertices = []
    for i, lam in enumerate(g.vertices):
        flags = {
            "framework": lam in rep.framework,
            "interior": lam in rep.interior,
            "self_conjugate": lam in sc,
            "spine": lam in spine_set,
        }
        for r in sorted(rep.central_regions):
            flags[f"central_{r}"] = lam in rep.central_regions[r]
        vertices.append({
            "id": i,
            "parts": format_parts(lam),
            "degree": inv.degree[i],
            "dim_loc": inv.dim_loc[i],
            "d_ax": _dax_json(rep.axial[lam]),
            "flags": flags,
        })
    payload = {
        "n": g.n,
        "vertices": vertices,
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(payload, indent=2) + "\n"


def export_dot(analysis: GraphAnalysis) -> str:
    """Undirected DOT document with dot-text vertex labels."""
    g = analysis.graph
    lines = [f"graph g{g.n} {{"]
    for i, lam in enumerate(g.vertices):
        lines.append(f'  {i} [label="{format_parts(lam)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(analysis: GraphAnalysis) -> tuple[str, str]:
    """(vertices_csv, edges_csv) with the fixed headers; booleans as 1/0."""
    g, inv, rep = analysis.graph, analysis.invariants, analysis.report
    sc = frozenset(rep.sc_axis)
    spine_set = rep.spine.vertices

    vbuf = io.StringIO()
    vw = csv.writer(vbuf, lineterminator="\n")
    vw.writerow(VERTEX_CSV_HEADER)
    for i, lam in enumerate(g.vertices):
        d_ax = rep.axial[lam]
        vw.writerow([
            g.n, i, format_parts(lam), inv.degree[i], inv.dim_loc[i],
            "inf" if math.isinf(d_ax) else int(d_ax),
            int(lam in rep.framework), int(lam in rep.interior),
            int(lam in sc), int(lam in spine_set),
        ])

    ebuf = io.StringIO()
    ew = csv.writer(ebuf, lineterminator="\n")
    ew.writerow(EDGE_CSV_HEADER)
    for u, v in g.edges():
        ew.writerow([g.n, u, v])
    return vbuf.getvalue(), ebuf.getvalue()


def export_graph(analysis: GraphAnalysis, fmt: str) -> dict[str, bytes]:
    """Serialize one analyzed graph; returns {file name: payload}.

    CSV necessarily produces two payloads (vertices and edges); the other
    formats produce one.
    """
    n = analysis.n
    if fmt == "json":
        return {f"g{n}.json": export_json(analysis).encode()}
    if fmt == "dot":
        return {f"g{n}.dot": export_dot(analysis).encode()}
    if fmt == "csv":
        vtext, etext = export_csv(analysis)
        return {f"g{n}_vertices.csv": vtext.encode(),
                f"g{n}_edges.csv": etext.encode()}
    raise ValueError(f"unknown export format: {fmt!r}")
