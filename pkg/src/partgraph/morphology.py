"""Large-scale structures of G_n: antenna vertices, main chain, side edges,
boundary framework, self-conjugate axis, axial distance, central regions,
spine, oriented-edge orientation, and emergence/concentration scans.

Axial distance takes the distinguished value ``INFINITE`` (math.inf) when
the self-conjugate axis is empty, which in the supported range happens only
for n = 2.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum

from .graph import (DEFAULT_MAX_N, PartitionGraph, build_graph,
                    distances_from)
from .local_invariants import (DEFAULT_CLIQUE_BOUND, LocalInvariants,
                               layers_and_spectra)
from .partitions import (Partition, conjugate, enumerate_partitions,
                         is_self_conjugate, validate)

INFINITE = math.inf


def antenna_vertices(n: int) -> frozenset[Partition]:
    """The extreme hooks (n,) and (1,)*n; they coincide when n = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return frozenset({(n,), (1,) * n})


def main_chain(n: int) -> tuple[Partition, ...]:
    """The hook path (n), (n-1,1), ..., (1^n); consecutive entries are adjacent."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return tuple((n - k,) + (1,) * k for k in range(n))


def side_edges(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    """The two-part chain (n-1,1), (n-2,2), ... and its conjugate image.

    Both are empty for n = 1 (there is no two-part partition of 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    left = tuple((n - k, k) for k in range(1, n // 2 + 1))
    right = tuple(conjugate(lam) for lam in left)
    return left, right


def boundary_framework(n: int) -> tuple[frozenset[Partition], frozenset[Partition]]:
    """(framework, interior): main chain plus both side edges, and the rest."""
    left, right = side_edges(n)
    framework = frozenset(main_chain(n)) | frozenset(left) | frozenset(right)
    interior = frozenset(enumerate_partitions(n)) - framework
    return framework, interior


def self_conjugate_axis(n: int) -> tuple[Partition, ...]:
    """Fixed points of conjugation, in decreasing lexicographic order."""
    return tuple(lam for lam in enumerate_partitions(n) if is_self_conjugate(lam))


def axial_distance(g: PartitionGraph) -> dict[Partition, int | float]:
    """Graph distance from every vertex to the self-conjugate axis.

    When the axis is empty every vertex maps to ``INFINITE``.
    """
    axis = [i for i, lam in enumerate(g.vertices) if is_self_conjugate(lam)]
    if not axis:
        return {lam: INFINITE for lam in g.vertices}
    dist = distances_from(g, axis)
    return {lam: dist[i] for i, lam in enumerate(g.vertices)}


def central_region(g: PartitionGraph, r: int,
                   d_ax: dict[Partition, int | float] | None = None,
                   ) -> frozenset[Partition]:
    """Non-framework vertices within axial distance r of the axis."""
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    if d_ax is None:
        d_ax = axial_distance(g)
    framework, _ = boundary_framework(g.n)
    return frozenset(lam for lam in g.vertices
                     if lam not in framework and d_ax[lam] <= r)


@dataclass(frozen=True)
class SpineResult:
    """Self-conjugate axis plus all shortest-path corridors between
    consecutive axis vertices (taken in decreasing lexicographic order).

    ``bridges[i]`` is the set of vertices lying on at least one shortest
    path between axis[i] and axis[i+1], endpoints included.  ``vertices``
    is the axis united with every bridge; it is empty iff the axis is.
    """

    axis: tuple[Partition, ...]
    bridges: tuple[frozenset[Partition], ...]
    vertices: frozenset[Partition]


def spine(g: PartitionGraph) -> SpineResult:
    """Compute the spine of G_n.

    Bridge membership uses the two-distance test
    d(a, v) + d(v, b) == d(a, b), which captures every vertex on any
    shortest a-b path without enumerating paths.
    """
    axis = tuple(lam for lam in g.vertices if is_self_conjugate(lam))
    if not axis:
        return SpineResult((), (), frozenset())
    dist_maps = {lam: distances_from(g, [g.index_of(lam)]) for lam in axis}
    bridges: list[frozenset[Partition]] = []
    members = set(axis)
    for a, b in zip(axis, axis[1:]):
        da, db = dist_maps[a], dist_maps[b]
        d_ab = da[g.index_of(b)]
        bridge = frozenset(g.vertices[i] for i in range(len(g))
                           if da[i] + db[i] == d_ab)
        bridges.append(bridge)
        members |= bridge
    return SpineResult(axis, tuple(bridges), frozenset(members))


class EdgeOrientation(Enum):
    AXIAL = "axial"
    TRANSVERSE = "transverse"


def classify_oriented_edge(g: PartitionGraph, lam: Partition, mu: Partition,
                           d_ax: dict[Partition, int | float] | None = None,
                           ) -> EdgeOrientation:
    """AXIAL when the move does not increase axial distance, else TRANSVERSE.

    Defined only for adjacent endpoints and a nonempty self-conjugate axis;
    both violations raise ValueError.
    """
    lam, mu = validate(lam), validate(mu)
    u, v = g.index_of(lam), g.index_of(mu)
    if not g.are_adjacent(u, v):
        raise ValueError(f"{lam} and {mu} are not adjacent in G_{g.n}")
    if d_ax is None:
        d_ax = axial_distance(g)
    if math.isinf(d_ax[lam]):
        raise ValueError(
            f"edge orientation is undefined for n={g.n}: "
            "the self-conjugate axis is empty")
    if d_ax[mu] <= d_ax[lam]:
        return EdgeOrientation.AXIAL
    return EdgeOrientation.TRANSVERSE


@dataclass(frozen=True)
class MorphologyReport:
    """Every morphological structure of one G_n, computed in a single pass."""

    n: int
    antenna: frozenset[Partition]
    main_chain: tuple[Partition, ...]
    left_edge: tuple[Partition, ...]
    right_edge: tuple[Partition, ...]
    framework: frozenset[Partition]
    interior: frozenset[Partition]
    sc_axis: tuple[Partition, ...]
    axial: dict[Partition, int | float]
    central_regions: dict[int, frozenset[Partition]]
    spine: SpineResult


def morphology_report(g: PartitionGraph,
                      r_values: Iterable[int] = (1, 2)) -> MorphologyReport:
    """Assemble the MorphologyReport for a built graph.

    ``r_values`` selects which central regions to materialize; the default
    covers the narrow region and its first thickening.
    """
    left, right = side_edges(g.n)
    framework, interior = boundary_framework(g.n)
    d_ax = axial_distance(g)
    central = {r: central_region(g, r, d_ax) for r in sorted(set(r_values))}
    return MorphologyReport(
        n=g.n,
        antenna=antenna_vertices(g.n),
        main_chain=main_chain(g.n),
        left_edge=left,
        right_edge=right,
        framework=framework,
        interior=interior,
        sc_axis=self_conjugate_axis(g.n),
        axial=d_ax,
        central_regions=central,
        spine=spine(g),
    )


@dataclass(frozen=True)
class GraphAnalysis:
    """One n's graph bundled with its local invariants and morphology report."""

    graph: PartitionGraph
    invariants: LocalInvariants
    report: MorphologyReport

    @property
    def n(self) -> int:
        return self.graph.n


def analyze(n: int, r_values: Iterable[int] = (1, 2),
            max_n: int | None = DEFAULT_MAX_N,
            clique_bound: int = DEFAULT_CLIQUE_BOUND) -> GraphAnalysis:
    """Build G_n and compute everything the reporting and atlas layers need."""
    g = build_graph(n, max_n)
    return GraphAnalysis(g, layers_and_spectra(g, clique_bound),
                         morphology_report(g, r_values))


Feature = Callable[[GraphAnalysis], bool]


def emergence_threshold(feature: Feature, n_max: int, n_min: int = 1,
                        max_n: int | None = DEFAULT_MAX_N) -> int | None:
    """Least n in [n_min, n_max] whose analysis exhibits the feature, else None."""
    if n_max < 1 or n_min < 1:
        raise ValueError("thresholds are searched over n >= 1")
    for n in range(n_min, n_max + 1):
        if feature(analyze(n, max_n=max_n)):
            return n
    return None


# built-in features scanned by the `thresholds` CLI subcommand
THRESHOLD_FEATURES: dict[str, Feature] = {
    "sc_axis_at_least_2": lambda a: len(a.report.sc_axis) >= 2,
    "max_dim_loc_ge_1": lambda a: a.invariants.max_dim_loc >= 1,
    "max_dim_loc_ge_2": lambda a: a.invariants.max_dim_loc >= 2,
    "max_dim_loc_ge_3": lambda a: a.invariants.max_dim_loc >= 3,
    "max_dim_loc_ge_4": lambda a: a.invariants.max_dim_loc >= 4,
    "narrow_central_nonempty": lambda a: bool(a.report.central_regions[1]),
    "spine_beyond_axis": lambda a: len(a.report.spine.vertices) > len(a.report.sc_axis),
}


@dataclass(frozen=True)
class ConcentrationRecord:
    """Per-n verdict on whether the extremal vertex sets sit inside C^(r).

    The containment fields are None when the axis is empty and the central
    region is therefore undefined-empty by convention.
    """

    n: int
    radius: int
    axis_empty: bool
    max_degree: int
    max_degree_vertices: tuple[Partition, ...]
    max_degree_in_central: bool | None
    max_dim_loc: int
    max_dim_loc_vertices: tuple[Partition, ...]
    max_dim_loc_in_central: bool | None


def concentration_scan(n_values: Iterable[int], radius: int,
                       max_n: int | None = DEFAULT_MAX_N,
                       ) -> list[ConcentrationRecord]:
    """Empirical scan: do the maximal-degree and maximal-dim_loc vertices
    lie in the radius-r central region?  Reports verdicts, asserts nothing.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    records = []
    for n in n_values:
        a = analyze(n, r_values=(radius,), max_n=max_n)
        g, inv, rep = a.graph, a.invariants, a.report
        central = rep.central_regions[radius]
        axis_empty = not rep.sc_axis
        deg_set = tuple(g.vertices[v]
                        for v in inv.degree_layers[inv.max_degree])
        dim_set = tuple(g.vertices[v]
                        for v in inv.simplex_layers[inv.max_dim_loc])
        records.append(ConcentrationRecord(
            n=n,
            radius=radius,
            axis_empty=axis_empty,
            max_degree=inv.max_degree,
            max_degree_vertices=deg_set,
            max_degree_in_central=None if axis_empty else set(deg_set) <= central,
            max_dim_loc=inv.max_dim_loc,
            max_dim_loc_vertices=dim_set,
            max_dim_loc_in_central=None if axis_empty else set(dim_set) <= central,
        ))
    return records
