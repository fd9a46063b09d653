"""Per-vertex invariants of G_n: degree, neighborhood graphs, local simplex
dimension, and the layer/spectrum bookkeeping built on top of them.

The local simplex dimension of a vertex is the size of the largest clique
of its open neighborhood, i.e. one less than the size of the largest clique
of the whole graph containing the vertex; an isolated vertex gets 0.
"""

from __future__ import annotations

from collections.abc import Sequence, Set
from dataclasses import dataclass

from .graph import PartitionGraph, SizeLimitError

# neighborhood graphs stay tiny in the supported n range; the clique search
# is exponential in the worst case, so refuse anything unexpectedly large
DEFAULT_CLIQUE_BOUND = 64


@dataclass(frozen=True)
class NeighborhoodGraph:
    """Induced subgraph on the open neighborhood of one vertex.

    ``members`` holds the original vertex indices in increasing order;
    ``adjacency`` uses local indices 0..len(members)-1.
    """

    members: tuple[int, ...]
    adjacency: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


def neighborhood_graph(g: PartitionGraph, v: int) -> NeighborhoodGraph:
    """Induced subgraph on the neighbors of v (v itself excluded)."""
    members = g.adjacency[v]
    local = {u: i for i, u in enumerate(members)}
    adjacency = tuple(
        frozenset(local[w] for w in g.adjacency[u] if w in local)
        for u in members
    )
    return NeighborhoodGraph(members, adjacency)


def clique_number(adjacency: Sequence[Set[int]],
                  max_vertices: int = DEFAULT_CLIQUE_BOUND) -> int:
    """Exact maximum-clique size of a small graph given as adjacency sets.

    Branch and bound: at each node the candidate set is greedily colored,
    the color of a candidate bounds the clique size reachable through it,
    and branches that cannot beat the incumbent are cut.  Every choice is
    made by smallest index, so the search order is deterministic.
    """
    k = len(adjacency)
    if k > max_vertices:
        raise SizeLimitError(
            f"graph has {k} vertices, clique search is bounded at {max_vertices}")
    if k == 0:
        return 0
    best = 0

    def expand(candidates: set[int], size: int) -> None:
        nonlocal best
        if not candidates:
            if size > best:
                best = size
            return
        order: list[tuple[int, int]] = []  # (vertex, color), colors ascending
        uncolored = set(candidates)
        color = 0
        while uncolored:
            color += 1
            admissible = set(uncolored)
            while admissible:
                v = min(admissible)
                order.append((v, color))
                admissible -= adjacency[v]
                admissible.discard(v)
                uncolored.discard(v)
        for v, c in reversed(order):
            if size + c <= best:
                return
            expand(candidates & set(adjacency[v]), size + 1)
            candidates.discard(v)

    expand(set(range(k)), 0)
    return best


def local_simplex_dimension(g: PartitionGraph, v: int,
                            max_vertices: int = DEFAULT_CLIQUE_BOUND) -> int:
    """Largest d such that v lies in a (d+1)-vertex clique of g; 0 if isolated."""
    return clique_number(neighborhood_graph(g, v).adjacency, max_vertices)


@dataclass(frozen=True)
class LocalInvariants:
    """Degree and local simplex dimension for every vertex of one G_n.

    Layer maps send an attained value to the sorted tuple of vertex indices
    carrying it; together the layers of either kind partition the vertex
    set.  Spectra are the sorted attained values.
    """

    n: int
    degree: tuple[int, ...]
    dim_loc: tuple[int, ...]
    degree_layers: dict[int, tuple[int, ...]]
    simplex_layers: dict[int, tuple[int, ...]]
    degree_spectrum: tuple[int, ...]
    simplex_spectrum: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.degree_spectrum[-1]

    @property
    def max_dim_loc(self) -> int:
        return self.simplex_spectrum[-1]


def _layer_map(values: Sequence[int]) -> dict[int, tuple[int, ...]]:
    layers: dict[int, list[int]] = {}
    for v, val in enumerate(values):
        layers.setdefault(val, []).append(v)
    return {val: tuple(members) for val, members in sorted(layers.items())}


def layers_and_spectra(g: PartitionGraph,
                       max_vertices: int = DEFAULT_CLIQUE_BOUND) -> LocalInvariants:
    """Compute degree and dim_loc for all vertices, plus layers and spectra."""
    degree = tuple(len(row) for row in g.adjacency)
    dim_loc = tuple(local_simplex_dimension(g, v, max_vertices)
                    for v in range(len(g)))
    degree_layers = _layer_map(degree)
    simplex_layers = _layer_map(dim_loc)
    return LocalInvariants(
        n=g.n,
        degree=degree,
        dim_loc=dim_loc,
        degree_layers=degree_layers,
        simplex_layers=simplex_layers,
        degree_spectrum=tuple(degree_layers),
        simplex_spectrum=tuple(simplex_layers),
    )
