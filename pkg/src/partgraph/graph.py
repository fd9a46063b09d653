"""The graph G_n on partitions of n; edges are single-cell transfers.

Two partitions are adjacent when one arises from the other by moving one
cell of the Ferrers diagram from a row to a different row (possibly a new
row of length 1) and re-sorting, with the proviso that the result differs
from the starting partition.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .partitions import Partition, enumerate_partitions, validate

# p(40) = 37338; beyond that accidental calls get expensive fast
DEFAULT_MAX_N = 40


class SizeLimitError(ValueError):
    """A size guard was exceeded; pass a larger limit to proceed anyway."""


def neighbors(lam: Partition) -> set[Partition]:
    """All partitions reachable from lam by one cell transfer.

    Only distinct part values need to be tried on either side of the move:
    removing a cell from any row of a given size gives the same multiset,
    and likewise for the receiving row.  Moves that re-sort back to lam
    (transfers between rows whose sizes differ by at most one) are not
    edges and are filtered out.
    """
    lam = validate(lam)
    out: set[Partition] = set()
    for s in set(lam):
        donor = list(lam)
        donor.remove(s)
        if s > 1:
            donor.append(s - 1)
        for t in set(donor) | {0}:  # t = 0 means a new row
            cand = list(donor)
            if t:
                cand.remove(t)
            cand.append(t + 1)
            cand.sort(reverse=True)
            mu = tuple(cand)
            if mu != lam:
                out.add(mu)
    return out


class PartitionGraph:
    """Immutable adjacency structure for G_n.

    Vertices are indexed 0..p(n)-1 in decreasing lexicographic order, so
    index 0 is (n,) and the last index is (1,)*n.  Adjacency rows are
    sorted index tuples.
    """

    __slots__ = ("n", "vertices", "adjacency", "_index")

    def __init__(self, n: int, vertices: tuple[Partition, ...],
                 adjacency: tuple[tuple[int, ...], ...]):
        self.n = n
        self.vertices = vertices
        self.adjacency = adjacency
        self._index = {lam: i for i, lam in enumerate(vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return (f"PartitionGraph(n={self.n}, vertices={len(self)}, "
                f"edges={self.edge_count})")

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def index_of(self, lam: Partition) -> int:
        try:
            return self._index[tuple(lam)]
        except KeyError:
            raise ValueError(f"{lam!r} is not a partition of {self.n}") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def are_adjacent(self, u: int, v: int) -> bool:
        # rows are short; a linear scan beats bisect at these sizes
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic index order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v


def build_graph(n: int, max_n: int | None = DEFAULT_MAX_N) -> PartitionGraph:
    """Construct G_n.  Refuses n beyond max_n; pass max_n=None to lift the guard."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if max_n is not None and n > max_n:
        raise SizeLimitError(
            f"n={n} exceeds the size guard max_n={max_n}")
    verts = tuple(enumerate_partitions(n))
    index = {lam: i for i, lam in enumerate(verts)}
    adjacency = tuple(
        tuple(sorted(index[mu] for mu in neighbors(lam))) for lam in verts
    )
    return PartitionGraph(n, verts, adjacency)


def distances_from(g: PartitionGraph, sources: Iterable[int]) -> list[int]:
    """Unit-weight BFS distances from a nonempty set of source indices.

    G_n is connected, so the result assigns a finite distance to every
    vertex.  Callers that need the empty-source convention (distance
    infinity everywhere) handle it themselves.
    """
    src = sorted(set(sources))
    if not src:
        raise ValueError("source set must be nonempty")
    if src[0] < 0 or src[-1] >= len(g):
        raise ValueError(f"source index out of range for {g!r}")
    dist = [-1] * len(g)
    queue = deque(src)
    for s in src:
        dist[s] = 0
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist
