"""Independent brute-force reference implementations, used only by tests.

Nothing here shares code with the package: partition counting goes through
the pentagonal-number recurrence, conjugation transposes an explicit 0/1
diagram, neighbor generation tries every positional (source row, target
row) pair, the clique number checks every vertex subset, and shortest-path
membership enumerates the paths themselves.
"""

from itertools import combinations


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conjugate_by_diagram(lam):
    """Transpose the explicit Ferrers diagram, column by column."""
    width = lam[0]
    return tuple(sum(1 for p in lam if p > j) for j in range(width))


def neighbors_by_positions(lam):
    """Single-cell moves tried at every (source row, target row) index pair.

    The target may be a new row; results equal to the input are not edges.
    """
    lam = tuple(lam)
    out = set()
    for i in range(len(lam)):
        for j in range(len(lam) + 1):
            if j == i:
                continue
            cand = list(lam)
            cand[i] -= 1
            if j == len(lam):
                cand.append(1)
            else:
                cand[j] += 1
            mu = tuple(sorted((p for p in cand if p > 0), reverse=True))
            if mu != lam:
                out.add(mu)
    return out


def clique_number_bruteforce(adjacency, max_vertices: int = 20) -> int:
    """Largest clique size by checking every vertex subset (small graphs only)."""
    k = len(adjacency)
    if k > max_vertices:
        raise ValueError(f"brute force limited to {max_vertices} vertices, got {k}")
    best = 0
    for size in range(k, 0, -1):
        if size <= best:
            break
        for combo in combinations(range(k), size):
            if all(b in adjacency[a] for a, b in combinations(combo, 2)):
                best = size
                break
    return best


def bfs_distances(adjacency, source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def shortest_path_vertices(adjacency, a: int, b: int) -> set[int]:
    """Vertices on at least one shortest a-b path, by enumerating the paths."""
    dist = bfs_distances(adjacency, a)
    target = dist[b]
    members: set[int] = set()

    def walk(v, acc):
        if v == b:
            members.update(acc)
            return
        for w in adjacency[v]:
            if dist[w] == dist[v] + 1 and dist[w] <= target:
                acc.append(w)
                walk(w, acc)
                acc.pop()

    walk(a, [a])
    return members
