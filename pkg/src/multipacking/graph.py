"""Undirected simple graphs with BFS-based metric helpers.

Vertices are dense integer ids 0..n-1.  Distances use the sentinel value
``n`` (an impossible finite hop count) for unreachable pairs, so hot loops
never deal with optionals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Canonical undirected simple graph: sorted adjacency lists, no loops."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def inf(self) -> int:
        """Distance sentinel for unreachable pairs."""
        return self.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adj[u]
        ]
        return Graph.from_edges(self.n, edges)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; entries for disconnected pairs equal ``n``."""

    n: int
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.dist[v]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``g.n``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    inf = g.n
    dist = [inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] == inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return g.n not in bfs_distances(g, 0)


def radius_diameter(g: Graph, D: DistanceMatrix) -> tuple[int, int]:
    """(rad, diam) of a connected graph; raises on disconnected input."""
    if g.n == 0:
        raise ValueError("radius undefined for the empty graph")
    inf = g.n
    ecc = []
    for v in range(g.n):
        e = max(D[v])
        if e >= inf:
            raise ValueError("radius undefined for disconnected graphs")
        ecc.append(e)
    return min(ecc), max(ecc)


def ball(D: DistanceMatrix, v: int, r: int) -> tuple[int, ...]:
    """Closed ball: all vertices at distance <= r from v."""
    if not 0 <= v < D.n:
        raise ValueError(f"vertex {v} out of range")
    row = D[v]
    return tuple(u for u in range(D.n) if row[u] <= r)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, smallest id first."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` with dense relabeling.

    Returns (subgraph, old_ids) where old_ids[new] is the original id.
    """
    old = sorted(vertices)
    pos = {v: i for i, v in enumerate(old)}
    edges = [
        (pos[u], pos[v])
        for u in old
        for v in g.adj[u]
        if u < v and v in pos
    ]
    return Graph.from_edges(len(old), edges), old
