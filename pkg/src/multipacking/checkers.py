"""Decision procedures for structural graph classes, each with a witness.

Positive witnesses re-verify (perfect elimination ordering, bipartition,
...); negative witnesses exhibit the violation (chordless cycle, odd walk,
induced claw).  Hyperbolicity is computed in exact half-integers.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from typing import Optional

from .graph import DistanceMatrix, Graph, all_pairs, is_connected


def lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS order; ties broken by smallest vertex id."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order: list[int] = []
    for step in range(g.n, 0, -1):
        v = max(
            (u for u in range(g.n) if not visited[u]),
            key=lambda u: (labels[u], -u),
        )
        visited[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not visited[u]:
                labels[u].append(step)
    return order


def _verify_peo(g: Graph, peo: list[int]) -> Optional[tuple[int, int, int]]:
    """None if peo is a perfect elimination ordering, else a failing triple
    (v, p, w): p and w occur after v, both adjacent to v, but not adjacent."""
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [u for u in g.adj[v] if pos[u] > i]
        if len(later) < 2:
            continue
        p = min(later, key=lambda u: pos[u])
        for w in later:
            if w != p and not g.has_edge(p, w):
                return v, p, w
    return None


def _chordless_cycle(g: Graph) -> list[int]:
    """Some chordless cycle of length >= 4 of a non-chordal graph.

    For each vertex v and nonadjacent neighbor pair (x, y), a shortest x-y
    path avoiding N[v] \\ {x, y} closes into a chordless cycle through v.
    """
    for v in range(g.n):
        nbrs = g.adj[v]
        blocked = set(nbrs) | {v}
        for x, y in itertools.combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            prev: dict[int, Optional[int]] = {x: None}
            queue = deque([x])
            while queue:
                u = queue.popleft()
                if u == y:
                    break
                for z in g.adj[u]:
                    if z not in prev and (z not in blocked or z == y):
                        prev[z] = u
                        queue.append(z)
            if y in prev:
                path = [y]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                path.reverse()  # x .. y
                return [v] + path
    raise ValueError("graph is chordal: no chordless cycle of length >= 4")


def is_chordal(g: Graph) -> tuple[bool, list[int]]:
    """(True, perfect elimination ordering) or (False, chordless cycle >= 4).

    The candidate ordering is the reverse of a lexicographic BFS; it is a
    perfect elimination ordering iff the graph is chordal, and the
    verification failure guarantees a chordless-cycle witness exists.
    """
    peo = lexbfs_order(g)[::-1]
    if _verify_peo(g, peo) is None:
        return True, peo
    return False, _chordless_cycle(g)


def is_bipartite(g: Graph) -> tuple[bool, tuple]:
    """(True, (side0, side1)) or (False, odd closed walk)."""
    color = [-1] * g.n
    parent: list[Optional[int]] = [None] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    # closed walk root -> u, edge (u, v), v -> root: the two
                    # tree legs have equal-parity length, so the total is odd
                    up: list[int] = []
                    node: Optional[int] = u
                    while node is not None:
                        up.append(node)
                        node = parent[node]
                    down: list[int] = []
                    node = v
                    while node is not None:
                        down.append(node)
                        node = parent[node]
                    return False, tuple(up[::-1] + down)
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return True, (side0, side1)


def is_clawfree(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """(True, None) or (False, (center, leaf, leaf, leaf)) for an induced claw."""
    for c in range(g.n):
        nbrs = g.adj[c]
        for x, y, z in itertools.combinations(nbrs, 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return False, (c, x, y, z)
    return True, None


def regularity(g: Graph) -> Optional[int]:
    """Common degree if the graph is regular, else None."""
    if g.n == 0:
        return 0
    degs = {g.degree(v) for v in range(g.n)}
    return degs.pop() if len(degs) == 1 else None


def hyperbolicity(g: Graph, D: Optional[DistanceMatrix] = None) -> Fraction:
    """Exact Gromov hyperbolicity by the four-point condition.

    For each 4-set the contribution is half the difference between the two
    larger of the three pairwise-distance sums; the maximum over all 4-sets
    is returned as an exact half-integer.
    """
    if not is_connected(g):
        raise ValueError("hyperbolicity requires a connected graph")
    if g.n < 4:
        return Fraction(0)
    if D is None:
        D = all_pairs(g)
    twice_best = 0
    for u, v, x, y in itertools.combinations(range(g.n), 4):
        s1 = D[u][v] + D[x][y]
        s2 = D[u][x] + D[v][y]
        s3 = D[u][y] + D[v][x]
        a, b, c = sorted((s1, s2, s3))
        twice = c - b
        if twice > twice_best:
            twice_best = twice
    return Fraction(twice_best, 2)
