"""Certified instance generators for the six hardness reductions.

Each generator emits the constructed graph together with per-vertex
provenance labels, the target multipacking size, and the structural claims
the construction is supposed to satisfy (checkable with the class
checkers).  Vertex id layout is fixed per variant: family block first,
then element paths row-major, then variant-specific blocks; the regular
variant lays gadgets out consecutively per input vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .checkers import regularity
from .graph import Graph


@dataclass(frozen=True)
class HittingSetInstance:
    """Universe 0..n-1, a family of nonempty subsets, and a target size k."""

    n: int
    family: tuple[frozenset[int], ...]
    k: int

    @staticmethod
    def make(n: int, family, k: int) -> "HittingSetInstance":
        fam = tuple(frozenset(s) for s in family)
        for s in fam:
            if not s:
                raise ValueError("family contains an empty set")
            if any(not 0 <= e < n for e in s):
                raise ValueError("family element outside the universe")
        if k < 2:
            raise ValueError(f"target k={k} must be at least 2")
        return HittingSetInstance(n, fam, k)

    @property
    def m(self) -> int:
        return len(self.family)


@dataclass(frozen=True)
class ReductionOutput:
    """Constructed graph with provenance labels and claimed properties."""

    graph: Graph
    k: int
    labels: tuple[str, ...]
    claims: tuple[str, ...]
    variant: str

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("provenance labels must be unique")


def _element_paths(n: int, length: int, base: int):
    """Row-major element-path block: element i gets vertices
    base + i*length + (j-1) for j = 1..length.  Returns (ids, path edges)."""
    ids = [[base + i * length + j for j in range(length)] for i in range(n)]
    edges = [(row[j], row[j + 1]) for row in ids for j in range(length - 1)]
    return ids, edges


def reduce_hs_chordal(inst: HittingSetInstance) -> ReductionOutput:
    """Hitting Set -> Multipacking on a chordal graph.

    Family clique; per universe element a path of k-1 vertices whose head
    is adjacent to exactly the family sets NOT containing the element.
    |V| = m + n(k-1); min-HS <= k iff MP >= k (k >= 2).
    """
    n, m, k = inst.n, inst.m, inst.k
    if k < 2:
        raise ValueError("chordal reduction needs k >= 2")
    edges = list(itertools.combinations(range(m), 2))
    paths, path_edges = _element_paths(n, k - 1, m)
    edges += path_edges
    for i in range(n):
        for j, S in enumerate(inst.family):
            if i not in S:
                edges.append((paths[i][0], j))
    labels = [f"S_{j}" for j in range(m)] + [
        f"u_{i}^{j + 1}" for i in range(n) for j in range(k - 1)
    ]
    g = Graph.from_edges(m + n * (k - 1), edges)
    return ReductionOutput(g, k, tuple(labels), ("chordal",), "chordal")


def reduce_hs_half_hyperbolic(inst: HittingSetInstance) -> ReductionOutput:
    """Hitting Set -> Multipacking on a chordal, 1/2-hyperbolic graph.

    Adds a pair vertex y_{i,j} for every i<j adjacent to both path heads,
    and the family together with all pair vertices forms one clique.
    |V| = m + n(k-1) + C(n,2); min-HS <= k iff MP >= k (k >= 3).
    """
    n, m, k = inst.n, inst.m, inst.k
    if k < 3:
        raise ValueError("half-hyperbolic reduction needs k >= 3")
    paths, edges = _element_paths(n, k - 1, m)
    for i in range(n):
        for j, S in enumerate(inst.family):
            if i not in S:
                edges.append((paths[i][0], j))
    y_base = m + n * (k - 1)
    pairs = list(itertools.combinations(range(n), 2))
    for t, (i, j) in enumerate(pairs):
        edges.append((y_base + t, paths[i][0]))
        edges.append((y_base + t, paths[j][0]))
    clique = list(range(m)) + [y_base + t for t in range(len(pairs))]
    edges += list(itertools.combinations(clique, 2))
    labels = (
        [f"S_{j}" for j in range(m)]
        + [f"u_{i}^{j + 1}" for i in range(n) for j in range(k - 1)]
        + [f"y_{{{i},{j}}}" for i, j in pairs]
    )
    g = Graph.from_edges(y_base + len(pairs), edges)
    return ReductionOutput(
        g, k, tuple(labels), ("chordal", "half_hyperbolic"), "hyperbolic"
    )


def reduce_hs_bipartite(inst: HittingSetInstance) -> ReductionOutput:
    """Hitting Set -> Multipacking on a bipartite graph.

    No family clique; instead an apex vertex C adjacent to every family
    vertex.  |V| = m + 1 + n(k-1); min-HS <= k iff MP >= k (k >= 2).
    """
    n, m, k = inst.n, inst.m, inst.k
    if k < 2:
        raise ValueError("bipartite reduction needs k >= 2")
    paths, edges = _element_paths(n, k - 1, m)
    for i in range(n):
        for j, S in enumerate(inst.family):
            if i not in S:
                edges.append((paths[i][0], j))
    apex = m + n * (k - 1)
    edges += [(apex, j) for j in range(m)]
    labels = (
        [f"S_{j}" for j in range(m)]
        + [f"u_{i}^{j + 1}" for i in range(n) for j in range(k - 1)]
        + ["C"]
    )
    g = Graph.from_edges(apex + 1, edges)
    return ReductionOutput(g, k, tuple(labels), ("bipartite",), "bipartite")


def reduce_hs_clawfree(inst: HittingSetInstance) -> ReductionOutput:
    """Hitting Set -> Multipacking on a claw-free graph.

    Element paths are one vertex shorter (k-2 vertices) and each
    non-membership link is subdivided through a vertex w_{j,i}; two w
    vertices are adjacent iff they share the family index or the element
    index.  |V| = m + n(k-2) + sum_j |U \\ S_j|; min-HS <= k iff MP >= k
    (k >= 3 so the element paths are nonempty).
    """
    n, m, k = inst.n, inst.m, inst.k
    if k < 3:
        raise ValueError("claw-free reduction needs k >= 3")
    edges = list(itertools.combinations(range(m), 2))
    paths, path_edges = _element_paths(n, k - 2, m)
    edges += path_edges
    w_base = m + n * (k - 2)
    w_pairs = [
        (j, i)
        for j, S in enumerate(inst.family)
        for i in range(n)
        if i not in S
    ]
    w_id = {pair: w_base + t for t, pair in enumerate(w_pairs)}
    for (j, i), w in w_id.items():
        edges.append((j, w))
        edges.append((w, paths[i][0]))
    for (j1, i1), (j2, i2) in itertools.combinations(w_pairs, 2):
        if j1 == j2 or i1 == i2:
            edges.append((w_id[(j1, i1)], w_id[(j2, i2)]))
    labels = (
        [f"S_{j}" for j in range(m)]
        + [f"u_{i}^{j + 1}" for i in range(n) for j in range(k - 2)]
        + [f"w_{{{j},{i}}}" for j, i in w_pairs]
    )
    g = Graph.from_edges(w_base + len(w_pairs), edges)
    return ReductionOutput(g, k, tuple(labels), ("claw_free",), "clawfree")


def havel_hakimi_regular(n: int, d: int) -> Graph:
    """Simple d-regular graph on n vertices by the Havel-Hakimi reduction.

    Repeatedly satisfies the highest-residual vertex (smallest id on ties)
    by connecting it to the next-highest residual vertices.  Requires
    n*d even and d < n.
    """
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d = {n * d} is odd: no d-regular graph exists")
    residual = [d] * n
    edges: list[tuple[int, int]] = []
    adj: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(range(n), key=lambda u: (residual[u], -u))
        need = residual[v]
        if need == 0:
            break
        targets = sorted(
            (u for u in range(n) if u != v and u not in adj[v]),
            key=lambda u: (-residual[u], u),
        )[:need]
        if len(targets) < need or any(residual[u] == 0 for u in targets):
            raise AssertionError("regular degree sequence must be graphical")
        for u in targets:
            edges.append((v, u))
            adj[v].add(u)
            adj[u].add(v)
            residual[u] -= 1
        residual[v] = 0
    return Graph.from_edges(n, edges)


def _regular_gadget_layout(n: int, k: int, d: int):
    """Id layout for one regular-reduction gadget of size 1 + (k-3)d + d^2."""
    size = 1 + (k - 3) * d + d * d
    layers = {}  # layer i (2..k-2) -> list of ids relative to gadget base
    off = 1
    for i in range(2, k - 1):
        layers[i] = list(range(off, off + d))
        off += d
    t_block = list(range(off, off + d * d))
    return size, layers, t_block


def reduce_tds_regular(g: Graph, k: int) -> ReductionOutput:
    """Total Dominating Set on cubic graphs -> Multipacking on 2d-regular graphs.

    Per input vertex a gadget: apex u_a^1, clique layer S_a^2, complete
    bipartite chains up to S_a^{k-2}, and a (2d-1)-regular block T_a of d^2
    vertices partitioned into d groups each wired to one vertex of the last
    layer.  Apexes are joined along the complement of the input.
    d = n - 4; |V| = n(1 + (k-3)d + d^2).
    """
    n = g.n
    if regularity(g) != 3:
        raise ValueError("input must be 3-regular")
    if n < 6:
        raise ValueError("input must have at least 6 vertices")
    if k < 4:
        raise ValueError("regular reduction needs k >= 4")
    d = n - 4
    size, layers, t_rel = _regular_gadget_layout(n, k, d)
    t_graph = havel_hakimi_regular(d * d, 2 * d - 1)
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    for a in range(n):
        base = a * size
        labels.append(f"H_{a}:u^1")
        for i in range(2, k - 1):
            labels += [f"H_{a}:u^{{{i},{j + 1}}}" for j in range(d)]
        labels += [f"H_{a}:u^{{k-1,{j + 1}}}" for j in range(d * d)]
        s2 = [base + r for r in layers[2]]
        edges += [(base, u) for u in s2]
        edges += list(itertools.combinations(s2, 2))
        for i in range(2, k - 2):
            cur = [base + r for r in layers[i]]
            nxt = [base + r for r in layers[i + 1]]
            edges += [(u, v) for u in cur for v in nxt]
        edges += [(base + t_rel[u], base + t_rel[v]) for u, v in t_graph.edges()]
        last = [base + r for r in layers[k - 2]]
        for j in range(d):
            group = [base + t_rel[j * d + p] for p in range(d)]
            edges += [(last[j], u) for u in group]
    for a in range(n):
        for b in range(a + 1, n):
            if not g.has_edge(a, b):
                edges.append((a * size, b * size))
    out = Graph.from_edges(n * size, edges)
    return ReductionOutput(
        out, k, tuple(labels), (f"regular({2 * d})",), "regular"
    )


def regular_forward_witness(
    g: Graph, tds: list[int], k: int
) -> tuple[int, ...]:
    """Designated multipacking witness from a total dominating set of size <= k.

    The TDS is extended deterministically to exactly k vertices (smallest
    ids first; any superset of a TDS is one), and the witness picks the
    first T_a vertex of each selected gadget.
    """
    n = g.n
    d = n - 4
    size, _, t_rel = _regular_gadget_layout(n, k, d)
    chosen = sorted(tds)
    for v in range(n):
        if len(chosen) >= k:
            break
        if v not in chosen:
            chosen.append(v)
    return tuple(sorted(a * size + t_rel[0] for a in sorted(chosen)))


def reduce_tds_conv(g: Graph, k: int) -> ReductionOutput:
    """Total Dominating Set on planar graphs -> Multipacking on CONV graphs.

    Per input vertex a path of k-1 vertices; path heads are joined along
    the complement of the input.  Planarity of the input is a caller
    promise (recorded as a claim tag, not verified).  |V| = n(k-1).
    """
    n = g.n
    if k < 2:
        raise ValueError("CONV reduction needs k >= 2")
    paths, edges = _element_paths(n, k - 1, 0)
    for a in range(n):
        for b in range(a + 1, n):
            if not g.has_edge(a, b):
                edges.append((paths[a][0], paths[b][0]))
    labels = [f"u_{i}^{j + 1}" for i in range(n) for j in range(k - 1)]
    out = Graph.from_edges(n * (k - 1), edges)
    return ReductionOutput(out, k, tuple(labels), ("conv_promise",), "conv")
