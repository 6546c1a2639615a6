"""Ground-truth brute-force oracles at desk scale.

Everything here is exhaustive and independent of the candidate-family
solvers, so it can arbitrate their answers.  Witness tie-break throughout:
maximum size first, then lexicographically smallest member tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs,
    is_connected,
    radius_diameter,
)

DEFAULT_MP_CAP = 22
DEFAULT_GAMMA_CAP = 12


def is_multipacking(g: Graph, D: DistanceMatrix, members: Sequence[int]) -> bool:
    """True iff |N_r[v] ∩ M| <= r for every vertex v and every r >= 1.

    Radii r >= |M| are vacuous (the intersection can never exceed |M|),
    so only r = 1..|M|-1 are checked.
    """
    M = sorted(set(members))
    for v in M:
        if not 0 <= v < g.n:
            raise ValueError(f"member {v} out of range")
    if len(M) <= 1:
        return True
    rmax = len(M) - 1
    for v in range(g.n):
        row = D[v]
        ds = sorted(row[u] for u in M)
        # ds[r] <= r means at least r+1 members sit inside N_r[v]
        for r in range(1, rmax + 1):
            if ds[r] <= r:
                return False
    return True


def enumerate_multipackings(
    g: Graph, D: Optional[DistanceMatrix] = None, cap: int = DEFAULT_MP_CAP
) -> list[tuple[int, ...]]:
    """All multipackings of g, in lexicographic order of sorted member tuples.

    Exploits downward closure: only extensions of multipackings are explored,
    so the running time is polynomial in the output size.
    """
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds cap {cap}")
    if D is None:
        D = all_pairs(g)
    out: list[tuple[int, ...]] = [()]

    def extend(cur: tuple[int, ...], start: int) -> None:
        for v in range(start, g.n):
            cand = cur + (v,)
            if is_multipacking(g, D, cand):
                out.append(cand)
                extend(cand, v + 1)

    extend((), 0)
    return out


def pick_best(sets: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Maximum-size set, ties broken by lexicographically smallest tuple."""
    best: Optional[tuple[int, ...]] = None
    for s in sets:
        t = tuple(sorted(s))
        if best is None or len(t) > len(best) or (len(t) == len(best) and t < best):
            best = t
    if best is None:
        raise ValueError("empty family")
    return len(best), best


def brute_force_mp(
    g: Graph, D: Optional[DistanceMatrix] = None, cap: int = DEFAULT_MP_CAP
) -> tuple[int, tuple[int, ...]]:
    """Exact MP(G) with the lexicographically smallest maximum witness."""
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds cap {cap}")
    if D is None:
        D = all_pairs(g)
    best: tuple[int, ...] = ()

    def extend(cur: tuple[int, ...], start: int) -> None:
        nonlocal best
        for v in range(start, g.n):
            cand = cur + (v,)
            if is_multipacking(g, D, cand):
                if len(cand) > len(best):
                    best = cand
                extend(cand, v + 1)

    extend((), 0)
    return len(best), best


def is_total_dominating(g: Graph, S: Sequence[int]) -> bool:
    """True iff every vertex of g has a neighbor in S."""
    members = set(S)
    return all(any(u in members for u in g.adj[v]) for v in range(g.n))


def brute_force_min_tds(g: Graph, cap: int = DEFAULT_MP_CAP) -> int:
    """Exact minimum total dominating set size; errors on isolated vertices."""
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds cap {cap}")
    if any(not g.adj[v] for v in range(g.n)):
        raise ValueError("no total dominating set exists: isolated vertex")
    for size in range(1, g.n + 1):
        for S in itertools.combinations(range(g.n), size):
            if is_total_dominating(g, S):
                return size
    raise AssertionError("unreachable: V itself is always total dominating")


def brute_force_min_hs(
    universe_size: int, family: Sequence[Sequence[int]], cap: int = DEFAULT_MP_CAP
) -> int:
    """Exact minimum hitting set size over subsets of 0..universe_size-1."""
    if universe_size > cap:
        raise ValueError(f"universe size {universe_size} exceeds cap {cap}")
    sets = [frozenset(s) for s in family]
    if any(not s for s in sets):
        raise ValueError("unhittable: family contains an empty set")
    for s in sets:
        if any(not 0 <= e < universe_size for e in s):
            raise ValueError("family element out of universe range")
    for size in range(0, universe_size + 1):
        for H in itertools.combinations(range(universe_size), size):
            hs = set(H)
            if all(s & hs for s in sets):
                return size
    raise AssertionError("unreachable: the full universe hits everything")


@dataclass(frozen=True)
class Broadcast:
    """Per-vertex powers f(v) >= 0; cost is the total power."""

    powers: tuple[int, ...]

    @property
    def cost(self) -> int:
        return sum(self.powers)


def is_dominating_broadcast(g: Graph, D: DistanceMatrix, f: Broadcast) -> bool:
    supports = [v for v, p in enumerate(f.powers) if p >= 1]
    if not supports:
        return g.n == 0
    return all(
        any(D[v][u] <= f.powers[v] for v in supports) for u in range(g.n)
    )


def brute_force_gamma_b(
    g: Graph, D: Optional[DistanceMatrix] = None, cap: int = DEFAULT_GAMMA_CAP
) -> tuple[int, Broadcast]:
    """Exact broadcast domination number by ascending-cost exhaustive search.

    An optimal broadcast exists with all powers <= rad(G), so the search
    terminates at cost rad(G) (cost 1 for the single-vertex graph).
    """
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds cap {cap}")
    if not is_connected(g) or g.n == 0:
        raise ValueError("broadcast domination requires a connected nonempty graph")
    if D is None:
        D = all_pairs(g)
    rad, _ = radius_diameter(g, D)
    pmax = max(rad, 1)
    powers = [0] * g.n

    def rec(v: int, rem: int) -> Optional[Broadcast]:
        if rem == 0:
            f = Broadcast(tuple(powers))
            return f if is_dominating_broadcast(g, D, f) else None
        if v == g.n:
            return None
        for p in range(0, min(pmax, rem) + 1):
            powers[v] = p
            found = rec(v + 1, rem - p)
            if found is not None:
                return found
            powers[v] = 0
        return None

    for cost in range(1, pmax + 1):
        found = rec(0, cost)
        if found is not None:
            return cost, found
    raise AssertionError("unreachable: a central vertex at full power dominates")


@dataclass(frozen=True)
class DualityReport:
    """MP and broadcast-domination values with witnesses and bound flags."""

    mp: int
    gamma_b: int
    mp_witness: tuple[int, ...]
    broadcast_witness: Broadcast
    bound_2mp3_ok: bool
    bound_chordal_ok: Optional[bool]  # None when the graph is not chordal


def duality_report(
    g: Graph,
    mp_cap: int = DEFAULT_MP_CAP,
    gamma_cap: int = DEFAULT_GAMMA_CAP,
) -> DualityReport:
    """Exact MP vs gamma_b comparison with both duality bounds checked."""
    from .checkers import is_chordal  # local import: checkers has no oracle dep

    D = all_pairs(g)
    mp, witness = brute_force_mp(g, D, cap=mp_cap)
    gamma, f = brute_force_gamma_b(g, D, cap=gamma_cap)
    chordal, _ = is_chordal(g)
    chordal_ok = (gamma <= -(-3 * mp // 2)) if chordal else None
    return DualityReport(
        mp=mp,
        gamma_b=gamma,
        mp_witness=witness,
        broadcast_witness=f,
        bound_2mp3_ok=gamma <= 2 * mp + 3,
        bound_chordal_ok=chordal_ok,
    )
