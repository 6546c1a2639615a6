import itertools
import random
from fractions import Fraction

import pytest

from conftest import complete, cycle, path
from multipacking.checkers import (
    hyperbolicity,
    is_bipartite,
    is_chordal,
    is_clawfree,
    regularity,
)
from multipacking.graph import Graph, all_pairs, induced_subgraph
from multipacking.oracle import (
    brute_force_min_hs,
    brute_force_min_tds,
    brute_force_mp,
    is_multipacking,
    is_total_dominating,
)
from multipacking.randgen import random_hitting_set_instance
from multipacking.reductions import (
    HittingSetInstance,
    ReductionOutput,
    havel_hakimi_regular,
    reduce_hs_bipartite,
    reduce_hs_chordal,
    reduce_hs_clawfree,
    reduce_hs_half_hyperbolic,
    reduce_tds_conv,
    reduce_tds_regular,
    regular_forward_witness,
)

EXAMPLE = HittingSetInstance.make(3, [{0, 1}, {1, 2}, {0, 2}], 2)


def k33() -> Graph:
    return Graph.from_edges(6, [(i, j) for i in (0, 1, 2) for j in (3, 4, 5)])


def prism() -> Graph:
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


def test_instance_validation():
    with pytest.raises(ValueError):
        HittingSetInstance.make(3, [set()], 2)
    with pytest.raises(ValueError):
        HittingSetInstance.make(3, [{5}], 2)
    with pytest.raises(ValueError):
        HittingSetInstance.make(3, [{0}], 1)
    assert EXAMPLE.m == 3


def test_output_validation():
    with pytest.raises(ValueError):
        ReductionOutput(path(2), 2, ("a",), (), "x")
    with pytest.raises(ValueError):
        ReductionOutput(path(2), 2, ("a", "a"), (), "x")


def test_chordal_variant_layout():
    out = reduce_hs_chordal(EXAMPLE)
    n, m, k = EXAMPLE.n, EXAMPLE.m, EXAMPLE.k
    assert out.graph.n == m + n * (k - 1) == 6
    assert out.labels[:3] == ("S_0", "S_1", "S_2")
    assert out.labels[3] == "u_0^1"
    assert out.claims == ("chordal",)
    # family block is a clique
    assert all(out.graph.has_edge(a, b) for a, b in itertools.combinations(range(m), 2))
    # head of element 0's path joins exactly the sets not containing 0
    assert out.graph.has_edge(3, 1) and not out.graph.has_edge(3, 0)
    assert is_chordal(out.graph)[0]


def test_hyperbolic_variant_layout():
    inst = HittingSetInstance.make(3, [{0, 1}, {1, 2}], 3)
    out = reduce_hs_half_hyperbolic(inst)
    n, m, k = inst.n, inst.m, inst.k
    assert out.graph.n == m + n * (k - 1) + n * (n - 1) // 2
    assert out.labels[-1] == "y_{1,2}"
    assert is_chordal(out.graph)[0]
    assert hyperbolicity(out.graph) <= Fraction(1, 2)
    with pytest.raises(ValueError):
        reduce_hs_half_hyperbolic(EXAMPLE)  # k = 2 too small


def test_bipartite_variant_layout():
    out = reduce_hs_bipartite(EXAMPLE)
    n, m, k = EXAMPLE.n, EXAMPLE.m, EXAMPLE.k
    assert out.graph.n == m + 1 + n * (k - 1)
    assert out.labels[-1] == "C"
    apex = out.graph.n - 1
    assert set(out.graph.adj[apex]) == set(range(m))
    assert is_bipartite(out.graph)[0]


def test_clawfree_variant_layout():
    inst = HittingSetInstance.make(3, [{0, 1}, {1, 2}], 3)
    out = reduce_hs_clawfree(inst)
    n, m, k = inst.n, inst.m, inst.k
    nonmember = sum(n - len(S) for S in inst.family)
    assert out.graph.n == m + n * (k - 2) + nonmember
    assert is_clawfree(out.graph)[0]
    with pytest.raises(ValueError):
        reduce_hs_clawfree(EXAMPLE)


def roundtrip_ok(builder, inst) -> bool:
    out = builder(inst)
    hs = brute_force_min_hs(inst.n, inst.family)
    mp, _ = brute_force_mp(out.graph)
    return (hs <= inst.k) == (mp >= inst.k)


def sweep(builder, k_min, count=40, seed=0):
    rng = random.Random(seed)
    done = 0
    while done < count:
        inst = random_hitting_set_instance(4, 4, 4, rng, k_min=k_min)
        if inst.k > inst.n:  # equivalence needs enough universe elements
            continue
        assert roundtrip_ok(builder, inst), (inst,)
        done += 1


def test_roundtrip_chordal():
    sweep(reduce_hs_chordal, 2, seed=101)


def test_roundtrip_hyperbolic():
    sweep(reduce_hs_half_hyperbolic, 3, seed=102)


def test_roundtrip_bipartite_k3():
    sweep(reduce_hs_bipartite, 3, seed=103)


def test_roundtrip_clawfree():
    sweep(reduce_hs_clawfree, 3, seed=104)


def test_bipartite_k2_equivalence_gap():
    """Known defect of the bipartite construction at k = 2: the apex puts
    all path heads at pairwise distance <= 3, so {S_j, u_i^1} can be a
    multipacking even when no 2-element hitting set exists."""
    inst = HittingSetInstance.make(3, [{0, 1, 2}, {1}, {2}, {0}], 2)
    assert brute_force_min_hs(inst.n, inst.family) == 3
    out = reduce_hs_bipartite(inst)
    mp, _ = brute_force_mp(out.graph)
    assert mp >= 2  # equivalence would require mp < 2


def test_havel_hakimi():
    for n in range(3, 12):
        for d in range(1, n):
            if (n * d) % 2:
                with pytest.raises(ValueError):
                    havel_hakimi_regular(n, d)
            else:
                assert regularity(havel_hakimi_regular(n, d)) == d
    with pytest.raises(ValueError):
        havel_hakimi_regular(4, 4)


def test_regular_variant_k33():
    g = k33()
    k = 4
    d = g.n - 4
    out = reduce_tds_regular(g, k)
    size = 1 + (k - 3) * d + d * d
    assert out.graph.n == g.n * size == 42
    assert regularity(out.graph) == 2 * d
    assert out.claims == (f"regular({2 * d})",)
    # apex subgraph is the complement of the input
    apexes = [a * size for a in range(g.n)]
    sub, _ = induced_subgraph(out.graph, apexes)
    comp = g.complement()
    assert sub.adj == comp.adj


def test_regular_variant_forward_witness():
    for g in (k33(), prism()):
        k = 4
        tds = None
        for S in itertools.combinations(range(g.n), brute_force_min_tds(g)):
            if is_total_dominating(g, S):
                tds = list(S)
                break
        assert tds is not None and len(tds) <= k
        out = reduce_tds_regular(g, k)
        witness = regular_forward_witness(g, tds, k)
        assert len(witness) == k
        assert is_multipacking(out.graph, all_pairs(out.graph), witness)


def test_regular_variant_validation():
    with pytest.raises(ValueError):
        reduce_tds_regular(cycle(6), 4)  # 2-regular, not cubic
    with pytest.raises(ValueError):
        reduce_tds_regular(complete(4), 4)  # cubic but too small
    with pytest.raises(ValueError):
        reduce_tds_regular(k33(), 3)


def test_conv_variant_layout_and_iff():
    for g in (path(3), cycle(4), path(5)):
        for k in (2, 3):
            out = reduce_tds_conv(g, k)
            assert out.graph.n == g.n * (k - 1)
            assert out.claims == ("conv_promise",)
            heads = [a * (k - 1) for a in range(g.n)]
            for a in range(g.n):
                for b in range(a + 1, g.n):
                    assert out.graph.has_edge(heads[a], heads[b]) == (
                        not g.has_edge(a, b)
                    )
            tds = brute_force_min_tds(g)
            mp, _ = brute_force_mp(out.graph)
            assert (tds <= k) == (mp >= k)
    with pytest.raises(ValueError):
        reduce_tds_conv(path(3), 1)
