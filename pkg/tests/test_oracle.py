import random

import pytest

from conftest import complete, cycle, path, star
from multipacking.graph import Graph, all_pairs
from multipacking.oracle import (
    Broadcast,
    brute_force_gamma_b,
    brute_force_min_hs,
    brute_force_min_tds,
    brute_force_mp,
    duality_report,
    enumerate_multipackings,
    is_dominating_broadcast,
    is_multipacking,
    is_total_dominating,
    pick_best,
)
from multipacking.randgen import random_connected_graph


def test_is_multipacking_examples():
    p4 = path(4)
    D = all_pairs(p4)
    assert is_multipacking(p4, D, [0, 3])
    assert not is_multipacking(p4, D, [0, 1])  # two members in N_1[0]
    assert not is_multipacking(p4, D, [0, 2])  # two members in N_1[1]
    assert is_multipacking(p4, D, [])
    assert is_multipacking(p4, D, [2])
    c4 = cycle(4)
    assert not is_multipacking(c4, all_pairs(c4), [0, 2])
    with pytest.raises(ValueError):
        is_multipacking(p4, D, [7])


def test_is_multipacking_duplicates_collapse():
    p4 = path(4)
    D = all_pairs(p4)
    assert is_multipacking(p4, D, [3, 0, 3])


def test_enumerate_multipackings_p3():
    p3 = path(3)
    assert enumerate_multipackings(p3) == [(), (0,), (1,), (2,)]


def test_enumerate_multipackings_downward_closed_and_lex():
    g = random_connected_graph(8, random.Random(2))
    fam = enumerate_multipackings(g)
    assert fam == sorted(fam)
    members = set(fam)
    for m in fam:
        for i in range(len(m)):
            assert m[:i] + m[i + 1 :] in members
    # brute-force cross-check against the definition
    D = all_pairs(g)
    import itertools

    expected = sum(
        1
        for size in range(g.n + 1)
        for s in itertools.combinations(range(g.n), size)
        if is_multipacking(g, D, s)
    )
    assert len(fam) == expected


def test_pick_best_tie_break():
    assert pick_best([(2,), (0, 3), (1, 3)]) == (2, (0, 3))
    assert pick_best([()]) == (0, ())
    with pytest.raises(ValueError):
        pick_best([])


def test_brute_force_mp_examples():
    assert brute_force_mp(path(4)) == (2, (0, 3))
    assert brute_force_mp(cycle(4)) == (1, (0,))
    assert brute_force_mp(Graph.from_edges(1, [])) == (1, (0,))
    assert brute_force_mp(complete(5))[0] == 1
    with pytest.raises(ValueError):
        brute_force_mp(Graph.from_edges(30, []), cap=22)


def test_total_domination():
    p4 = path(4)
    assert is_total_dominating(p4, [1, 2])
    assert not is_total_dominating(p4, [1, 3])  # 3 has no neighbor in S
    assert brute_force_min_tds(p4) == 2
    assert brute_force_min_tds(cycle(4)) == 2
    assert brute_force_min_tds(star(4)) == 2
    with pytest.raises(ValueError):
        brute_force_min_tds(Graph.from_edges(2, []))


def test_min_hitting_set():
    assert brute_force_min_hs(3, [{0, 1}, {1, 2}]) == 1
    assert brute_force_min_hs(3, [{0}, {1}, {2}]) == 3
    assert brute_force_min_hs(4, []) == 0
    with pytest.raises(ValueError):
        brute_force_min_hs(3, [set()])
    with pytest.raises(ValueError):
        brute_force_min_hs(2, [{5}])


def test_broadcast_basics():
    p4 = path(4)
    D = all_pairs(p4)
    assert Broadcast((0, 2, 0, 0)).cost == 2
    assert is_dominating_broadcast(p4, D, Broadcast((0, 2, 0, 0)))
    assert not is_dominating_broadcast(p4, D, Broadcast((1, 0, 0, 0)))
    assert not is_dominating_broadcast(p4, D, Broadcast((0, 0, 0, 0)))


def test_brute_force_gamma_b_examples():
    cost, f = brute_force_gamma_b(path(4))
    assert cost == 2 and f.cost == 2
    assert brute_force_gamma_b(Graph.from_edges(1, []))[0] == 1
    assert brute_force_gamma_b(cycle(4))[0] == 2
    assert brute_force_gamma_b(complete(4))[0] == 1
    assert brute_force_gamma_b(cycle(6))[0] == 2
    assert brute_force_gamma_b(path(7))[0] == 3
    with pytest.raises(ValueError):
        brute_force_gamma_b(Graph.from_edges(2, []))


def test_gamma_b_witness_verifies():
    rng = random.Random(11)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 8), rng)
        D = all_pairs(g)
        cost, f = brute_force_gamma_b(g, D)
        assert f.cost == cost
        assert is_dominating_broadcast(g, D, f)


def test_duality_report_p4():
    rep = duality_report(path(4))
    assert rep.mp == 2 and rep.gamma_b == 2
    assert rep.mp_witness == (0, 3)
    assert rep.bound_2mp3_ok
    assert rep.bound_chordal_ok  # P4 is chordal, 2 <= ceil(3)
    rep = duality_report(cycle(5))
    assert rep.bound_chordal_ok is None  # C5 is not chordal


def test_duality_bounds_random():
    rng = random.Random(17)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 8), rng)
        rep = duality_report(g)
        assert rep.mp <= rep.gamma_b <= 2 * rep.mp + 3
