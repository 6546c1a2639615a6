import pytest

from multipacking.pathcount import (
    count_all_path,
    count_maximal_path,
    enumerate_maximal_multipackings,
    path_graph,
)
from multipacking.oracle import enumerate_multipackings


def test_count_all_first_values():
    assert count_all_path(6) == [2, 3, 4, 6, 9, 13]
    assert count_all_path(1) == [2]
    with pytest.raises(ValueError):
        count_all_path(0)


def test_count_maximal_first_values():
    assert count_maximal_path(6) == [1, 2, 3, 3, 4, 6]
    with pytest.raises(ValueError):
        count_maximal_path(0)


def test_counts_match_enumeration():
    all_counts = count_all_path(12)
    max_counts = count_maximal_path(12)
    for n in range(1, 13):
        p = path_graph(n)
        assert len(enumerate_multipackings(p)) == all_counts[n - 1]
        assert len(enumerate_maximal_multipackings(p)) == max_counts[n - 1]


def test_maximal_enumeration_p4():
    assert enumerate_maximal_multipackings(path_graph(4)) == [(0, 3), (1,), (2,)]


def test_maximal_sets_really_are_maximal():
    p = path_graph(9)
    fam = set(enumerate_multipackings(p))
    for m in enumerate_maximal_multipackings(p):
        assert m in fam
        assert not any(
            tuple(sorted(set(m) | {v})) in fam
            for v in range(p.n)
            if v not in m
        )


def test_growth_constants():
    all_counts = count_all_path(40)
    max_counts = count_maximal_path(40)
    assert abs(all_counts[39] / all_counts[38] - 1.46557) < 0.01
    assert abs(max_counts[39] / max_counts[38] - 1.3248) < 0.01


def test_big_n_exact_integers():
    c = count_all_path(120)
    assert c[119] == c[118] + c[116]  # no overflow: exact bignums
