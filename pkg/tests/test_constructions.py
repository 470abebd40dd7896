from fractions import Fraction
from itertools import combinations

import pytest

from rainfrac.constructions import (
    bgs_example,
    build,
    copies,
    drisko_example,
    odd_cycle_family,
    projective_plane,
    truncated_plane_family,
    truncated_projective_plane,
    two_odd_cycles_family,
)
from rainfrac.core import InstanceError
from rainfrac.lp import matching_number, nu_value


def test_cycle_matchings_two():
    fam = drisko_example(2)
    h = fam.hypergraph
    assert [[h.edges[e] for e in c] for c in fam.colors] == [[(0, 1), (2, 3)], [(1, 2), (0, 3)]]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cycle_matching_colors_are_perfect(n):
    fam = drisko_example(n)
    assert len(fam) == 2 * n - 2
    for c in fam.colors:
        assert matching_number(fam.hypergraph, c) == n
        assert nu_value(fam.hypergraph, c) == n


def test_cycle_matchings_reject_small_n():
    with pytest.raises(InstanceError):
        drisko_example(1)


def test_chord_matching_family_four():
    fam = bgs_example(4)
    h = fam.hypergraph
    assert len(fam) == 7
    assert sorted(h.edges[e] for e in fam.colors[-1]) == [(0, 2), (1, 3), (4, 6), (5, 7)]
    assert matching_number(h, fam.colors[-1]) == 4
    with pytest.raises(InstanceError):
        bgs_example(3)


def test_odd_cycle_two():
    fam, n = odd_cycle_family(2)
    assert n == Fraction(5, 2) and len(fam) == 4
    assert all(nu_value(fam.hypergraph, c) == n for c in fam.colors)
    assert copies(fam.hypergraph, fam.hypergraph.all_edges(), 4) == fam


def test_two_odd_cycles_three():
    fam = two_odd_cycles_family(3)
    assert len(fam) == 5 and fam.hypergraph.vertex_count == 6
    assert all(nu_value(fam.hypergraph, c) == 3 for c in fam.colors)


def test_copies():
    fam, _ = odd_cycle_family(1)
    assert len(copies(fam.hypergraph, (0, 1, 2), 1)) == 1
    with pytest.raises(InstanceError):
        copies(fam.hypergraph, (0, 1, 2), 0)


def test_truncated_fano():
    h, lines, q = truncated_projective_plane(2)
    assert h.vertex_count == 6 and len(lines) == 4 and h.r == 3
    assert sorted(h.partition) == [0, 0, 1, 1, 2, 2]
    assert nu_value(h, lines) == 2
    for three in combinations(lines, 3):
        assert nu_value(h, three) == Fraction(3, 2)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_truncated_plane_incidences(q):
    h, lines, _ = truncated_projective_plane(q)
    assert h.vertex_count == q * q + q and len(lines) == q * q
    for a, b in combinations(h.edges, 2):
        assert len(set(a) & set(b)) == 1
    for v in range(h.vertex_count):
        assert sum(v in e for e in h.edges) == q


def test_truncated_plane_three():
    h, lines, q = truncated_projective_plane(3)
    assert nu_value(h, lines) == 3 and all(len(e) == 4 for e in h.edges)


def test_projective_plane_counts():
    pts, lines = projective_plane(3)
    assert len(pts) == len(lines) == 13
    with pytest.raises(InstanceError):
        projective_plane(4)


def test_build_dispatch():
    assert build("truncated_plane", 4, q=2) == truncated_plane_family(2, 4)
    with pytest.raises(InstanceError):
        build("nope")
