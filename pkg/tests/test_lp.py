import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from rainfrac.constructions import cycle_edges, truncated_projective_plane
from rainfrac.core import Hypergraph, WeightSystem, unit_weights
from rainfrac.lp import (
    check_cover,
    check_matching,
    dual_is_unique,
    matching_number,
    nu_star,
    nu_value,
    tau_star,
)
from rainfrac.simplex import solve
from oracles import brute_nu, random_hypergraph, random_weights


def graph(V, edges):
    return Hypergraph(V, 2, edges)


C5 = graph(5, cycle_edges(range(5)))
TRI = graph(3, [(0, 1), (1, 2), (0, 2)])
EDGE = graph(2, [(0, 1)])


def test_c5_value():
    assert nu_star(C5, C5.all_edges()).value == Fraction(5, 2)


def test_single_edge():
    assert nu_star(EDGE, [0]).value == 1
    assert tau_star(EDGE, [0]).value == 1


def test_single_edge_weighted():
    w = WeightSystem((2,), (Fraction(1, 3), 1))
    assert nu_star(EDGE, [0], w).value == Fraction(2, 3)


def test_empty_edge_set():
    res = nu_star(C5, [])
    assert res.value == 0 and res.primal.size == 0


def test_truncated_fano_three_lines():
    h, lines, q = truncated_projective_plane(2)
    for drop in lines:
        rest = [e for e in lines if e != drop]
        assert nu_star(h, rest).value == Fraction(3, 2)
        assert brute_nu(h, rest, unit_weights(h)) == Fraction(3, 2)


def test_truncated_fano_cover():
    h, lines, q = truncated_projective_plane(2)
    assert tau_star(h, lines).value == 2


def test_triangle_cover_is_half_everywhere():
    res = tau_star(TRI, TRI.all_edges())
    assert res.value == Fraction(3, 2)
    assert all(res.dual.values[v] == Fraction(1, 2) for v in range(3))


def _complementary(h, w, res, edges):
    f, g = res.primal.values, res.dual.values
    for e in edges:
        if f.get(e, 0) > 0:
            assert sum(g[v] for v in h.edges[e]) == w.a[e]
    for v in range(h.vertex_count):
        if g[v] > 0:
            assert sum(x for e, x in f.items() if v in h.edges[e]) == w.b[v]


def test_random_certificates_and_brute_force():
    rng = random.Random(11)
    for _ in range(80):
        h = random_hypergraph(rng, rng.choice([2, 3]), 7, 6)
        w = random_weights(rng, h)
        edges = h.all_edges()
        a, b = nu_star(h, edges, w), tau_star(h, edges, w)
        assert a.value == b.value == brute_nu(h, edges, w)
        assert check_matching(h, w, a.primal.values, edges) is None
        assert check_cover(h, w, b.dual.values, edges) is None
        _complementary(h, w, a, edges)
        _complementary(h, w, b, edges)


def test_dual_uniqueness_examples():
    ok, covers = dual_is_unique(EDGE, [0])
    assert not ok
    g1, g2 = covers
    assert g1.values != g2.values and g1.size == g2.size == 1
    assert dual_is_unique(EDGE, [0], WeightSystem((1,), (1, 2))) == (True, None)


def test_dual_uniqueness_after_perturbation():
    h, lines, q = truncated_projective_plane(2)
    assert not dual_is_unique(h, lines)[0]
    b = tuple(1 + Fraction(1, 2 ** (v + 2)) for v in range(h.vertex_count))
    assert dual_is_unique(h, lines, WeightSystem((1,) * len(lines), b))[0]


def test_matching_numbers():
    c4 = graph(4, cycle_edges(range(4)))
    assert matching_number(c4, c4.all_edges()) == 2
    assert matching_number(C5, C5.all_edges()) == 2


def test_simplex_statuses():
    assert solve([1], [([1], ">=", 1)]).status == "unbounded"
    assert solve([1], [([1], "<=", 1), ([1], ">=", 2)]).status == "infeasible"
    sol = solve([3, 2], [([1, 1], "<=", 4), ([1, 3], "<=", 6)])
    assert sol.value == 12 and sol.duals == (3, 0)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(0, 2**12 - 1), st.integers(0, 2**12 - 1))
def test_monotone(rnd, m1, m2):
    h = random_hypergraph(rnd, rnd.choice([2, 3]), 7, 12)
    k = len(h.edges)
    small = [e for e in range(k) if (m1 & m2) >> e & 1]
    big = [e for e in range(k) if m1 >> e & 1]
    assert nu_value(h, small) <= nu_value(h, big)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False), st.fractions(min_value=Fraction(1, 7), max_value=7))
def test_scaling_in_b(rnd, t):
    h = random_hypergraph(rnd, rnd.choice([2, 3]), 7, 8)
    w = random_weights(rnd, h)
    scaled = w.replace(b=tuple(t * x for x in w.b))
    assert nu_value(h, h.all_edges(), scaled) == t * nu_value(h, h.all_edges(), w)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_half_integral_on_graphs(rnd):
    h = random_hypergraph(rnd, 2, 9, 14)
    assert (2 * nu_value(h, h.all_edges())).denominator == 1
