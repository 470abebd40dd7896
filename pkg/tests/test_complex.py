import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from rainfrac.complex import (
    CollapseSequence,
    CollapseStep,
    SimplicialComplex,
    blow_up_complex,
    blow_up_sequence,
    boundary_complex,
    brute_force_collapsible,
    build_nu_complex,
    find_collapse,
    format_complex,
    format_sequence,
    full_simplex,
    generate_collapse,
    parse_complex,
    parse_sequence,
    replay,
    verify_collapse,
)
from rainfrac.constructions import cycle_edges
from rainfrac.core import Hypergraph, InstanceError, ScaleError, WeightSystem, unit_weights
from rainfrac.lp import nu_value
from oracles import random_hypergraph

TRI = Hypergraph(3, 2, [(0, 1), (1, 2), (0, 2)])
C5 = Hypergraph(5, 2, cycle_edges(range(5)))
EDGE = Hypergraph(2, 2, [(0, 1)])
PATH = Hypergraph(3, 2, [(0, 1), (1, 2)])
HALF3 = Fraction(3, 2)


def nu_complex(h, n, w=None):
    return build_nu_complex(h, h.all_edges(), w or unit_weights(h), n)


def test_triangle_complex_is_boundary():
    assert nu_complex(TRI, HALF3) == boundary_complex(range(3))


def test_single_edge_complex_is_full():
    X = nu_complex(EDGE, HALF3)
    assert X == full_simplex([0]) and frozenset() in X


def test_c5_complex():
    X = nu_complex(C5, Fraction(5, 2))
    assert sorted(map(sorted, X.facets)) == sorted(map(list, combinations(range(5), 4)))


def test_scale_cap():
    h = Hypergraph(17, 2, cycle_edges(range(16)))
    with pytest.raises(ScaleError):
        nu_complex(h, 3)


def test_complex_is_downward_closed_and_exact():
    rng = random.Random(8)
    for _ in range(15):
        h = random_hypergraph(rng, rng.choice([2, 3]), 7, 7)
        n = Fraction(rng.randint(3, 10), 4)
        X = nu_complex(h, n)
        for k in range(len(h.edges) + 1):
            for s in combinations(h.all_edges(), k):
                assert (s in X) == (nu_value(h, s) < n)


def test_triangle_collapse():
    seq, trace = generate_collapse(TRI, TRI.all_edges(), unit_weights(TRI), HALF3)
    assert seq.d == 2
    assert verify_collapse(nu_complex(TRI, HALF3), seq)
    first = trace.records[0]
    X = nu_complex(TRI, HALF3)
    # the first removed face lies in exactly one facet
    assert len(X.facets_containing(first.ebar)) == 1
    assert 1 < first.nbar < HALF3


def test_single_edge_collapse():
    seq, _ = generate_collapse(EDGE, [0], unit_weights(EDGE), HALF3)
    assert seq == CollapseSequence(2, (CollapseStep({0}, {0}),))


def test_path_collapse():
    seq, _ = generate_collapse(PATH, [0, 1], unit_weights(PATH), HALF3)
    X = nu_complex(PATH, HALF3)
    assert X == full_simplex([0, 1]) and seq.d == 2 and verify_collapse(X, seq)


def test_trivial_threshold_gives_empty_sequence():
    seq, trace = generate_collapse(TRI, TRI.all_edges(), unit_weights(TRI), 1)
    assert len(seq) == 0 and seq.d == 1


def test_weighted_collapse():
    w = WeightSystem((2, 1, 1), (1, Fraction(1, 2), 1))
    n = Fraction(5, 2)
    seq, _ = generate_collapse(TRI, TRI.all_edges(), w, n)
    assert seq.d == math.ceil(2 * n / Fraction(1, 2)) - 1
    assert verify_collapse(build_nu_complex(TRI, TRI.all_edges(), w, n), seq)


def test_c5_collapse_trace():
    n = Fraction(5, 2)
    seq, trace = generate_collapse(C5, C5.all_edges(), unit_weights(C5), n)
    X = nu_complex(C5, n)
    assert seq.d == 4 and verify_collapse(X, seq)
    nbars = [r.nbar for r in trace.records]
    assert all(x > y for x, y in zip(nbars, nbars[1:]))
    assert all(len(r.ebar) <= seq.d for r in trace.records)
    states = replay(X, seq)
    for i, rec in enumerate(trace.records[:-1]):
        Y = build_nu_complex(C5, C5.all_edges(), WeightSystem(rec.a_next, rec.b), rec.nbar)
        assert Y == states[i + 1]


def test_partite_mode():
    h = Hypergraph(4, 2, cycle_edges(range(4)), partition=(0, 1, 0, 1))
    seq, trace = generate_collapse(h, h.all_edges(), unit_weights(h), 2, "partite")
    assert seq.d <= 2 * (2 - 1)
    assert verify_collapse(nu_complex(h, 2), seq)
    bounds = [r.bound for r in trace.records]
    assert all(x >= y for x, y in zip(bounds, bounds[1:]))


def test_partite_mode_needs_partition():
    with pytest.raises(InstanceError):
        generate_collapse(TRI, TRI.all_edges(), unit_weights(TRI), HALF3, "partite")


def test_verify_rejects_one_collapse_of_boundary():
    X = boundary_complex(range(3))
    seq = CollapseSequence(1, (CollapseStep({0}, {0, 1}),))
    v = verify_collapse(X, seq)
    assert not v and v.index == 0


def test_verify_reports_missing_face():
    X = full_simplex([0, 1])
    seq = CollapseSequence(2, (CollapseStep({0}, {0, 1}), CollapseStep({0}, {1})))
    v = verify_collapse(X, seq)
    assert not v and v.index == 1 and v.reason == "not a face of the current complex"


def test_verify_reports_unfinished():
    X = full_simplex([0, 1])
    seq = CollapseSequence(2, (CollapseStep({0}, {0, 1}),))
    v = verify_collapse(X, seq)
    assert not v and v.index == 1


def test_brute_force_oracle():
    assert brute_force_collapsible(full_simplex(range(3)), 1)
    B = boundary_complex(range(3))
    assert not brute_force_collapsible(B, 1)
    assert brute_force_collapsible(B, 2)
    assert brute_force_collapsible(SimplicialComplex([], [set()]), 1)
    seq = find_collapse(B, 2)
    assert verify_collapse(B, seq)


def test_blow_up_examples():
    X = full_simplex(["u"])
    assert blow_up_complex(X, {"u": 2}) == full_simplex([("u", 1), ("u", 2)])
    B = boundary_complex(range(3))
    same = blow_up_complex(B, {})
    assert same == B.relabel({x: (x, 1) for x in range(3)})


def test_blow_up_of_boundary_keeps_collapsibility():
    B = boundary_complex(range(3))
    big = blow_up_complex(B, {0: 2})
    assert len(big.facets) == len(B.facets)
    assert brute_force_collapsible(big, 2)
    assert not brute_force_collapsible(big, 1)


def test_blow_up_single_edge_sequence():
    seq = CollapseSequence(2, (CollapseStep({"e"}, {"e"}),))
    big = blow_up_sequence(seq, {"e": 2})
    assert big.steps == (
        CollapseStep({("e", 1)}, {("e", 1), ("e", 2)}),
        CollapseStep({("e", 2)}, {("e", 2)}),
    )


def test_blow_up_identity_sequence():
    B = boundary_complex(range(3))
    seq = find_collapse(B, 2)
    same = blow_up_sequence(seq, {})
    assert [(set(s.sigma), set(s.facet)) for s in same.steps] == [
        ({(x, 1) for x in s.sigma}, {(x, 1) for x in s.facet}) for s in seq.steps
    ]


@pytest.mark.parametrize("mult", [{0: 2}, {0: 2, 1: 2}, {0: 2, 1: 2, 2: 2}, {1: 3}])
def test_blown_sequences_verify_and_restrict(mult):
    B = boundary_complex(range(3))
    seq, _ = generate_collapse(TRI, TRI.all_edges(), unit_weights(TRI), HALF3)
    big = blow_up_complex(B, mult)
    new = blow_up_sequence(seq, mult)
    assert new.d == seq.d and verify_collapse(big, new)
    originals = {(x, 1) for x in range(3)}
    small_states = {s.restrict(originals) for s in replay(B.relabel({x: (x, 1) for x in range(3)}), blow_up_sequence(seq, {}))}
    for state in replay(big, new):
        assert state.restrict(originals) in small_states


def test_minimal_nonfaces():
    B = boundary_complex(range(3))
    assert B.minimal_nonfaces() == (frozenset({0, 1, 2}),)
    X = SimplicialComplex(range(3), [{0, 1}, {2}])
    assert set(X.minimal_nonfaces()) == {frozenset({0, 2}), frozenset({1, 2})}


def test_text_formats_round_trip():
    B = blow_up_complex(boundary_complex(range(3)), {1: 2})
    assert parse_complex(format_complex(B)) == B
    seq, _ = generate_collapse(C5, C5.all_edges(), unit_weights(C5), Fraction(5, 2))
    assert parse_sequence(format_sequence(seq)) == seq
    big = blow_up_sequence(seq, {0: 2})
    assert parse_sequence(format_sequence(big)) == big
    assert parse_complex(format_complex(SimplicialComplex([], [set()]))).is_trivial()
