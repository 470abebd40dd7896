"""
Fractional matchings and covers
===============================

Every value below is an exact fraction, and every optimum comes with a
matching and a cover that certify it.
"""

from fractions import Fraction

from rainfrac import Hypergraph, WeightSystem, matching_number, nu_star, tau_star
from rainfrac.constructions import cycle_edges, truncated_projective_plane

# The 5-cycle: half of every edge gives 5/2, while two disjoint edges is the best
# integral matching.
c5 = Hypergraph(5, 2, cycle_edges(range(5)))
res = nu_star(c5, c5.all_edges())
print("C5: nu* =", res.value, " nu =", matching_number(c5, c5.all_edges()))
print("  matching", {e: str(x) for e, x in res.primal.values.items()})
print("  cover   ", {v: str(x) for v, x in res.dual.values.items()})

# The cover LP is solved on its own and lands on the same number.
print("  tau* =", tau_star(c5, c5.all_edges()).value)

# Truncated Fano plane: four lines of size 3, three sides of two points.
h, lines, q = truncated_projective_plane(2)
print("\ntruncated Fano lines:", h.edges, "partition:", h.partition)
print("nu* of all lines:", nu_star(h, lines).value)
print("nu* without the last line:", nu_star(h, lines[:-1]).value)

# Weights: edges count a_e towards the size and vertex v may carry load b_v.
edge = Hypergraph(2, 2, [(0, 1)])
w = WeightSystem((2,), (Fraction(1, 3), 1))
print("\nsingle edge, a = 2, b = (1/3, 1):", nu_star(edge, [0], w).value)
