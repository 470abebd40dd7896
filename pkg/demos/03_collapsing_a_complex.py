"""
Collapsing the complex of small fractional matchings
====================================================

Edge sets of the triangle with nu* < 3/2 form the boundary of a 2-simplex.
The generator removes faces one at a time and checks every step.
"""

from fractions import Fraction

from rainfrac import (
    Hypergraph,
    blow_up_complex,
    blow_up_sequence,
    brute_force_collapsible,
    build_nu_complex,
    generate_collapse,
    unit_weights,
    verify_collapse,
)
from rainfrac.complex import format_sequence, format_trace
from rainfrac.constructions import cycle_edges

tri = Hypergraph(3, 2, cycle_edges(range(3)))
n = Fraction(3, 2)
X = build_nu_complex(tri, tri.all_edges(), unit_weights(tri), n)
print("facets:", [sorted(f) for f in X.facets])

seq, trace = generate_collapse(tri, tri.all_edges(), unit_weights(tri), n)
print(f"\na {seq.d}-collapse in {len(seq)} steps:")
print(format_sequence(seq), end="")
print("\nwhat each step removed, with the tilted threshold nbar:")
print(format_trace(trace), end="")
print("verifies:", bool(verify_collapse(X, seq)))

# 2 is the best possible d here.
print("\n1-collapsible?", brute_force_collapsible(X, 1))
print("2-collapsible?", brute_force_collapsible(X, 2))

# Cloning an element keeps the complex 2-collapsible; the sequence carries over.
mult = {0: 2, 2: 2}
big = blow_up_complex(X, mult)
new = blow_up_sequence(seq, mult)
print(f"\nafter cloning edges 0 and 2: {len(big.facets)} facets, {len(new)} steps,",
      "verifies:", bool(verify_collapse(big, new)))

# A larger example: the 5-cycle at n = 5/2.
c5 = Hypergraph(5, 2, cycle_edges(range(5)))
seq5, trace5 = generate_collapse(c5, c5.all_edges(), unit_weights(c5), Fraction(5, 2))
print(f"\nC5 at n = 5/2: d = {seq5.d}, {len(seq5)} steps, {len(trace5.records)} iterations")
