"""
Do floor(rn) colors suffice when rn is not an integer?
======================================================

An open guess, so this is only an experiment.  Taken literally it fails
for thresholds nu* never takes: on graphs nu* is a multiple of 1/2, so
nu* >= 4/3 already means nu* >= 3/2 and two triangles (floor(8/3) = 2
colors) have no rainbow matching of size 4/3.  The second loop therefore
sets n to the smallest nu* among the colors, so that n is attained.
"""

import math
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from oracles import random_hypergraph, rejection_family  # noqa: E402

from rainfrac import ColoredFamily, Hypergraph, find_rainbow_fractional  # noqa: E402
from rainfrac.lp import nu_value  # noqa: E402

two_triangles = ColoredFamily(Hypergraph(3, 2, [(0, 1), (1, 2), (0, 2)]), [(0, 1, 2)] * 2)
print("two triangles, n = 4/3:", find_rainbow_fractional(two_triangles, Fraction(4, 3)))

rng = random.Random(7)
tried = missing = 0
for _ in range(300):
    r = rng.choice([2, 3])
    n0 = rng.choice([Fraction(3, 2), Fraction(5, 2), Fraction(4, 3), Fraction(7, 3)])
    h = random_hypergraph(rng, r, 8, 12)
    fam = rejection_family(rng, h, n0, math.ceil(r * n0) + 1)
    if fam is None:
        continue
    n = min(nu_value(h, c) for c in fam.colors)
    if (r * n).denominator == 1:
        continue
    fam = fam.with_colors(fam.colors[: math.floor(r * n)])
    tried += 1
    if find_rainbow_fractional(fam, n, max_total=200) is None:
        missing += 1
        print(f"no rainbow matching: r = {r}, n = {n}, colors {fam.colors}")
print(f"{tried} families with attained n tried, {missing} without a rainbow fractional matching")
