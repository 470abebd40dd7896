"""
When rainbow matchings appear
=============================

Each family below sits exactly on the boundary: the search is exhaustive,
so ABSENT means no choice of edges from distinct colors works.
"""

from rainfrac import find_rainbow_fractional, find_rainbow_integral
from rainfrac.constructions import (
    bgs_example,
    cycle_perfect_matchings,
    drisko_example,
    odd_cycle_family,
    truncated_plane_family,
    two_odd_cycles_family,
)


def show(label, cert):
    if cert is None:
        print(f"{label:45s} ABSENT")
    else:
        print(f"{label:45s} found with edges {cert.edges()}")


# 2k copies of an odd cycle C_{2k+1}: every color has nu* = k + 1/2 but a rainbow
# fractional matching of that size needs all 2k+1 edges, hence 2k+1 colors.
for k in (1, 2, 3):
    fam, n = odd_cycle_family(k)
    show(f"{2 * k} copies of C{2 * k + 1}, n = {n}", find_rainbow_fractional(fam, n))
    fam, n = odd_cycle_family(k, 2 * k + 1)
    show(f"{2 * k + 1} copies of C{2 * k + 1}, n = {n}", find_rainbow_fractional(fam, n))

# A triangle next to another triangle: nu* = 3 per color, and 5 colors are not enough.
show("5 copies of two triangles, n = 3", find_rainbow_fractional(two_odd_cycles_family(3, 5), 3))
show("6 copies of two triangles, n = 3", find_rainbow_fractional(two_odd_cycles_family(3, 6), 3))

# In the 3-partite truncated Fano plane rn - r + 1 = 4 copies are needed.
show("3 copies of the truncated Fano plane, n = 2", find_rainbow_fractional(truncated_plane_family(2, 3), 2))
show("4 copies of the truncated Fano plane, n = 2", find_rainbow_fractional(truncated_plane_family(2, 4), 2))

# Integral matchings in C_{2n}: 2n - 2 perfect matchings are not enough, 2n - 1 are.
for n in (2, 3, 4):
    fam = drisko_example(n)
    show(f"n-1 copies of each perfect matching of C{2 * n}", find_rainbow_integral(fam, n))
    extra = cycle_perfect_matchings(fam)[0]
    show(f"  plus one more perfect matching", find_rainbow_integral(fam.extended(extra), n))
show("same for C8 plus a matching of chords, n = 4", find_rainbow_integral(bgs_example(4), 4))
