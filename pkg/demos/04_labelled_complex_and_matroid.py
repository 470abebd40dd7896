"""
Colors as a partition matroid
=============================

Label each edge by the colors it belongs to.  Rainbow sets are exactly
the independent sets of the partition matroid whose parts are the colors.
If every rainbow set has nu* < n, the matroid sits inside the labelled
complex and a face with small complement rank must exist; the search
below either finds it or exhibits a rainbow set with nu* >= n.
"""

import math

from rainfrac import ContainmentError, color_matroid, km_witness, labeled_complex
from rainfrac.complex import face_text
from rainfrac.constructions import odd_cycle_family

for copies in (4, 5):
    fam, n = odd_cycle_family(2, copies)
    X = labeled_complex(fam, n)
    M = color_matroid(fam)
    d = math.ceil(2 * n) - 1
    print(f"{copies} copies of C5, n = {n}: {len(X.ground)} labelled edges, {len(X.facets)} facets, d = {d}")
    try:
        tau = km_witness(X, M, d)
    except ContainmentError as exc:
        print("  a rainbow set escapes the complex:", face_text(exc.independent_set))
    else:
        print("  witness face:", face_text(tau))
        print("  rank of its complement:", M.rank(M.ground - tau))
