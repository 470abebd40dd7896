"""Extremal families: fixtures where a rainbow (fractional) matching
barely fails to exist, plus the ones where it barely succeeds.

Every generator LP-checks the per-color fractional matching number before
returning.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import ColoredFamily, Hypergraph, InstanceError, edge_set
from .lp import nu_value


def _assert_nu(family: ColoredFamily, target) -> None:
    h = family.hypergraph
    for i, col in enumerate(family.colors):
        got = nu_value(h, col)
        if got != target:
            raise RuntimeError(f"color {i}: nu* = {got}, expected {target}")


def cycle_edges(vertices) -> list:
    vs = list(vertices)
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def copies(h: Hypergraph, edges, m: int) -> ColoredFamily:
    """Family of ``m`` identical colors."""
    if m < 1:
        raise InstanceError("copies needs m >= 1")
    es = edge_set(h, edges)
    return ColoredFamily(h, (es,) * m)


def _cycle_matchings(n: int):
    even = [(2 * i, 2 * i + 1) for i in range(n)]
    odd = [(2 * i + 1, (2 * i + 2) % (2 * n)) for i in range(n)]
    return even, odd


def drisko_example(n: int) -> ColoredFamily:
    """``n-1`` copies of each perfect matching of the cycle ``C_{2n}``.

    Vertices ``0..2n-1`` in cyclic order; sides of the bipartition are the
    vertex parities.
    """
    if n < 2:
        raise InstanceError("drisko_example needs n >= 2")
    even, odd = _cycle_matchings(n)
    h = Hypergraph(2 * n, 2, tuple(even + odd), tuple(v % 2 for v in range(2 * n)))
    m0 = tuple(range(n))
    m1 = tuple(range(n, 2 * n))
    fam = ColoredFamily(h, (m0,) * (n - 1) + (m1,) * (n - 1))
    _assert_nu(fam, n)
    return fam


def cycle_perfect_matchings(family: ColoredFamily) -> tuple:
    """The two perfect matchings of the even cycle underlying ``drisko_example``."""
    n = family.hypergraph.vertex_count // 2
    return tuple(range(n)), tuple(range(n, 2 * n))


def bgs_example(n: int) -> ColoredFamily:
    """``drisko_example(n)`` for even ``n`` plus one matching of chords
    ``{0 2, 1 3, 4 6, 5 7, ...}``; ``2n-1`` colors, not bipartite."""
    if n < 2 or n % 2:
        raise InstanceError("bgs_example needs an even n >= 2")
    even, odd = _cycle_matchings(n)
    chords = []
    for j in range(n // 2):
        chords += [(4 * j, 4 * j + 2), (4 * j + 1, 4 * j + 3)]
    h = Hypergraph(2 * n, 2, tuple(even + odd + chords))
    m0, m1 = tuple(range(n)), tuple(range(n, 2 * n))
    extra = tuple(range(2 * n, 3 * n))
    fam = ColoredFamily(h, (m0,) * (n - 1) + (m1,) * (n - 1) + (extra,))
    _assert_nu(fam, n)
    return fam


def odd_cycle_family(k: int, m: int | None = None):
    """``2k`` copies of the edge set of ``C_{2k+1}`` (or ``m`` copies).

    Returns ``(family, k + 1/2)``.
    """
    if k < 1:
        raise InstanceError("odd_cycle_family needs k >= 1")
    h = Hypergraph(2 * k + 1, 2, tuple(cycle_edges(range(2 * k + 1))))
    n = Fraction(2 * k + 1, 2)
    fam = copies(h, h.all_edges(), 2 * k if m is None else m)
    _assert_nu(fam, n)
    return fam, n


def two_odd_cycles_family(n: int, m: int | None = None) -> ColoredFamily:
    """A triangle and a disjoint ``C_{2n-3}``; ``2n-1`` copies by default."""
    if n < 3:
        raise InstanceError("two_odd_cycles_family needs n >= 3")
    edges = cycle_edges(range(3)) + cycle_edges(range(3, 2 * n))
    h = Hypergraph(2 * n, 2, tuple(edges))
    fam = copies(h, h.all_edges(), 2 * n - 1 if m is None else m)
    _assert_nu(fam, n)
    return fam


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _normalized_points(q: int) -> list:
    # first nonzero coordinate is 1; lexicographic order
    pts = [p for p in product(range(q), repeat=3) if any(p)]
    return sorted(p for p in pts if next(x for x in p if x) == 1)


def projective_plane(q: int):
    """Points and lines of PG(2, q) over the integers mod prime ``q``.

    Lines are returned as tuples of point indices.
    """
    if not is_prime(q):
        raise InstanceError(f"q = {q} is not prime")
    pts = _normalized_points(q)
    lines = []
    for l in _normalized_points(q):
        lines.append(tuple(i for i, p in enumerate(pts) if sum(a * b for a, b in zip(l, p)) % q == 0))
    return pts, lines


def truncated_projective_plane(q: int):
    """PG(2, q) minus the point (0:0:1) and the ``q+1`` lines through it.

    Returns ``(hypergraph, lines, q)``: a ``(q+1)``-partite hypergraph on
    ``q^2 + q`` vertices whose ``q^2`` edges are the remaining lines.  The
    sides are the deleted lines with the deleted point removed.
    """
    pts, lines = projective_plane(q)
    dead = pts.index((0, 0, 1))
    through = [l for l in lines if dead in l]
    kept = [l for l in lines if dead not in l]
    alive = [i for i in range(len(pts)) if i != dead]
    relabel = {p: k for k, p in enumerate(alive)}
    side = [0] * len(alive)
    for s, l in enumerate(through):
        for p in l:
            if p != dead:
                side[relabel[p]] = s
    h = Hypergraph(len(alive), q + 1, tuple(tuple(relabel[p] for p in l) for l in kept), tuple(side))
    es = h.all_edges()
    got = nu_value(h, es)
    if got != q:
        raise RuntimeError(f"truncated plane: nu* = {got}, expected {q}")
    return h, es, q


def truncated_plane_family(q: int, m: int = 1) -> ColoredFamily:
    h, es, _ = truncated_projective_plane(q)
    return copies(h, es, m)


GENERATORS = {
    "drisko": ("n",),
    "bgs": ("n",),
    "odd_cycle": ("k",),
    "two_odd_cycles": ("n",),
    "truncated_plane": ("q",),
}


def build(kind: str, copies_: int | None = None, **params) -> ColoredFamily:
    """Build a fixture family by name; ``copies_`` overrides the color count
    where that makes sense."""
    if kind == "drisko":
        return drisko_example(params["n"])
    if kind == "bgs":
        return bgs_example(params["n"])
    if kind == "odd_cycle":
        return odd_cycle_family(params["k"], copies_)[0]
    if kind == "two_odd_cycles":
        return two_odd_cycles_family(params["n"], copies_)
    if kind == "truncated_plane":
        return truncated_plane_family(params["q"], copies_ or 1)
    raise InstanceError(f"unknown construction {kind!r}")
