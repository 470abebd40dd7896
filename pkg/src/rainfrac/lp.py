"""Weighted fractional matching and cover numbers with exact certificates.

For an edge set ``E'`` and positive weights ``a`` (edges), ``b`` (vertices)::

    nu*_{a,b}(E')  = max  sum_e a_e f(e)   s.t.  sum_{e ∋ v} f(e) <= b_v,  f >= 0
    tau*_{a,b}(E') = min  sum_v b_v g(v)   s.t.  sum_{v ∈ e} g(v) >= a_e,  g >= 0

Both are solved with the exact simplex in :mod:`rainfrac.simplex`; every
returned certificate is re-checked before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable

from .core import Hypergraph, ScaleError, WeightSystem, unit_weights
from .simplex import solve

ZERO = Fraction(0)


class LPError(RuntimeError):
    """A solver certificate failed its exact re-check (a bug, never expected)."""


@dataclass(frozen=True)
class FractionalMatching:
    values: dict  # edge index -> Fraction
    size: Fraction

    def support(self) -> tuple:
        return tuple(sorted(e for e, x in self.values.items() if x > 0))


@dataclass(frozen=True)
class FractionalCover:
    values: dict  # vertex -> Fraction
    size: Fraction


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    primal: FractionalMatching
    dual: FractionalCover


def _weights(h: Hypergraph, w: WeightSystem | None) -> WeightSystem:
    if w is None:
        return unit_weights(h)
    w.check(h)
    return w


def _canon(edges: Iterable[int]) -> tuple:
    return tuple(sorted(set(edges)))


def nu_value(h: Hypergraph, edges: Iterable[int], w: WeightSystem | None = None) -> Fraction:
    """Optimal value of the matching LP, without certificates.

    Hot path for the search and complex routines.
    """
    edges = _canon(edges)
    if not edges:
        return ZERO
    w = w if w is not None else unit_weights(h)
    verts = h.vertices_of(edges)
    rows = []
    for v in verts:
        rows.append(([1 if v in h.edges[e] else 0 for e in edges], "<=", w.b[v]))
    return solve([w.a[e] for e in edges], rows, maximize=True).value


def load(h: Hypergraph, f: dict, v: int) -> Fraction:
    return sum((x for e, x in f.items() if v in h.edges[e]), ZERO)


def check_matching(h: Hypergraph, w: WeightSystem, f: dict, edges=None) -> str | None:
    """Return a reason string if ``f`` is not a feasible fractional matching."""
    if edges is not None:
        allowed = set(edges)
        if any(e not in allowed for e, x in f.items() if x != 0):
            return "support outside edge set"
    if any(x < 0 for x in f.values()):
        return "negative value"
    for v in range(h.vertex_count):
        if load(h, f, v) > w.b[v]:
            return f"vertex {v} overloaded"
    return None


def check_cover(h: Hypergraph, w: WeightSystem, g: dict, edges) -> str | None:
    if any(x < 0 for x in g.values()):
        return "negative value"
    for e in edges:
        if sum((g.get(v, ZERO) for v in h.edges[e]), ZERO) < w.a[e]:
            return f"edge {e} not covered"
    return None


def _certify(h, w, edges, f, g, value) -> LPResult:
    reason = check_matching(h, w, f, edges) or check_cover(h, w, g, edges)
    if reason:
        raise LPError(f"certificate re-check failed: {reason}")
    fsize = sum((w.a[e] * x for e, x in f.items()), ZERO)
    gsize = sum((w.b[v] * x for v, x in g.items()), ZERO)
    if not fsize == gsize == value:
        raise LPError(f"duality gap: primal {fsize}, dual {gsize}, value {value}")
    return LPResult(value, FractionalMatching(f, fsize), FractionalCover(g, gsize))


def _empty(h) -> LPResult:
    return LPResult(ZERO, FractionalMatching({}, ZERO),
                    FractionalCover({v: ZERO for v in range(h.vertex_count)}, ZERO))


def nu_star(h: Hypergraph, edges: Iterable[int], w: WeightSystem | None = None) -> LPResult:
    """Maximum weighted fractional matching on ``edges`` with a dual cover.

    The cover is read off the optimal basis and re-verified.
    """
    w = _weights(h, w)
    edges = _canon(edges)
    if not edges:
        return _empty(h)
    verts = h.vertices_of(edges)
    rows = [([1 if v in h.edges[e] else 0 for e in edges], "<=", w.b[v]) for v in verts]
    sol = solve([w.a[e] for e in edges], rows, maximize=True)
    f = dict(zip(edges, sol.x))
    g = {v: ZERO for v in range(h.vertex_count)}
    g.update(zip(verts, sol.duals))
    return _certify(h, w, edges, f, g, sol.value)


def tau_star(h: Hypergraph, edges: Iterable[int], w: WeightSystem | None = None) -> LPResult:
    """Minimum weighted fractional cover of ``edges``, solved on the cover side.

    Independent of :func:`nu_star`: the matching certificate comes from the
    cover LP's duals.
    """
    w = _weights(h, w)
    edges = _canon(edges)
    if not edges:
        return _empty(h)
    verts = h.vertices_of(edges)
    rows = [([1 if v in h.edges[e] else 0 for v in verts], ">=", w.a[e]) for e in edges]
    sol = solve([w.b[v] for v in verts], rows, maximize=False)
    g = {v: ZERO for v in range(h.vertex_count)}
    g.update(zip(verts, sol.x))
    f = dict(zip(edges, sol.duals))
    return _certify(h, w, edges, f, g, sol.value)


def dual_is_unique(h: Hypergraph, edges: Iterable[int], w: WeightSystem | None = None):
    """Decide whether the optimal fractional cover of ``edges`` is unique.

    For every vertex, ``g(v)`` is minimized and maximized over the optimal
    face.  Returns ``(True, None)`` or ``(False, (g1, g2))`` with two
    distinct optimal covers.
    """
    w = _weights(h, w)
    edges = _canon(edges)
    if not edges:
        return True, None
    tau = nu_value(h, edges, w)
    verts = h.vertices_of(edges)
    rows = [([1 if v in h.edges[e] else 0 for v in verts], ">=", w.a[e]) for e in edges]
    rows.append(([w.b[v] for v in verts], "=", tau))

    def cover(x):
        g = {v: ZERO for v in range(h.vertex_count)}
        g.update(zip(verts, x))
        return FractionalCover(g, tau)

    for k in range(len(verts)):
        c = [0] * len(verts)
        c[k] = 1
        lo = solve(c, rows, maximize=False)
        hi = solve(c, rows, maximize=True)
        if lo.value != hi.value:
            return False, (cover(lo.x), cover(hi.x))
    return True, None


def matching_number(h: Hypergraph, edges: Iterable[int], max_edges: int = 40) -> int:
    """Size of a largest set of pairwise disjoint edges.

    Branch and bound on edge inclusion; ``floor(nu*)`` of the still-usable
    edges bounds every completion.
    """
    edges = _canon(edges)
    if len(edges) > max_edges:
        raise ScaleError(f"matching_number: {len(edges)} edges exceeds cap {max_edges}")
    unit = unit_weights(h)
    best = 0

    def rec(cands, count):
        nonlocal best
        best = max(best, count)
        if not cands:
            return
        if count + floor(nu_value(h, cands, unit)) <= best:
            return
        e, rest = cands[0], cands[1:]
        ve = set(h.edges[e])
        rec(tuple(x for x in rest if ve.isdisjoint(h.edges[x])), count + 1)
        rec(rest, count)

    rec(edges, 0)
    return best
