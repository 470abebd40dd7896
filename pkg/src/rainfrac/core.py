"""Hypergraphs, edge sets, weights and colored families.

All scalars are :class:`fractions.Fraction`; floats are refused at the
boundary so that every downstream quantity is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, NamedTuple, Sequence

Rational = Fraction
EdgeSet = tuple  # canonical sorted tuple of edge indices


class InstanceError(ValueError):
    """Malformed hypergraph, edge set, weight system or instance file."""


class ScaleError(ValueError):
    """An exhaustive routine was asked to run beyond its size cap."""


class Verdict(NamedTuple):
    """Outcome of a certificate check; falsy on failure."""

    ok: bool
    reason: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def as_rational(x) -> Fraction:
    """Convert ``x`` to an exact Fraction.

    Accepts ints, Fractions and strings of the form ``p`` or ``p/q``.
    Floats are rejected.
    """
    if isinstance(x, bool):
        raise InstanceError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                q = int(q)
                if q == 0:
                    raise InstanceError(f"zero denominator in {x!r}")
                return Fraction(int(p), q)
            return Fraction(int(s))
        except ValueError as exc:
            raise InstanceError(f"not a rational: {x!r}") from exc
    raise InstanceError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..vertex_count-1``.

    Edges are stored as sorted vertex tuples and keep the index they were
    given. ``partition`` optionally maps each vertex to a side in
    ``0..r-1``; when present every edge must take exactly one vertex from
    each side.
    """

    vertex_count: int
    uniformity: int
    edges: tuple
    partition: tuple | None = None

    def __post_init__(self):
        r = self.uniformity
        if r < 2:
            raise InstanceError(f"uniformity must be >= 2, got {r}")
        if self.vertex_count < 0:
            raise InstanceError("negative vertex count")
        canon = []
        seen = set()
        for raw in self.edges:
            e = tuple(sorted(int(v) for v in raw))
            if len(e) != r or len(set(e)) != r:
                raise InstanceError(f"edge {tuple(raw)} does not have {r} distinct vertices")
            if e[0] < 0 or e[-1] >= self.vertex_count:
                raise InstanceError(f"edge {tuple(raw)} has a vertex outside 0..{self.vertex_count - 1}")
            if e in seen:
                raise InstanceError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(canon))
        if self.partition is not None:
            part = tuple(int(s) for s in self.partition)
            if len(part) != self.vertex_count:
                raise InstanceError("partition must assign a side to every vertex")
            if any(s < 0 or s >= r for s in part):
                raise InstanceError(f"partition sides must lie in 0..{r - 1}")
            for e in canon:
                if sorted(part[v] for v in e) != list(range(r)):
                    raise InstanceError(f"edge {e} does not take one vertex from each side")
            object.__setattr__(self, "partition", part)

    @property
    def r(self) -> int:
        return self.uniformity

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, edge: Iterable[int]) -> int:
        key = tuple(sorted(edge))
        try:
            return self._index[key]
        except KeyError:
            raise InstanceError(f"{key} is not an edge") from None

    def all_edges(self) -> EdgeSet:
        return tuple(range(len(self.edges)))

    def vertices_of(self, edges: Iterable[int]) -> tuple:
        """Sorted vertices touched by the given edge indices."""
        return tuple(sorted({v for i in edges for v in self.edges[i]}))


def edge_set(h: Hypergraph, indices: Iterable[int]) -> EdgeSet:
    """Canonical edge set: validated, duplicate-free, sorted."""
    idx = [int(i) for i in indices]
    for i in idx:
        if i < 0 or i >= len(h.edges):
            raise InstanceError(f"edge index {i} out of range")
    if len(set(idx)) != len(idx):
        raise InstanceError(f"duplicate edge in edge set {idx}")
    return tuple(sorted(idx))


def incidence_vector(h: Hypergraph, e: int) -> tuple:
    """0/1 indicator of edge ``e`` as a subset of the vertex set."""
    if not 0 <= e < len(h.edges):
        raise InstanceError(f"edge index {e} out of range")
    members = set(h.edges[e])
    return tuple(1 if v in members else 0 for v in range(h.vertex_count))


@dataclass(frozen=True)
class WeightSystem:
    """Positive edge weights ``a`` and vertex weights ``b``."""

    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(as_rational(x) for x in self.a)
        b = tuple(as_rational(x) for x in self.b)
        if any(x <= 0 for x in a) or any(x <= 0 for x in b):
            raise InstanceError("weights must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_mappings(cls, h: Hypergraph, a: Mapping | None = None, b: Mapping | None = None):
        a = a or {}
        b = b or {}
        return cls(
            tuple(a.get(i, 1) for i in range(len(h.edges))),
            tuple(b.get(v, 1) for v in range(h.vertex_count)),
        )

    def check(self, h: Hypergraph) -> None:
        if len(self.a) != len(h.edges) or len(self.b) != h.vertex_count:
            raise InstanceError("weight system does not match the hypergraph")

    def a_min(self, edges: Iterable[int] | None = None) -> Fraction:
        if edges is None:
            return min(self.a)
        return min(self.a[i] for i in edges)

    def b_min(self) -> Fraction:
        return min(self.b)

    def replace(self, a=None, b=None) -> "WeightSystem":
        return WeightSystem(self.a if a is None else a, self.b if b is None else b)

    def is_unit(self) -> bool:
        return all(x == 1 for x in self.a) and all(x == 1 for x in self.b)


def unit_weights(h: Hypergraph) -> WeightSystem:
    return WeightSystem((Fraction(1),) * len(h.edges), (Fraction(1),) * h.vertex_count)


@dataclass(frozen=True)
class ColoredFamily:
    """A sequence of (not necessarily distinct) edge sets ``E_1..E_m``."""

    hypergraph: Hypergraph
    colors: tuple
    names: tuple = field(default=None)
    allow_empty: bool = False

    def __post_init__(self):
        cols = tuple(edge_set(self.hypergraph, c) for c in self.colors)
        if not cols:
            raise InstanceError("a colored family needs at least one color")
        if not self.allow_empty and any(len(c) == 0 for c in cols):
            raise InstanceError("empty color")
        object.__setattr__(self, "colors", cols)
        names = self.names
        if names is None:
            names = tuple(str(i) for i in range(len(cols)))
        names = tuple(str(x) for x in names)
        if len(names) != len(cols):
            raise InstanceError("one name per color required")
        object.__setattr__(self, "names", names)

    def __len__(self) -> int:
        return len(self.colors)

    def union(self) -> EdgeSet:
        return tuple(sorted({e for c in self.colors for e in c}))

    def with_colors(self, colors: Sequence, names: Sequence | None = None) -> "ColoredFamily":
        return ColoredFamily(self.hypergraph, tuple(colors), names, self.allow_empty)

    def extended(self, extra: Sequence, name: str | None = None) -> "ColoredFamily":
        """Family with one more color appended."""
        names = self.names + ((name if name is not None else str(len(self.colors))),)
        return ColoredFamily(self.hypergraph, self.colors + (tuple(extra),), names, self.allow_empty)
