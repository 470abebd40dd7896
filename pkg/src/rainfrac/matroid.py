"""Partition matroids on labelled edge universes and the search for a
face whose complement has small rank.

For a colored family ``E_1..E_m`` the labelled universe is the set of
pairs ``(e, i)`` with ``e ∈ E_i``; the partition matroid takes at most one
pair per color.  Blowing the ``nu*``-complex up along the projection
``(e, i) -> e`` gives a complex on the same universe, and a face with
small complement rank is what the topological argument produces.
"""

from __future__ import annotations

from itertools import product

from .complex import (
    MAX_ENUM,
    SimplicialComplex,
    blow_up_complex,
    build_nu_complex,
    label_key,
    sorted_face,
)
from .core import ColoredFamily, InstanceError, ScaleError, WeightSystem, unit_weights

MAX_BASES = 100_000


class ContainmentError(ValueError):
    """The matroid is not a subcomplex; ``independent_set`` is a witness."""

    def __init__(self, message: str, independent_set: frozenset):
        super().__init__(message)
        self.independent_set = independent_set


class Matroid:
    """Rank-oracle interface; subclasses supply :meth:`rank`."""

    ground: frozenset

    def rank(self, subset) -> int:
        raise NotImplementedError

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        return self.rank(s) == len(s)


class PartitionMatroid(Matroid):
    """Independent sets meet every part in at most one element.

    ``parts`` maps each ground element to the name of its part.
    """

    def __init__(self, parts):
        self.part_of = dict(parts)
        self.ground = frozenset(self.part_of)
        blocks: dict = {}
        for x, p in self.part_of.items():
            blocks.setdefault(p, []).append(x)
        self.parts = {p: tuple(sorted(xs, key=label_key)) for p, xs in blocks.items()}

    def __repr__(self) -> str:
        return f"PartitionMatroid({len(self.ground)} elements, {len(self.parts)} parts)"

    def _check(self, subset) -> frozenset:
        s = frozenset(subset)
        if not s <= self.ground:
            raise InstanceError(f"{sorted_face(s - self.ground)} not in the ground set")
        return s

    def rank(self, subset) -> int:
        return len({self.part_of[x] for x in self._check(subset)})

    def bases(self):
        """All maximal independent sets, one element from every part."""
        keys = sorted(self.parts, key=label_key)
        for choice in product(*(self.parts[k] for k in keys)):
            yield frozenset(choice)

    def basis_count(self) -> int:
        count = 1
        for xs in self.parts.values():
            count *= len(xs)
        return count


def labeled_universe(family: ColoredFamily) -> tuple:
    """Pairs ``(e, i)`` with ``e`` an edge of color ``i``."""
    return tuple((e, i) for i, col in enumerate(family.colors) for e in col)


def color_matroid(family: ColoredFamily) -> PartitionMatroid:
    return PartitionMatroid({(e, i): i for e, i in labeled_universe(family)})


def labeled_complex(
    family: ColoredFamily, n, w: WeightSystem | None = None, *, max_enum: int = MAX_ENUM
) -> SimplicialComplex:
    """Sets of labelled edges whose underlying edges span ``nu* < n``.

    This is the blow-up of ``X_{a,b,n}`` on the union of the colors, each
    edge cloned once per color containing it, with the clones renamed
    ``(e, color)``.
    """
    h = family.hypergraph
    w = w or unit_weights(h)
    X = build_nu_complex(h, family.union(), w, n, max_enum=max_enum)
    owners: dict = {}
    for i, col in enumerate(family.colors):
        for e in col:
            owners.setdefault(e, []).append(i)
    big = blow_up_complex(X, {e: len(cs) for e, cs in owners.items()})
    return big.relabel({(e, j): (e, owners[e][j - 1]) for e, j in big.ground})


def _shrink(X: SimplicialComplex, s: frozenset) -> frozenset:
    for x in sorted_face(s):
        if (s - {x}) not in X:
            s = s - {x}
    return s


def check_containment(X: SimplicialComplex, M: PartitionMatroid, *, max_bases: int = MAX_BASES) -> frozenset | None:
    """Return ``None`` if every independent set of ``M`` is a face of ``X``,
    otherwise an inclusion-minimal independent non-face.

    Faces are closed under subsets, so only bases need checking.
    """
    if not M.ground <= X.ground:
        x = sorted_face(M.ground - X.ground)[0]
        return frozenset([x])
    if M.basis_count() > max_bases:
        raise ScaleError(f"{M.basis_count()} bases exceed the cap {max_bases}")
    for B in M.bases():
        if B not in X:
            return _shrink(X, B)
    return None


def km_witness(X: SimplicialComplex, M: PartitionMatroid, d: int, *, max_bases: int = MAX_BASES):
    """A face ``tau`` of ``X`` with ``rank(ground - tau) <= d``, or ``None``.

    Raises :class:`ContainmentError` if ``M`` is not contained in ``X``.
    Since the complement rank only drops as ``tau`` grows, it suffices to
    look at facets (largest first, ties broken lexicographically).
    """
    bad = check_containment(X, M, max_bases=max_bases)
    if bad is not None:
        raise ContainmentError("an independent set of the matroid is not a face", bad)
    ground = M.ground
    facets = sorted(X.facets, key=lambda f: (-len(f), [label_key(x) for x in sorted_face(f)]))
    for f in facets:
        if M.rank(ground - f) <= d:
            return f
    return None


__all__ = [
    "ContainmentError",
    "Matroid",
    "PartitionMatroid",
    "labeled_universe",
    "color_matroid",
    "labeled_complex",
    "check_containment",
    "km_witness",
]
