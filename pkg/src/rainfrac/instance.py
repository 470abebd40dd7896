"""Line-oriented instance text format.

::

    % comment
    r 3
    v 6
    partition 0 1 2 0 1 2
    color lines
    e 0 1 2
    e 3 4 5
    wa 0 1/2
    wb 4 3

Edges get indices in order of first appearance.  Edges listed before
any ``color`` line belong to color ``0``.  Weights default to ``1/1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import (
    ColoredFamily,
    Hypergraph,
    InstanceError,
    WeightSystem,
    as_rational,
    format_rational,
    unit_weights,
)


@dataclass(frozen=True)
class Instance:
    hypergraph: Hypergraph
    colors: tuple
    names: tuple
    weights: WeightSystem

    @property
    def family(self) -> ColoredFamily:
        return ColoredFamily(self.hypergraph, self.colors, self.names, allow_empty=True)

    def color(self, i: int) -> tuple:
        if not 0 <= i < len(self.colors):
            raise InstanceError(f"no color {i}")
        return self.colors[i]


def from_family(family: ColoredFamily, weights: WeightSystem | None = None) -> Instance:
    """Wrap a family as an instance, re-indexing edges by first appearance.

    Hypergraph edges that belong to no color are dropped, since the text
    format cannot represent them.
    """
    h = family.hypergraph
    w = weights or unit_weights(h)
    w.check(h)
    order = []
    pos = {}
    for col in family.colors:
        for e in col:
            if e not in pos:
                pos[e] = len(order)
                order.append(e)
    h2 = Hypergraph(h.vertex_count, h.r, tuple(h.edges[e] for e in order), h.partition)
    colors = tuple(tuple(sorted(pos[e] for e in col)) for col in family.colors)
    w2 = WeightSystem(tuple(w.a[e] for e in order), w.b)
    return Instance(h2, colors, family.names, w2)


def parse_instance(text: str) -> Instance:
    r = v = None
    partition = None
    edges: list = []
    index: dict = {}
    colors: list = []
    names: list = []
    wa: dict = {}
    wb: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        tok = line.split()
        key, args = tok[0], tok[1:]
        try:
            if r is None:
                if key != "r" or len(args) != 1:
                    raise InstanceError("first line must be 'r <uniformity>'")
                r = int(args[0])
            elif v is None:
                if key != "v" or len(args) != 1:
                    raise InstanceError("second line must be 'v <vertex_count>'")
                v = int(args[0])
            elif key == "partition":
                if partition is not None or edges or colors:
                    raise InstanceError("partition must precede colors and edges")
                partition = tuple(int(x) for x in args)
            elif key == "color":
                if len(args) != 1:
                    raise InstanceError("expected 'color <name>'")
                colors.append([])
                names.append(args[0])
            elif key == "e":
                e = tuple(sorted(int(x) for x in args))
                if len(e) != r:
                    raise InstanceError(f"edge must list {r} vertices")
                if not colors:
                    colors.append([])
                    names.append("0")
                if e not in index:
                    index[e] = len(edges)
                    edges.append(e)
                i = index[e]
                if i in colors[-1]:
                    raise InstanceError(f"edge {e} repeated within color {names[-1]}")
                colors[-1].append(i)
            elif key in ("wa", "wb"):
                if len(args) != 2:
                    raise InstanceError(f"expected '{key} <index> <p/q>'")
                target = wa if key == "wa" else wb
                k = int(args[0])
                if k in target:
                    raise InstanceError(f"duplicate weight for {key} {k}")
                target[k] = as_rational(args[1])
            else:
                raise InstanceError(f"unknown directive {key!r}")
        except InstanceError as exc:
            raise InstanceError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise InstanceError(f"line {lineno}: {exc}") from None
    if r is None or v is None:
        raise InstanceError("missing 'r' or 'v' header")
    h = Hypergraph(v, r, tuple(edges), partition)
    for k in wa:
        if not 0 <= k < len(edges):
            raise InstanceError(f"wa refers to unknown edge {k}")
    for k in wb:
        if not 0 <= k < v:
            raise InstanceError(f"wb refers to unknown vertex {k}")
    w = WeightSystem.from_mappings(h, wa, wb)
    return Instance(h, tuple(tuple(sorted(c)) for c in colors), tuple(names), w)


def format_instance(inst: Instance) -> str:
    h = inst.hypergraph
    seen = []
    for col in inst.colors:
        for e in col:
            if e not in seen:
                seen.append(e)
    if seen != list(range(len(h.edges))):
        raise InstanceError("edges are not in first-appearance order; use from_family() first")
    out = [f"r {h.r}", f"v {h.vertex_count}"]
    if h.partition is not None:
        out.append("partition " + " ".join(map(str, h.partition)))
    for name, col in zip(inst.names, inst.colors):
        out.append(f"color {name}")
        out.extend("e " + " ".join(map(str, h.edges[e])) for e in col)
    w = inst.weights
    out.extend(f"wa {i} {format_rational(x)}" for i, x in enumerate(w.a) if x != 1)
    out.extend(f"wb {i} {format_rational(x)}" for i, x in enumerate(w.b) if x != 1)
    return "\n".join(out) + "\n"


def read_instance(path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: Instance, path) -> None:
    Path(path).write_text(format_instance(inst), encoding="utf-8")


__all__ = [
    "Instance",
    "from_family",
    "parse_instance",
    "format_instance",
    "read_instance",
    "write_instance",
]
