"""Exhaustive search for rainbow fractional and integral matchings.

Colors are visited in index order.  At each color the search tries every
edge of that color (increasing index) and then the option of leaving the
color unused.  Because adding edges never lowers the fractional matching
number, ``nu*(chosen ∪ edges of all later colors) < n`` proves a subtree
empty; those subtrees are cut and remembered by ``(color, chosen set)``.

An absent result is therefore a proof of absence for the given family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ColoredFamily, ScaleError, Verdict, WeightSystem, as_rational, format_rational, unit_weights
from .lp import FractionalMatching, check_matching, nu_star, nu_value

MAX_TOTAL = 64
MAX_COLORS = 16


@dataclass(frozen=True)
class RainbowCertificate:
    assignment: tuple  # ((color, edge), ...)
    matching: FractionalMatching
    target: Fraction

    def edges(self) -> tuple:
        return tuple(e for _, e in self.assignment)


@dataclass(frozen=True)
class IntegralRainbowCertificate:
    assignment: tuple
    target: int

    def edges(self) -> tuple:
        return tuple(e for _, e in self.assignment)


def _check_scale(family: ColoredFamily, max_total: int, max_colors: int) -> None:
    total = sum(len(c) for c in family.colors)
    if len(family) > max_colors or total > max_total:
        raise ScaleError(
            f"family with {len(family)} colors and {total} edges exceeds exhaustive caps "
            f"({max_colors} colors, {max_total} edges)"
        )


def find_rainbow_fractional(
    family: ColoredFamily,
    n,
    w: WeightSystem | None = None,
    *,
    prune: bool = True,
    max_total: int = MAX_TOTAL,
    max_colors: int = MAX_COLORS,
) -> RainbowCertificate | None:
    """Find edges from distinct colors supporting a fractional matching of size ``n``.

    Returns a verified certificate, or ``None`` when none exists.
    """
    n = as_rational(n)
    if n <= 0:
        raise ValueError("target n must be positive")
    _check_scale(family, max_total, max_colors)
    h = family.hypergraph
    w = w or unit_weights(h)
    w.check(h)
    colors = family.colors
    m = len(colors)
    pool = [()] * (m + 1)
    for i in range(m - 1, -1, -1):
        pool[i] = tuple(sorted(set(colors[i]) | set(pool[i + 1])))

    values: dict = {}

    def nu(es):
        v = values.get(es)
        if v is None:
            v = values[es] = nu_value(h, es, w)
        return v

    barren = set()

    def rec(i, chosen, assign):
        if nu(chosen) >= n:
            return assign
        if i == m or (i, chosen) in barren:
            return None
        if prune and nu(tuple(sorted(set(chosen) | set(pool[i])))) < n:
            barren.add((i, chosen))
            return None
        for e in colors[i]:
            if e in chosen:
                continue
            found = rec(i + 1, tuple(sorted(chosen + (e,))), assign + ((i, e),))
            if found is not None:
                return found
        found = rec(i + 1, chosen, assign)
        if found is None:
            barren.add((i, chosen))
        return found

    assign = rec(0, (), ())
    if assign is None:
        return None
    res = nu_star(h, [e for _, e in assign], w)
    cert = RainbowCertificate(assign, res.primal, n)
    verdict = verify_certificate(family, n, w, cert)
    if not verdict:
        raise RuntimeError(f"search produced an invalid certificate: {verdict.reason}")
    return cert


def verify_certificate(family: ColoredFamily, n, w: WeightSystem | None, cert: RainbowCertificate) -> Verdict:
    """Check a rainbow fractional matching certificate in exact arithmetic."""
    n = as_rational(n)
    h = family.hypergraph
    w = w or unit_weights(h)
    used_colors, used_edges = set(), set()
    for k, (c, e) in enumerate(cert.assignment):
        if not 0 <= c < len(family):
            return Verdict(False, "unknown color", k)
        if c in used_colors:
            return Verdict(False, "color reused", k)
        if e in used_edges:
            return Verdict(False, "edge reused", k)
        if e not in family.colors[c]:
            return Verdict(False, "edge not in color", k)
        used_colors.add(c)
        used_edges.add(e)
    f = cert.matching.values
    reason = check_matching(h, w, f, used_edges)
    if reason:
        return Verdict(False, reason)
    size = sum((w.a[e] * x for e, x in f.items()), Fraction(0))
    if size != cert.matching.size:
        return Verdict(False, "size mismatch")
    if size < n:
        return Verdict(False, "size below target")
    return Verdict(True)


def find_rainbow_integral(
    family: ColoredFamily,
    n: int,
    *,
    max_total: int = MAX_TOTAL,
    max_colors: int = MAX_COLORS,
) -> IntegralRainbowCertificate | None:
    """Find ``n`` pairwise disjoint edges taken from ``n`` distinct colors."""
    n = int(n)
    _check_scale(family, max_total, max_colors)
    h = family.hypergraph
    colors = family.colors
    m = len(colors)
    barren = set()

    def rec(i, used, assign):
        if len(assign) >= n:
            return assign
        if i == m or len(assign) + (m - i) < n or (i, used) in barren:
            return None
        for e in colors[i]:
            if used.isdisjoint(h.edges[e]):
                found = rec(i + 1, used | frozenset(h.edges[e]), assign + ((i, e),))
                if found is not None:
                    return found
        found = rec(i + 1, used, assign)
        if found is None:
            barren.add((i, used))
        return found

    assign = rec(0, frozenset(), ())
    if assign is None:
        return None
    cert = IntegralRainbowCertificate(assign, n)
    verdict = verify_integral_certificate(family, n, cert)
    if not verdict:
        raise RuntimeError(f"search produced an invalid certificate: {verdict.reason}")
    return cert


def verify_integral_certificate(family: ColoredFamily, n: int, cert: IntegralRainbowCertificate) -> Verdict:
    h = family.hypergraph
    seen_colors, covered = set(), set()
    for k, (c, e) in enumerate(cert.assignment):
        if not 0 <= c < len(family):
            return Verdict(False, "unknown color", k)
        if c in seen_colors:
            return Verdict(False, "color reused", k)
        if e not in family.colors[c]:
            return Verdict(False, "edge not in color", k)
        if not covered.isdisjoint(h.edges[e]):
            return Verdict(False, "edges not disjoint", k)
        seen_colors.add(c)
        covered.update(h.edges[e])
    if len(cert.assignment) < n:
        return Verdict(False, "size below target")
    return Verdict(True)


def format_certificate(cert) -> str:
    lines = [f"target {format_rational(cert.target)}"]
    lines += [f"assign {c} {e}" for c, e in cert.assignment]
    if isinstance(cert, RainbowCertificate):
        lines += [f"f {e} {format_rational(x)}" for e, x in sorted(cert.matching.values.items())]
        lines.append(f"size {format_rational(cert.matching.size)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str):
    """Inverse of :func:`format_certificate`."""
    target = None
    assign, f = [], {}
    size = None
    for line in text.splitlines():
        tok = line.split()
        if not tok or tok[0].startswith("%") or tok[0] in ("FOUND", "ABSENT"):
            continue
        if tok[0] == "target":
            target = as_rational(tok[1])
        elif tok[0] == "assign":
            assign.append((int(tok[1]), int(tok[2])))
        elif tok[0] == "f":
            f[int(tok[1])] = as_rational(tok[2])
        elif tok[0] == "size":
            size = as_rational(tok[1])
        else:
            raise ValueError(f"unexpected certificate line {line!r}")
    if target is None:
        raise ValueError("certificate lacks a target line")
    if size is None:
        return IntegralRainbowCertificate(tuple(assign), int(target))
    return RainbowCertificate(tuple(assign), FractionalMatching(f, size), target)
