"""Simplicial complexes of low fractional matching number and their collapses.

A complex is stored as its ground set plus the antichain of facets.  The
complex of interest is ::

    X_{a,b,n} = { E' ⊆ E : nu*_{a,b}(E') < n }

which is downward closed because ``nu*`` is monotone in ``E'``.
:func:`generate_collapse` removes, one elementary collapse at a time, the
inclusion-minimal face of largest ``nu*`` from such a complex, then tilts
the edge weights so that what is left is again a complex of the same kind
with a smaller threshold.  Every step is checked as it is produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .core import Hypergraph, InstanceError, ScaleError, Verdict, WeightSystem, as_rational, format_rational
from .lp import dual_is_unique, nu_value

MAX_ENUM = 15
MAX_FACES = 64


def label_key(x):
    if isinstance(x, tuple):
        return (1, tuple(label_key(y) for y in x))
    if isinstance(x, int):
        return (0, x)
    return (2, str(x))


def sorted_face(face) -> tuple:
    return tuple(sorted(face, key=label_key))


def _face_key(face):
    return tuple(label_key(x) for x in sorted_face(face))


def _antichain(faces) -> tuple:
    uniq = sorted({frozenset(f) for f in faces}, key=lambda f: -len(f))
    kept = []
    for f in uniq:
        if not any(f <= g for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=_face_key))


class SimplicialComplex:
    """Downward-closed family of subsets of ``ground``, kept as facets.

    ``SimplicialComplex(g, [set()])`` is the complex ``{∅}``;
    ``SimplicialComplex(g, [])`` is the void complex with no faces.
    """

    __slots__ = ("ground", "facets")

    def __init__(self, ground: Iterable, facets: Iterable):
        self.ground = frozenset(ground)
        self.facets = _antichain(facets)
        for f in self.facets:
            if not f <= self.ground:
                raise InstanceError(f"facet {sorted_face(f)} leaves the ground set")

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.ground == other.ground
            and set(self.facets) == set(other.facets)
        )

    def __hash__(self) -> int:
        return hash((self.ground, frozenset(self.facets)))

    def __repr__(self) -> str:
        fs = ", ".join("{" + ",".join(map(str, sorted_face(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(facets=[{fs}])"

    def is_trivial(self) -> bool:
        """True for ``{∅}``."""
        return self.facets == (frozenset(),)

    def is_void(self) -> bool:
        return not self.facets

    def facets_containing(self, face) -> list:
        face = frozenset(face)
        return [f for f in self.facets if face <= f]

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            items = sorted_face(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def face_count(self) -> int:
        return len(self.faces())

    def remove_star(self, sigma) -> "SimplicialComplex":
        """Delete ``sigma`` and every face containing it (no legality checks)."""
        sigma = frozenset(sigma)
        new = []
        for f in self.facets:
            if sigma <= f:
                new.extend(f - {x} for x in sigma)
            else:
                new.append(f)
        return SimplicialComplex(self.ground, new)

    def restrict(self, labels) -> "SimplicialComplex":
        labels = frozenset(labels)
        return SimplicialComplex(self.ground & labels, [f & labels for f in self.facets])

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex(
            [mapping[x] for x in self.ground], [[mapping[x] for x in f] for f in self.facets]
        )

    def minimal_nonfaces(self) -> tuple:
        """Inclusion-minimal subsets of the ground set that are not faces."""
        out = set()
        ground = sorted_face(self.ground)
        for face in self.faces():
            for x in ground:
                if x in face:
                    continue
                cand = face | {x}
                if cand in self or cand in out:
                    continue
                if all((cand - {y}) in self for y in face):
                    out.add(cand)
        return tuple(sorted(out, key=_face_key))


def full_simplex(ground) -> SimplicialComplex:
    return SimplicialComplex(ground, [ground])


def boundary_complex(ground) -> SimplicialComplex:
    g = list(ground)
    return SimplicialComplex(g, [set(g) - {x} for x in g])


class _Nu:
    """Memoized ``nu*`` for one weight system."""

    def __init__(self, h: Hypergraph, w: WeightSystem):
        self.h, self.w = h, w
        self.cache: dict = {}

    def __call__(self, edges) -> Fraction:
        key = tuple(sorted(edges))
        v = self.cache.get(key)
        if v is None:
            v = self.cache[key] = nu_value(self.h, key, self.w)
        return v


def _ground(h: Hypergraph, E) -> tuple:
    E = tuple(sorted(set(int(e) for e in E)))
    for e in E:
        if not 0 <= e < len(h.edges):
            raise InstanceError(f"edge index {e} out of range")
    return E


def build_nu_complex(h: Hypergraph, E, w: WeightSystem, n, *, max_enum: int = MAX_ENUM, nu=None) -> SimplicialComplex:
    """Facets of ``{E' ⊆ E : nu*_{a,b}(E') < n}``.

    Members are enumerated upward from ``∅``, extending only by larger
    edge indices, so each member is solved once.
    """
    E = _ground(h, E)
    if len(E) > max_enum:
        raise ScaleError(f"|E| = {len(E)} exceeds enumeration cap {max_enum}")
    n = as_rational(n)
    w.check(h)
    nu = nu or _Nu(h, w)
    if nu(()) >= n:
        return SimplicialComplex(E, [])
    members = {()}
    stack = [()]
    while stack:
        s = stack.pop()
        start = E.index(s[-1]) + 1 if s else 0
        for e in E[start:]:
            t = s + (e,)
            if nu(t) < n:
                members.add(t)
                stack.append(t)
    facets = []
    for s in members:
        ss = set(s)
        if not any(tuple(sorted(ss | {e})) in members for e in E if e not in ss):
            facets.append(s)
    return SimplicialComplex(E, facets)


def complex_matches(X: SimplicialComplex, nu, n) -> bool:
    """Whether ``X == {E' : nu(E') < n}`` for a monotone ``nu``.

    Two downward-closed families agree iff each facet of one is a member of
    the other and each minimal non-face is not.
    """
    if X.is_void():
        return nu(()) >= n
    return all(nu(f) < n for f in X.facets) and all(nu(s) >= n for s in X.minimal_nonfaces())


# --- collapse sequences ----------------------------------------------------


@dataclass(frozen=True)
class CollapseStep:
    sigma: frozenset
    facet: frozenset

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        object.__setattr__(self, "facet", frozenset(self.facet))


@dataclass(frozen=True)
class CollapseSequence:
    d: int
    steps: tuple = ()

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class IterationRecord:
    threshold: Fraction  # the complex removed from is {E' : nu*_{a,b} < threshold}
    nbar: Fraction
    ebar: tuple
    eplus: tuple
    a: tuple
    b: tuple
    bound: int  # per-iteration size bound on ebar
    eps: Fraction | None = None
    a_next: tuple | None = None
    eta: Fraction = Fraction(0)


@dataclass(frozen=True)
class CollapseTrace:
    mode: str
    d: int
    records: tuple = field(default=())


class CollapseError(RuntimeError):
    """A proof step failed at runtime; carries the partial trace."""

    def __init__(self, message: str, trace: CollapseTrace | None = None):
        super().__init__(message)
        self.trace = trace


def _ceil_bound(r, n, amin, bmin) -> int:
    return math.ceil(r * n / (amin * bmin)) - 1


def _floor_bound(r, n, amin, bmin) -> int:
    return r * math.floor(n / (amin * bmin))


def _dyadic_below(x: Fraction) -> Fraction:
    """Largest power of two not exceeding ``x > 0``."""
    k = x.denominator.bit_length() - x.numerator.bit_length()
    p = Fraction(1, 2**k) if k >= 0 else Fraction(2 ** (-k))
    while p > x:
        p /= 2
    while p * 2 <= x:
        p *= 2
    return p


def _perturb(b, eta):
    if eta == 0:
        return tuple(b)
    # powers of eta: b(eta).d is a nonzero polynomial for any edge direction d
    # of the cover polyhedron, so only finitely many eta are degenerate
    return tuple(x * (1 + eta ** (v + 1)) for v, x in enumerate(b))


def _pick_ebar(X: SimplicialComplex, nu, nbar):
    tops = [f for f in X.facets if nu(f) == nbar]
    for k in range(1, max(len(f) for f in tops) + 1):
        cands = sorted({c for f in tops for c in combinations(sorted(f), k)})
        for c in cands:
            if nu(c) == nbar:
                return c
    raise CollapseError("no attainer of the maximum found")


def generate_collapse(
    h: Hypergraph,
    E,
    w: WeightSystem,
    n,
    mode: str = "general",
    *,
    max_enum: int = MAX_ENUM,
    retries: int = 48,
):
    """Collapse ``X_{a,b,n}`` to ``{∅}`` and return ``(sequence, trace)``.

    ``d`` is ``ceil(r n / (a_min b_min)) - 1`` in general mode.  In partite
    mode (``h`` must carry a partition) it is ``r * floor(nbar / (a_min
    b_min))`` with ``nbar`` the largest ``nu*`` over ``X``.

    Each iteration:

    * if the optimal cover of the chosen face is not unique, scale vertex
      weights up by ``1 + eta**(v + 1)``, halving ``eta`` until the cover is
      unique and ``X`` is unchanged;
    * take ``nbar`` = max ``nu*`` over ``X`` and ``ebar`` the smallest
      (then lexicographically first) face attaining it;
    * check that ``ebar`` lies in exactly one facet, namely
      ``ebar ∪ {e : ebar + e ∈ X}``, and that ``|ebar| <= d``;
    * collapse, then lower the weight of every edge outside ``ebar`` by
      ``eps``, halving ``eps`` until the remainder is exactly
      ``{E' : nu*_{a',b} < nbar}`` and the degree bound still holds.

    ``eta`` and ``eps`` are always powers of two, which keeps the
    denominators of the tilted weights short over long runs.
    """
    if mode not in ("general", "partite"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "partite" and h.partition is None:
        raise InstanceError("partite mode needs a hypergraph with a partition")
    E = _ground(h, E)
    n = as_rational(n)
    w.check(h)
    r = h.r
    a, b = tuple(w.a), tuple(w.b)
    ground_set = frozenset(E)

    if not E:
        return CollapseSequence(0, ()), CollapseTrace(mode, 0, ())
    amin, bmin = min(a[e] for e in E), min(b)
    nu0 = _Nu(h, WeightSystem(a, b))
    X = build_nu_complex(h, E, WeightSystem(a, b), n, max_enum=max_enum, nu=nu0)
    if mode == "general":
        d = max(_ceil_bound(r, n, amin, bmin), 0)
    else:
        d = 0 if X.is_trivial() else _floor_bound(r, max(nu0(f) for f in X.facets), amin, bmin)
    if n <= amin * bmin or X.is_trivial():
        return CollapseSequence(d, ()), CollapseTrace(mode, d, ())

    records, steps = [], []
    threshold = n
    prev_bound = d
    nonfaces = X.minimal_nonfaces()

    def fail(msg):
        raise CollapseError(msg, CollapseTrace(mode, d, tuple(records)))

    while True:
        amin = min(a[e] for e in E)
        # choose a vertex-weight perturbation making the chosen cover unique
        eta = Fraction(0)
        first_eta = _dyadic_below(min(Fraction(1, 2), (threshold - max(nu0(f) for f in X.facets)) / (4 * threshold)))
        for attempt in range(retries + 1):
            bp = _perturb(b, eta)
            wp = WeightSystem(a, bp)
            nu = nu0 if eta == 0 else _Nu(h, wp)
            if eta:
                ok = all(nu(f) < threshold for f in X.facets) and all(nu(s) >= threshold for s in nonfaces)
            else:
                ok = True
            if ok:
                nbar = max(nu(f) for f in X.facets)
                bmin_p = min(bp)
                if mode == "general":
                    bound = _ceil_bound(r, threshold, amin, bmin_p)
                else:
                    bound = _floor_bound(r, nbar, amin, bmin_p)
                ok = bound <= prev_bound
            if ok:
                ebar = _pick_ebar(X, nu, nbar)
                ok = len(ebar) <= bound and dual_is_unique(h, ebar, wp)[0]
            if ok:
                break
            eta = first_eta if eta == 0 else eta / 2
        else:
            fail("dual-uniqueness perturbation failed")
        b, nu0 = bp, nu

        # the chosen face lies in exactly one facet
        ebar_set = frozenset(ebar)
        eplus = tuple(e for e in E if e not in ebar_set and (ebar_set | {e}) in X)
        facet = ebar_set | frozenset(eplus)
        containing = X.facets_containing(ebar_set)
        if containing != [facet]:
            fail(f"face {ebar} is not in a unique facet ({len(containing)} contain it)")
        if len(ebar) > d:
            fail(f"face {ebar} has size {len(ebar)} > d = {d}")
        steps.append(CollapseStep(ebar_set, facet))
        Xh = X.remove_star(ebar_set)
        rec = dict(threshold=threshold, nbar=nbar, ebar=ebar, eplus=eplus, a=a, b=b, bound=bound, eta=eta)
        if Xh.is_trivial():
            records.append(IterationRecord(**rec))
            break

        # new minimal non-faces: ebar plus the old ones not containing it
        nonfaces_h = tuple(s for s in nonfaces if not ebar_set <= s) + (ebar_set,)
        others = [e for e in E if e not in ebar_set]
        eps = _dyadic_below((threshold - nbar) / (2 * len(E)))
        for attempt in range(retries + 1):
            while others and eps >= min(a[e] for e in others):
                eps /= 2
            ah = tuple(x - eps if (i in ground_set and i not in ebar_set) else x for i, x in enumerate(a))
            nuh = _Nu(h, WeightSystem(ah, b))
            amin_h = min(ah[e] for e in E)
            ok = nbar > amin_h * min(b)
            ok = ok and all(nuh(f) < nbar for f in Xh.facets) and all(nuh(s) >= nbar for s in nonfaces_h)
            if ok and mode == "general":
                ok = _ceil_bound(r, nbar, amin_h, min(b)) <= d
            elif ok:
                ok = _floor_bound(r, max(nuh(f) for f in Xh.facets), amin_h, min(b)) <= bound
            if ok:
                break
            eps /= 2
        else:
            fail("eps refinement failed")
        records.append(IterationRecord(**rec, eps=eps, a_next=ah))
        a, nu0, threshold, X, nonfaces = ah, nuh, nbar, Xh, nonfaces_h
        prev_bound = bound if mode == "partite" else d

    trace = CollapseTrace(mode, d, tuple(records))
    seq = CollapseSequence(d, tuple(steps))
    X0 = build_nu_complex(h, E, w, n, max_enum=max_enum)
    verdict = verify_collapse(X0, seq)
    if not verdict:
        fail(f"generated sequence fails verification at step {verdict.index}: {verdict.reason}")
    return seq, trace


def verify_collapse(X: SimplicialComplex, seq: CollapseSequence) -> Verdict:
    """Replay ``seq`` on ``X``; each step must be a legal elementary
    ``d``-collapse and the replay must end at ``{∅}``."""
    cur = X
    for i, step in enumerate(seq.steps):
        sigma = step.sigma
        if not sigma:
            return Verdict(False, "empty face", i)
        if len(sigma) > seq.d:
            return Verdict(False, f"face of size {len(sigma)} exceeds d = {seq.d}", i)
        containing = cur.facets_containing(sigma)
        if not containing:
            return Verdict(False, "not a face of the current complex", i)
        if len(containing) > 1:
            return Verdict(False, f"face lies in {len(containing)} facets", i)
        if containing[0] != step.facet:
            return Verdict(False, "stated facet is not the containing facet", i)
        cur = cur.remove_star(sigma)
    if not cur.is_trivial():
        return Verdict(False, "sequence does not end at {∅}", len(seq.steps))
    return Verdict(True)


def replay(X: SimplicialComplex, seq: CollapseSequence) -> list:
    """Intermediate complexes ``X_0, X_1, ..., X_m`` (no legality checks)."""
    out = [X]
    for step in seq.steps:
        out.append(out[-1].remove_star(step.sigma))
    return out


def _free_faces(facets, d):
    seen = set()
    for f in facets:
        items = sorted_face(f)
        for k in range(1, min(d, len(items)) + 1):
            for c in combinations(items, k):
                s = frozenset(c)
                if s in seen:
                    continue
                seen.add(s)
                if sum(1 for g in facets if s <= g) == 1:
                    yield s, f


def find_collapse(X: SimplicialComplex, d: int, *, max_faces: int = MAX_FACES) -> CollapseSequence | None:
    """Exhaustive search for a ``d``-collapse of ``X`` to ``{∅}``.

    Complex states are memoized, so every reachable state is expanded at
    most once.
    """
    if X.is_void():
        return None
    count = X.face_count()
    if count > max_faces:
        raise ScaleError(f"{count} faces exceed the brute-force cap {max_faces}")
    dead = set()

    def rec(cur):
        if cur.is_trivial():
            return []
        key = frozenset(cur.facets)
        if key in dead:
            return None
        for s, f in _free_faces(cur.facets, d):
            tail = rec(cur.remove_star(s))
            if tail is not None:
                return [CollapseStep(s, f)] + tail
        dead.add(key)
        return None

    steps = rec(X)
    return None if steps is None else CollapseSequence(d, tuple(steps))


def brute_force_collapsible(X: SimplicialComplex, d: int, *, max_faces: int = MAX_FACES) -> bool:
    return find_collapse(X, d, max_faces=max_faces) is not None


# --- blow-ups ---------------------------------------------------------------


def _mult(multiplicities, x) -> int:
    k = int(multiplicities.get(x, 1))
    if k < 1:
        raise InstanceError(f"multiplicity of {x!r} must be >= 1")
    return k


def blow_up_complex(X: SimplicialComplex, multiplicities) -> SimplicialComplex:
    """Replace each ground element ``x`` by clones ``(x, 1..k_x)``.

    A set of clones is a face iff its projection is a face of ``X``.
    """
    ks = {x: _mult(multiplicities, x) for x in X.ground}
    ground = [(x, i) for x in X.ground for i in range(1, ks[x] + 1)]
    facets = [[(x, i) for x in f for i in range(1, ks[x] + 1)] for f in X.facets]
    return SimplicialComplex(ground, facets)


def _double(steps, u, clone):
    out = []
    for st in steps:
        facet = st.facet | {clone} if u in st.facet else st.facet
        out.append(CollapseStep(st.sigma, facet))
        if u in st.sigma:
            out.append(CollapseStep((st.sigma - {u}) | {clone}, (st.facet - {u}) | {clone}))
    return out


def blow_up_sequence(seq: CollapseSequence, multiplicities) -> CollapseSequence:
    """Carry a collapse sequence over to the blown-up complex.

    Elements are relabelled ``x -> (x, 1)`` and each extra clone is added
    by one doubling: a step whose face contains ``u`` becomes the step
    itself followed by the same step with ``u`` swapped for the clone.
    """
    labels = set()
    for st in seq.steps:
        labels |= st.facet
    labels |= set(multiplicities)
    steps = [CollapseStep({(x, 1) for x in st.sigma}, {(x, 1) for x in st.facet}) for st in seq.steps]
    for x in sorted(labels, key=label_key):
        for i in range(2, _mult(multiplicities, x) + 1):
            steps = _double(steps, (x, 1), (x, i))
    return CollapseSequence(seq.d, tuple(steps))


# --- text formats -----------------------------------------------------------


def label_text(x) -> str:
    if isinstance(x, tuple):
        return ":".join(label_text(y) for y in x)
    return str(x)


def parse_label(tok: str):
    parts = tok.split(":")

    def atom(s):
        try:
            return int(s)
        except ValueError:
            return s

    lab = atom(parts[0])
    for p in parts[1:]:
        lab = (lab, int(p))
    return lab


def face_text(face) -> str:
    return ",".join(label_text(x) for x in sorted_face(face)) or "-"


def parse_face(tok: str) -> frozenset:
    if tok == "-":
        return frozenset()
    return frozenset(parse_label(t) for t in tok.split(","))


def format_complex(X: SimplicialComplex) -> str:
    lines = [f"ground {face_text(X.ground)}"]
    lines += [f"facet {face_text(f)}" for f in X.facets]
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    ground, facets = None, []
    for line in text.splitlines():
        tok = line.split()
        if not tok or tok[0].startswith("%"):
            continue
        if tok[0] == "ground":
            ground = parse_face(tok[1]) if len(tok) > 1 else frozenset()
        elif tok[0] == "facet":
            facets.append(parse_face(tok[1]) if len(tok) > 1 else frozenset())
    if ground is None:
        raise InstanceError("complex file lacks a 'ground' line")
    return SimplicialComplex(ground, facets)


def format_sequence(seq: CollapseSequence) -> str:
    return "".join(f"step {seq.d} sigma {face_text(st.sigma)} facet {face_text(st.facet)}\n" for st in seq.steps)


def parse_sequence(text: str, d: int | None = None) -> CollapseSequence:
    steps = []
    for line in text.splitlines():
        tok = line.split()
        if not tok or tok[0] != "step":
            continue
        if len(tok) != 6 or tok[2] != "sigma" or tok[4] != "facet":
            raise InstanceError(f"bad step line {line!r}")
        dd = int(tok[1])
        if d is None:
            d = dd
        elif dd != d:
            raise InstanceError("steps disagree on d")
        steps.append(CollapseStep(parse_face(tok[3]), parse_face(tok[5])))
    return CollapseSequence(0 if d is None else d, tuple(steps))


def format_trace(trace: CollapseTrace) -> str:
    out = []
    for t, rec in enumerate(trace.records):
        eps = "-" if rec.eps is None else format_rational(rec.eps)
        out.append(f"iter {t} nbar {format_rational(rec.nbar)} ebar {face_text(rec.ebar)} eps {eps}\n")
    return "".join(out)
