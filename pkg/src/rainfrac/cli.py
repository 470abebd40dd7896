"""Command-line front end.

Exit codes: 0 when something was found, solved or verified; 1 when the
answer is negative (ABSENT, INVALID, no witness); 2 on bad input or when a
size cap is exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from pathlib import Path

from . import constructions
from .complex import (
    MAX_ENUM,
    CollapseError,
    blow_up_complex,
    blow_up_sequence,
    build_nu_complex,
    face_text,
    format_complex,
    format_sequence,
    format_trace,
    generate_collapse,
    parse_complex,
    parse_label,
    parse_sequence,
    verify_collapse,
)
from .core import InstanceError, ScaleError, as_rational, format_rational
from .instance import format_instance, from_family, read_instance
from .lp import nu_star, tau_star
from .matroid import ContainmentError, color_matroid, km_witness, labeled_complex
from .rainbow import (
    MAX_COLORS,
    MAX_TOTAL,
    IntegralRainbowCertificate,
    find_rainbow_fractional,
    find_rainbow_integral,
    format_certificate,
    parse_certificate,
    verify_certificate,
    verify_integral_certificate,
)


def _edges(inst, color):
    if color is None:
        return inst.family.union()
    return inst.color(color)


def _print_lp(res, out, first):
    f_lines = [f"f {e} {format_rational(x)}" for e, x in sorted(res.primal.values.items())]
    g_lines = [f"g {v} {format_rational(x)}" for v, x in sorted(res.dual.values.items())]
    if first == "nu":
        out.write(f"nu* {format_rational(res.value)}\n")
        out.write("".join(s + "\n" for s in f_lines + g_lines))
    else:
        out.write(f"tau* {format_rational(res.value)}\n")
        out.write("".join(s + "\n" for s in g_lines + f_lines))


def cmd_solve(args, out):
    inst = read_instance(args.file)
    edges = _edges(inst, args.color)
    h, w = inst.hypergraph, inst.weights
    if args.which in ("nu", "both"):
        _print_lp(nu_star(h, edges, w), out, "nu")
    if args.which in ("tau", "both"):
        _print_lp(tau_star(h, edges, w), out, "tau")
    return 0


def cmd_rainbow(args, out):
    inst = read_instance(args.file)
    fam, w = inst.family, inst.weights
    n = as_rational(args.n)
    if args.check:
        cert = parse_certificate(Path(args.check).read_text(encoding="utf-8"))
        if isinstance(cert, IntegralRainbowCertificate):
            raise InstanceError("expected a fractional certificate (with f and size lines)")
        verdict = verify_certificate(fam, n, w, cert)
    else:
        cert = find_rainbow_fractional(
            fam, n, w, prune=not args.no_prune, max_total=args.max_total, max_colors=args.max_colors
        )
        if cert is None:
            out.write("ABSENT\n")
            return 1
        out.write("FOUND\n" + format_certificate(cert))
        return 0
    return _report(verdict, out)


def cmd_rainbow_integral(args, out):
    inst = read_instance(args.file)
    fam = inst.family
    n = int(args.n)
    if args.check:
        cert = parse_certificate(Path(args.check).read_text(encoding="utf-8"))
        if not isinstance(cert, IntegralRainbowCertificate):
            cert = IntegralRainbowCertificate(cert.assignment, int(cert.target))
        return _report(verify_integral_certificate(fam, n, cert), out)
    cert = find_rainbow_integral(fam, n, max_total=args.max_total, max_colors=args.max_colors)
    if cert is None:
        out.write("ABSENT\n")
        return 1
    out.write("FOUND\n" + format_certificate(cert))
    return 0


def _report(verdict, out):
    if verdict:
        out.write("VALID\n")
        return 0
    where = "" if verdict.index is None else f" at {verdict.index}"
    out.write(f"INVALID{where}: {verdict.reason}\n")
    return 1


def cmd_complex(args, out):
    inst = read_instance(args.file)
    X = build_nu_complex(inst.hypergraph, _edges(inst, args.color), inst.weights, as_rational(args.n), max_enum=args.max_enum)
    out.write(format_complex(X))
    return 0


def cmd_collapse(args, out):
    inst = read_instance(args.file)
    seq, trace = generate_collapse(
        inst.hypergraph, _edges(inst, args.color), inst.weights, as_rational(args.n), args.mode, max_enum=args.max_enum
    )
    out.write(f"% d {seq.d}, {len(seq)} steps\n")
    out.write(format_sequence(seq))
    if args.trace:
        out.write(format_trace(trace))
    return 0


def cmd_verify_collapse(args, out):
    if args.complex:
        X = parse_complex(Path(args.complex).read_text(encoding="utf-8"))
    else:
        if args.file is None or args.n is None:
            raise InstanceError("give an instance file with --n, or --complex")
        inst = read_instance(args.file)
        X = build_nu_complex(inst.hypergraph, _edges(inst, args.color), inst.weights, as_rational(args.n), max_enum=args.max_enum)
    seq = parse_sequence(Path(args.seq).read_text(encoding="utf-8"))
    if args.d is not None:
        seq = dataclasses.replace(seq, d=args.d)
    return _report(verify_collapse(X, seq), out)


def parse_multiplicities(spec: str) -> dict:
    """``"0:2,3:3"`` -> ``{0: 2, 3: 3}``; the multiplicity follows the last colon."""
    mult = {}
    for item in filter(None, (s.strip() for s in spec.split(","))):
        label, sep, k = item.rpartition(":")
        if not sep or not label:
            raise InstanceError(f"bad multiplicity {item!r}; expected label:k")
        try:
            mult[parse_label(label)] = int(k)
        except ValueError:
            raise InstanceError(f"bad multiplicity {item!r}") from None
    return mult


def cmd_blow_up(args, out):
    X = parse_complex(Path(args.complex).read_text(encoding="utf-8"))
    mult = parse_multiplicities(args.mult)
    unknown = [x for x in mult if x not in X.ground]
    if unknown:
        raise InstanceError(f"multiplicity given for {unknown[0]!r}, which is not in the ground set")
    big = blow_up_complex(X, mult)
    out.write(format_complex(big))
    if args.seq:
        seq = parse_sequence(Path(args.seq).read_text(encoding="utf-8"))
        new = blow_up_sequence(seq, mult)
        out.write(format_sequence(new))
        verdict = verify_collapse(big, new)
        if not verdict:
            out.write(f"% transformed sequence INVALID at {verdict.index}: {verdict.reason}\n")
            return 1
    return 0


def cmd_km_witness(args, out):
    inst = read_instance(args.file)
    fam, w = inst.family, inst.weights
    n = as_rational(args.n)
    X = labeled_complex(fam, n, w, max_enum=args.max_enum)
    M = color_matroid(fam)
    d = args.d
    if d is None:
        d = max(math.ceil(inst.hypergraph.r * n / (w.a_min(fam.union()) * w.b_min())) - 1, 0)
    try:
        tau = km_witness(X, M, d)
    except ContainmentError as exc:
        out.write(f"NOT-CONTAINED {face_text(exc.independent_set)}\n")
        return 1
    if tau is None:
        out.write("ABSENT\n")
        return 1
    out.write(f"WITNESS {face_text(tau)}\n")
    out.write(f"complement-rank {M.rank(M.ground - tau)} d {d}\n")
    return 0


def cmd_generate(args, out):
    params = {}
    for key in constructions.GENERATORS.get(args.kind, ()):
        val = getattr(args, key)
        if val is None:
            raise InstanceError(f"generate {args.kind} needs --{key}")
        params[key] = val
    fam = constructions.build(args.kind, args.copies, **params)
    text = format_instance(from_family(fam))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainfrac", description="Rainbow fractional matchings in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_cmd(name, help_, n=True, color=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        if n:
            sp.add_argument("--n", required=True, help="target size p/q")
        if color:
            sp.add_argument("--color", type=int, help="restrict to one color")
        return sp

    sp = instance_cmd("solve", "fractional matching and cover numbers", n=False)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--nu", dest="which", action="store_const", const="nu")
    g.add_argument("--tau", dest="which", action="store_const", const="tau")
    g.add_argument("--both", dest="which", action="store_const", const="both")
    sp.set_defaults(func=cmd_solve, which="both")

    for name, func in (("rainbow", cmd_rainbow), ("rainbow-integral", cmd_rainbow_integral)):
        sp = instance_cmd(name, f"{name.replace('-', ' ')} matching search", color=False)
        sp.add_argument("--check", metavar="CERT", help="verify a certificate instead of searching")
        sp.add_argument("--max-total", type=int, default=MAX_TOTAL)
        sp.add_argument("--max-colors", type=int, default=MAX_COLORS)
        if name == "rainbow":
            sp.add_argument("--no-prune", action="store_true", help="disable LP-bound pruning")
        sp.set_defaults(func=func)

    sp = instance_cmd("complex", "facets of {E' : nu*(E') < n}")
    sp.add_argument("--max-enum", type=int, default=MAX_ENUM)
    sp.set_defaults(func=cmd_complex)

    sp = instance_cmd("collapse", "generate a verified collapse sequence")
    sp.add_argument("--mode", choices=("general", "partite"), default="general")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--max-enum", type=int, default=MAX_ENUM)
    sp.set_defaults(func=cmd_collapse)

    sp = sub.add_parser("verify-collapse", help="replay a collapse sequence")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--n")
    sp.add_argument("--color", type=int)
    sp.add_argument("--complex", metavar="CFILE")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--d", type=int, help="override the d recorded in the sequence")
    sp.add_argument("--max-enum", type=int, default=MAX_ENUM)
    sp.set_defaults(func=cmd_verify_collapse)

    sp = sub.add_parser("blow-up", help="clone ground elements of a complex")
    sp.add_argument("--complex", required=True, metavar="CFILE")
    sp.add_argument("--mult", required=True, help="comma-separated label:k")
    sp.add_argument("--seq", help="collapse sequence to carry over")
    sp.set_defaults(func=cmd_blow_up)

    sp = instance_cmd("km-witness", "face with small complement rank in the labelled complex", color=False)
    sp.add_argument("--d", type=int)
    sp.add_argument("--max-enum", type=int, default=MAX_ENUM)
    sp.set_defaults(func=cmd_km_witness)

    sp = sub.add_parser("generate", help="write a fixture family")
    sp.add_argument("kind", choices=sorted(constructions.GENERATORS))
    for key in ("n", "k", "q"):
        sp.add_argument(f"--{key}", type=int)
    sp.add_argument("--copies", type=int, help="number of colors, where adjustable")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (InstanceError, ScaleError, CollapseError, OSError, ValueError, KeyError) as exc:
        err.write(f"rainfrac {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
