"""Command-line interface.

Subcommands:
  verify  scan claims over prime/index ranges and emit reports
  det     exact determinant of one matrix family (optionally a residue)
  hankel  exact Hankel determinant of a named sequence
  unit    fundamental unit and class-number data for one prime
  claims  list the claim registry
  bench   compare the compiled and pure-Python kernels

Exit codes: 0 normally (conjecture counterexamples are reported, not errors),
2 when a theorem-grade claim fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import gallery, sequences
from .arith import OddPrime, legendre_symbol
from .claims import REGISTRY
from .matrix import determinant
from .quadfields import ap_bp, class_number_real, fundamental_unit, rp_sp
from .scan import ScanConfig, scan


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    if not hi:
        raise argparse.ArgumentTypeError("range must look like LO..HI")
    return int(lo), int(hi)


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def cmd_verify(args) -> int:
    try:
        cfg = ScanConfig(claims=args.claims, primes=args.primes, indices=args.indices,
                         jobs=args.jobs, fmt=args.format, out=args.out)
        if args.out:
            with open(args.out, "w", newline="") as fh:
                summary = scan(cfg, fh, verbose=args.verbose)
        else:
            summary = scan(cfg, sys.stdout, verbose=args.verbose)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if summary.counterexamples:
        print(f"COUNTEREXAMPLE(S): {len(summary.counterexamples)} "
              "(see report output)", file=sys.stderr)
    if summary.theorem_failures:
        print(f"theorem-grade failures: {len(summary.theorem_failures)}", file=sys.stderr)
    return summary.exit_code()


def cmd_det(args) -> int:
    try:
        builder, required, _optional = gallery.FAMILIES[args.family]
    except KeyError:
        print(f"unknown family {args.family!r}; choices: {', '.join(sorted(gallery.FAMILIES))}",
              file=sys.stderr)
        return 1
    for name in required:
        if getattr(args, name) is None:
            print(f"family {args.family!r} requires --{name}", file=sys.stderr)
            return 1
    m = builder(args.p, args.d, args.c)
    res = determinant(m, method=args.method)
    print(f"family={args.family} p={args.p} size={m.rows}x{m.cols} "
          f"index_base={m.index_base} method={res.method}")
    print(f"det = {_fmt_value(res.value)}")
    if args.mod is not None:
        r = determinant(m, modulus=args.mod)
        print(f"det mod {args.mod} = {r.value}")
    return 0


def cmd_hankel(args) -> int:
    m = sequences.hankel(args.seq, args.n, "square" if args.square else "id",
                         m=args.m, r=args.r)
    res = determinant(m)
    print(f"seq={args.seq} n={args.n} size={m.rows}x{m.cols}"
          f"{' (squared terms)' if args.square else ''}")
    print(f"det = {_fmt_value(res.value)}")
    return 0


def cmd_unit(args) -> int:
    p = int(OddPrime(args.p))
    eps = fundamental_unit(p)
    h = class_number_real(p)
    a_p, b_p = ap_bp(p)
    r_p, s_p = rp_sp(p)
    print(f"p = {p}")
    print(f"eps_p = {eps}   (norm {_fmt_value(eps.norm())})")
    print(f"h(p) = {h}")
    print(f"a_p = {_fmt_value(a_p)}   b_p = {_fmt_value(b_p)}")
    print(f"r_p = {r_p}   s_p = {s_p}   "
          f"(exponent (2-(2/p))h(p) = {(2 - legendre_symbol(2, p)) * h})")
    return 0


def cmd_claims(args) -> int:
    for claim in REGISTRY.values():
        eqs = ",".join(claim.eqs) or "-"
        print(f"{claim.id:<26} {claim.grade:<16} {claim.kind:<7} eqs={eqs:<16} {claim.doc}")
    print(f"{len(REGISTRY)} claims")
    return 0


def cmd_bench(args) -> int:
    from .bench import run_bench

    return run_bench(sizes=args.sizes, reps=args.reps)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="legdet", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="scan claims over prime/index ranges")
    v.add_argument("--claims", default="*",
                   help="comma-separated claim ids or globs (default: all)")
    v.add_argument("--primes", type=_parse_range, default=None, metavar="LO..HI")
    v.add_argument("--indices", type=_parse_range, default=(0, 12), metavar="LO..HI")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--out", default=None, help="output path (default: stdout)")
    v.add_argument("--verbose", action="store_true", help="text format: print every report")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("det", help="exact determinant of one matrix family")
    d.add_argument("--family", required=True)
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--d", type=int, default=None)
    d.add_argument("--c", type=int, default=None)
    d.add_argument("--mod", type=int, default=None)
    d.add_argument("--method", choices=("auto", "fraction-free", "multi-modular"),
                   default="auto")
    d.set_defaults(func=cmd_det)

    h = sub.add_parser("hankel", help="exact Hankel determinant of a sequence")
    h.add_argument("--seq", required=True, choices=sorted(sequences.TAGS))
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--m", type=int, default=1, help="harmonic order")
    h.add_argument("--r", type=int, default=2, help="Franel order")
    h.add_argument("--square", action="store_true", help="square the terms first")
    h.set_defaults(func=cmd_hankel)

    u = sub.add_parser("unit", help="fundamental unit and class-number data")
    u.add_argument("--p", type=int, required=True)
    u.set_defaults(func=cmd_unit)

    c = sub.add_parser("claims", help="list the claim registry")
    c.set_defaults(func=cmd_claims)

    b = sub.add_parser("bench", help="compare compiled vs pure kernels")
    b.add_argument("--sizes", default="16,32,64,96")
    b.add_argument("--reps", type=int, default=3)
    b.set_defaults(func=cmd_bench)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
