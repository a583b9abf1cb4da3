"""Command-line entry point.

Exit codes: 0 success or EQUAL, 1 NOT-EQUAL or failing selftest, 2 user
error (bad input, parse or type error), 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import completeness, poly
from .errors import CCCError
from .generate import GenConfig
from .lam import is_normal
from .laws import law_suite
from .normal_form import arrows_equal, normal_form, simplify
from .syntax import type_of
from .text import parse_arrow, parse_signature, print_arrow, show

EXIT_OK, EXIT_DIFFERENT, EXIT_USER, EXIT_INTERNAL = 0, 1, 2, 3


class InvariantBreach(RuntimeError):
    pass


def _load_sig(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_signature(text)


def _nf(term, sig):
    out = normal_form(term, sig)
    if not is_normal(out):
        raise InvariantBreach(f"normalizer returned a non-normal term: {show(out)}")
    return out


def _emit(term, sig, simplified: bool):
    if simplified:
        term = simplify(term, sig)
    print(print_arrow(term))
    print(f"type: {type_of(term, sig)}")


def cmd_check_eq(args) -> int:
    sig = _load_sig(args.signature)
    f, g = parse_arrow(args.left, sig), parse_arrow(args.right, sig)
    equal = arrows_equal(f, g, sig)
    nf_f, nf_g = _nf(f, sig), _nf(g, sig)
    if equal != (nf_f == nf_g):
        raise InvariantBreach("equality verdict disagrees with the normal forms")
    print("EQUAL" if equal else "NOT-EQUAL")
    print(f"nf1: {show(nf_f)}")
    print(f"nf2: {show(nf_g)}")
    return EXIT_OK if equal else EXIT_DIFFERENT


def cmd_normalize(args) -> int:
    sig = _load_sig(args.signature)
    f = parse_arrow(args.term, sig)
    print(f"nf: {show(_nf(f, sig))}")
    simple = simplify(f, sig)
    if not arrows_equal(simple, f, sig):
        raise InvariantBreach("simplified arrow is not equal to its input")
    print(f"arrow: {print_arrow(simple)}")
    print(f"type: {type_of(f, sig)}")
    return EXIT_OK


def cmd_abstract(args) -> int:
    sig = _load_sig(args.signature)
    f = parse_arrow(args.term, sig)
    out = completeness.gamma_double(f, sig) if args.right else completeness.phi_prime(f, sig)
    _emit(out, sig, args.simplify)
    return EXIT_OK


def cmd_apply(args) -> int:
    sig = _load_sig(args.signature)
    f = parse_arrow(args.term, sig)
    out = completeness.phi_double(f, sig) if args.right else completeness.gamma_prime(f, sig)
    _emit(out, sig, args.simplify)
    return EXIT_OK


def cmd_instantiate(args) -> int:
    sig = _load_sig(args.signature)
    f, point = parse_arrow(args.term, sig), parse_arrow(args.point, sig)
    _emit(poly.instantiate(f, point, sig), sig, args.simplify)
    return EXIT_OK


def cmd_typeof(args) -> int:
    sig = _load_sig(args.signature)
    print(type_of(parse_arrow(args.term, sig), sig))
    return EXIT_OK


def cmd_selftest(args) -> int:
    sig = _load_sig(args.signature)
    cfg = GenConfig(max_depth=args.depth, case_count=args.cases, seed=args.seed)
    report = law_suite(sig, cfg)
    for r in report.results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.failures}/{r.cases} failures)")
    if args.report:
        Path(args.report).write_text(report.to_text(), encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freeccc", description="Decide equality in free cartesian closed categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-eq", help="decide whether two arrows are equal")
    p.add_argument("signature")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_check_eq)

    p = sub.add_parser("normalize", help="print the normal form of an arrow")
    p.add_argument("signature")
    p.add_argument("term")
    p.set_defaults(run=cmd_normalize)

    for name, run, what in (
        ("abstract", cmd_abstract, "abstract the indeterminate (--left: D*A |- B, --right: A |- D->B)"),
        ("apply", cmd_apply, "apply to the indeterminate (--left: from D*A |- B, --right: from A |- D->B)"),
    ):
        p = sub.add_parser(name, help=what)
        side = p.add_mutually_exclusive_group(required=True)
        side.add_argument("--left", action="store_true")
        side.add_argument("--right", action="store_true")
        p.add_argument("--simplify", action="store_true", help="print a simplified equal arrow instead")
        p.add_argument("signature")
        p.add_argument("term")
        p.set_defaults(run=run)

    p = sub.add_parser("instantiate", help="substitute a point T |- D for the indeterminate")
    p.add_argument("--simplify", action="store_true")
    p.add_argument("signature")
    p.add_argument("term")
    p.add_argument("point")
    p.set_defaults(run=cmd_instantiate)

    p = sub.add_parser("typeof", help="print the type of an arrow")
    p.add_argument("signature")
    p.add_argument("term")
    p.set_defaults(run=cmd_typeof)

    p = sub.add_parser("selftest", help="run the randomized law suite")
    p.add_argument("signature")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the structured report here")
    p.set_defaults(run=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (CCCError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except Exception as exc:  # anything else is a bug in this package
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
