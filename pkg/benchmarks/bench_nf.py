"""Compare the compiled and interpreted normalization kernels.

Two workloads:

* ``laws``: lambda images of random arrows, the shape of term every equality
  check normalizes;
* ``iterate``: a Church-style iterator applying a pair swap 2**k times, where
  evaluation dominates and the normal form stays small.

Run with ``python benchmarks/bench_nf.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from freeccc import parse_signature
from freeccc.generate import TermGenerator
from freeccc.lam import Abs, App, Fst, PairT, Snd, Var
from freeccc.normal_form import KERNELS, nf, to_lambda
from freeccc.syntax import Atom, Exp, Prod

SIGNATURE = """
object D A B C
arrow f : A |- B
arrow g : B |- C
arrow h : D*A |- B
indeterminate x : T |- D
"""


def law_terms(n: int = 400, depth: int = 4):
    sig = parse_signature(SIGNATURE)
    out = []
    for seed in range(n):
        gen = TermGenerator(sig, random.Random(seed), poly=True)
        out.append(to_lambda(gen.random_arrow(depth), sig))
    return out


def iterate_term(k: int):
    """``\\z. twice^k (swap) z`` at type ``A*A -> A*A``."""
    a = Atom("A")
    x = Prod(a, a)
    fx = Exp(x, x)
    # levels: 0 = z; inside ``twice`` the binder is at level d
    def swap(d):
        return Abs(x, PairT(Snd(Var(d)), Fst(Var(d))))

    def twice(d):
        # \s. \y. s (s y)
        return Abs(fx, Abs(x, App(Var(d), App(Var(d), Var(d + 1)))))

    body = swap(1)
    for _ in range(k):
        body = App(twice(1), body)
    return Abs(x, App(body, Var(0)))


def run(kernel: str, terms, repeat: int) -> float:
    return min(timeit.repeat(lambda: [nf(t, kernel) for t in terms], number=1, repeat=repeat))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--k", type=int, default=16, help="iterate 2**k times")
    args = parser.parse_args(argv)
    if "cython" not in KERNELS:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    workloads = {"laws": law_terms(), "iterate": [iterate_term(args.k)]}
    for name, terms in workloads.items():
        assert all(nf(t, "python") == nf(t, "cython") for t in terms)
        py = run("python", terms, args.repeat)
        cy = run("cython", terms, args.repeat)
        print(f"{name:8s} python {py * 1e3:9.1f} ms   cython {cy * 1e3:9.1f} ms   speedup {py / cy:5.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
