import random

from hypothesis import given

from freeccc import Atom, Comp, Const, Id, Indet, Pair, Proj, T, Bang, Verdict, arrows_equal, oracle_equal
from freeccc.rewrite import random_rewrite, steps
from freeccc.syntax import size, type_of

from .conftest import arrow_from, seeds

A, B, C, D = (Atom(n) for n in "ABCD")


def test_identity_composite(sig):
    assert oracle_equal(Comp(Id(A), Id(A)), Id(A), sig, 3) is Verdict.PROVED


def test_product_eta(sig):
    h = Pair(Const("f"), Id(A))
    ty = type_of(h, sig).target
    lhs = Pair(Comp(Proj(1, ty.left, ty.right), h), Comp(Proj(2, ty.left, ty.right), h))
    assert oracle_equal(lhs, h, sig, 4) is Verdict.PROVED


def test_distinct_projections_never_proved(sig):
    for bound in (1, 3, 5):
        assert oracle_equal(Proj(1, A, A), Proj(2, A, A), sig, bound) is Verdict.UNPROVED


def test_indeterminate_terminal_eta(sig):
    assert oracle_equal(Comp(Indet("x"), Bang(T)), Indet("x"), sig, 6) is Verdict.PROVED


def test_verdict_strings():
    assert Verdict.PROVED == "proved" and Verdict.UNPROVED == "unproved-at-bound"


@given(seeds)
def test_steps_preserve_type_and_equality(sig, seed):
    t = arrow_from(sig, seed, poly=True, depth=2)
    ty = type_of(t, sig)
    for u in list(steps(t, sig))[:40]:
        assert type_of(u, sig) == ty
        assert arrows_equal(u, t, sig)


@given(seeds)
def test_proved_implies_equal(sig, seed):
    rng = random.Random(seed)
    t = arrow_from(sig, seed, poly=True, depth=1)
    u = random_rewrite(t, sig, rng, n=2, max_size=size(t) + 4)
    if oracle_equal(t, u, sig, 3) is Verdict.PROVED:
        assert arrows_equal(t, u, sig)
