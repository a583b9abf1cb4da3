import random

import pytest
from hypothesis import given

from freeccc import (
    ArrowType,
    Atom,
    Bang,
    Comp,
    Const,
    Id,
    Indet,
    Pair,
    Proj,
    Signature,
    T,
    TypeMismatch,
    arrows_equal,
    heritage,
    instantiate,
    oracle_equal,
    poly_equal,
    type_of,
)
from freeccc.generate import TermGenerator
from freeccc.laws import with_point
from freeccc.rewrite import Verdict, random_rewrite
from freeccc.syntax import size

from .conftest import seeds

A, B, C, D = (Atom(n) for n in "ABCD")


@pytest.fixture(scope="module")
def pointed(sig):
    return with_point(sig)[0]


def test_heritage_is_identity_on_syntax(sig):
    assert heritage(Id(A)) == Id(A)
    assert type_of(heritage(Bang(D)), sig) == ArrowType(D, T)
    gf = Comp(Const("g"), Const("f"))
    assert poly_equal(heritage(gf), Comp(heritage(Const("g")), heritage(Const("f"))), sig)


def test_heritage_rejects_indeterminate():
    with pytest.raises(TypeMismatch):
        heritage(Indet("x"))


def test_poly_equal_examples(sig):
    x = Indet("x")
    assert poly_equal(Comp(x, Bang(T)), x, sig)
    assert oracle_equal(Comp(x, Bang(T)), x, sig, 6) is Verdict.PROVED
    h = Pair(Comp(x, Bang(A)), Const("f"))
    ty = type_of(h, sig).target
    assert poly_equal(Pair(Comp(Proj(1, ty.left, ty.right), h), Comp(Proj(2, ty.left, ty.right), h)), h, sig)


def test_distinct_constants_differ():
    sig = Signature(["A", "B", "D"], {"f1": ArrowType(A, B), "f2": ArrowType(A, B)}, ("x", D))
    assert not poly_equal(heritage(Const("f1")), heritage(Const("f2")), sig)


def test_poly_equal_type_mismatch(sig):
    with pytest.raises(TypeMismatch):
        poly_equal(Id(A), Indet("x"), sig)


def test_instantiate_examples(pointed):
    a = Const("pt")
    assert instantiate(Indet("x"), a, pointed) == a
    assert instantiate(heritage(Const("f")), a, pointed) == Const("f")
    t = Comp(Const("h"), Pair(Comp(Indet("x"), Bang(A)), Id(A)))
    assert instantiate(t, a, pointed) == Comp(Const("h"), Pair(Comp(a, Bang(A)), Id(A)))


def test_instantiate_rejects_bad_points(pointed):
    with pytest.raises(TypeMismatch):
        instantiate(Indet("x"), Const("f"), pointed)
    with pytest.raises(TypeMismatch):
        instantiate(Indet("x"), Indet("x"), pointed)


@given(seeds)
def test_instantiation_respects_equality(pointed, seed):
    rng = random.Random(seed)
    gen = TermGenerator(pointed, rng, poly=True)
    f = gen.random_arrow(3)
    g = random_rewrite(f, pointed, rng, n=3, max_size=size(f) + 10)
    a = TermGenerator(pointed, rng).arrow(T, D, 2)
    assert poly_equal(f, g, pointed)
    assert arrows_equal(instantiate(f, a, pointed), instantiate(g, a, pointed), pointed)
    assert type_of(instantiate(f, a, pointed), pointed) == type_of(f, pointed)


@given(seeds)
def test_instantiate_heritage_is_identity(pointed, seed):
    rng = random.Random(seed)
    f = TermGenerator(pointed, rng).random_arrow(3)
    a = TermGenerator(pointed, rng).arrow(T, D, 2)
    assert instantiate(heritage(f), a, pointed) == f
