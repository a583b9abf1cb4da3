import pytest
from hypothesis import given

from freeccc import (
    ArrowType,
    Atom,
    Bang,
    Comp,
    Const,
    Curry,
    Exp,
    Id,
    Indet,
    NoIndeterminate,
    Pair,
    Prod,
    Proj,
    T,
    TypeMismatch,
    arrows_equal,
    derived,
    functor_F,
    functor_G,
    gamma_double,
    gamma_prime,
    heritage,
    parse_signature,
    phi_double,
    phi_prime,
    poly_equal,
    type_of,
)
from freeccc.syntax import contains_indet

from .conftest import arrow_from, seeds

A, B, C, D = (Atom(n) for n in "ABCD")
x = Indet("x")
f, g = Const("f"), Const("g")


def test_phi_prime_leaves(sig):
    assert phi_prime(x, sig) == Proj(1, D, T)
    assert phi_prime(heritage(f), sig) == Comp(f, Proj(2, D, A))


def test_phi_prime_composition_shape(sig):
    out = phi_prime(Comp(g, f), sig)
    assert out == Comp(Comp(g, Proj(2, D, B)), Pair(Proj(1, D, A), Comp(f, Proj(2, D, A))))
    assert arrows_equal(out, Comp(g, Comp(f, Proj(2, D, A))), sig)


def test_phi_prime_curry_clause(sig):
    # body is precomposed with A*(D*C) -> (A*D)*C -> (D*A)*C -> D*(A*C)
    t = Curry(A, C, Comp(f, Proj(1, A, C)))
    out = phi_prime(t, sig)
    assert isinstance(out, Curry) and out.dom == A and out.ctx == Prod(D, C)
    shuffle = out.body.before
    assert shuffle.after == derived("assoc_left", D, A, C)
    assert shuffle.before.after == derived("times", derived("swap", A, D), Id(C), sig=sig)
    assert shuffle.before.before == derived("assoc_right", A, D, C)
    assert type_of(out, sig) == ArrowType(Prod(D, C), Exp(A, B))


def test_gamma_prime_examples(sig):
    out = gamma_prime(Proj(2, D, A), sig)
    assert out == Comp(Proj(2, D, A), Pair(Comp(x, Bang(A)), Id(A)))
    assert poly_equal(out, Id(A), sig)
    assert poly_equal(gamma_prime(Proj(1, D, T), sig), x, sig)
    assert type_of(gamma_prime(Const("h"), sig), sig) == ArrowType(A, B)


def test_gamma_prime_rejects_wrong_source(sig):
    with pytest.raises(TypeMismatch):
        gamma_prime(f, sig)


def test_functor_F_examples(sig):
    assert arrows_equal(functor_F(heritage(f), sig), derived("times", Id(D), f, sig=sig), sig)
    assert arrows_equal(functor_F(Id(A), sig), Id(Prod(D, A)), sig)


def test_gamma_double_examples(sig):
    out = gamma_double(x, sig)
    assert out == Curry(D, T, Proj(1, D, T))
    assert type_of(out, sig) == ArrowType(T, Exp(D, D))
    assert arrows_equal(gamma_double(heritage(f), sig), Curry(D, A, Comp(f, Proj(2, D, A))), sig)
    assert poly_equal(phi_double(out, sig), x, sig)


def test_phi_double_rejects_wrong_target(sig):
    with pytest.raises(TypeMismatch):
        phi_double(f, sig)
    with pytest.raises(TypeMismatch):
        phi_double(Curry(A, D, Proj(1, A, D)), sig)


def test_functor_G_examples(sig):
    assert arrows_equal(functor_G(heritage(f), sig), derived("arrow", Id(D), f, sig=sig), sig)
    assert arrows_equal(functor_G(Id(A), sig), Id(Exp(D, A)), sig)


def test_needs_indeterminate():
    sig = parse_signature("object A")
    with pytest.raises(NoIndeterminate):
        phi_prime(Id(Atom("A")), sig)


@given(seeds)
def test_phi_prime_output_is_x_free_and_typed(sig, seed):
    t = arrow_from(sig, seed, poly=True, depth=4)
    ty = type_of(t, sig)
    out = phi_prime(t, sig)
    assert not contains_indet(out)
    assert type_of(out, sig) == ArrowType(Prod(D, ty.source), ty.target)
    assert type_of(gamma_double(t, sig), sig) == ArrowType(ty.source, Exp(D, ty.target))
    assert type_of(functor_G(t, sig), sig) == ArrowType(Exp(D, ty.source), Exp(D, ty.target))


@given(seeds)
def test_round_trips(sig, seed):
    t = arrow_from(sig, seed, poly=True, depth=4)
    assert poly_equal(gamma_prime(phi_prime(t, sig), sig), t, sig)
    assert poly_equal(phi_double(gamma_double(t, sig), sig), t, sig)
