import random

import pytest
from hypothesis import given, strategies as st

from freeccc import (
    Atom,
    BadIndeterminateType,
    Comp,
    Const,
    Curry,
    DuplicateName,
    Eval,
    Exp,
    Id,
    Pair,
    ParseError,
    Prod,
    Proj,
    T,
    TypeMismatch,
    UnknownIdentifier,
    derived,
    parse_arrow,
    parse_object,
    parse_signature,
    print_arrow,
    print_signature,
    type_of,
)
from freeccc.generate import TermGenerator

from .conftest import arrow_from, seeds

A, B, C, D = (Atom(n) for n in "ABCD")


def test_signature_example():
    sig = parse_signature("object D\nobject A\narrow f : A |- D\nindeterminate x : T |- D")
    assert sig.objects == {"A", "D"}
    assert set(sig.arrows) == {"f"}
    assert sig.indeterminate == ("x", D)


def test_signature_errors():
    with pytest.raises(BadIndeterminateType):
        parse_signature("object A D\nindeterminate x : A |- D")
    with pytest.raises(DuplicateName) as info:
        parse_signature("object D\nobject D")
    assert info.value.line == 2
    with pytest.raises(UnknownIdentifier):
        parse_signature("object A\narrow f : A |- Z")
    with pytest.raises(ParseError) as info:
        parse_signature("object A\narrow f A |- A")
    assert (info.value.line, info.value.column) == (2, 9)
    with pytest.raises(ParseError):
        parse_signature("object id")
    with pytest.raises(ParseError):
        parse_signature("object D\nindeterminate x : T |- D\nindeterminate y : T |- D")


def test_comments_and_unicode():
    sig = parse_signature("# atoms\nobject A B  # two\narrow f : A × B ⊢ A → B\n")
    assert sig.arrows["f"].source == Prod(A, B)
    assert sig.arrows["f"].target == Exp(A, B)


def test_object_grammar():
    assert parse_object("A -> B -> C") == Exp(A, Exp(B, C))
    assert parse_object("A * B * C") == Prod(Prod(A, B), C)
    assert parse_object("A * B -> C") == Exp(Prod(A, B), C)
    assert parse_object("(A -> B) * T") == Prod(Exp(A, B), T)


def test_arrow_examples(sig):
    assert parse_arrow("p1[D,T]", sig) == Proj(1, D, T)
    t = parse_arrow("curry[D,A](p2[D,A])", sig)
    assert t == Curry(D, A, Proj(2, D, A))
    assert type_of(t, sig).target == Exp(D, A)
    assert parse_arrow("eps[A,B] . <p1[A, A->B], p2[A,A->B]>", sig) == Comp(
        Eval(A, B), Pair(Proj(1, A, Exp(A, B)), Proj(2, A, Exp(A, B)))
    )
    assert parse_arrow("g . f . id[A]", sig) == Comp(Const("g"), Comp(Const("f"), Id(A)))


def test_arrow_errors(sig):
    with pytest.raises(UnknownIdentifier):
        parse_arrow("nope", sig)
    with pytest.raises(TypeMismatch):
        parse_arrow("f . g", sig)
    with pytest.raises(ParseError):
        parse_arrow("<f, f", sig)
    with pytest.raises(ParseError):
        parse_arrow("f ?", sig)


def test_print_examples(sig):
    assert print_arrow(Id(A)) == "id[A]"
    assert print_arrow(derived("swap", A, B)) == "<p2[A,B], p1[A,B]>"
    assert print_arrow(Comp(Comp(Const("g"), Const("f")), Id(A))) == "(g . f) . id[A]"


def test_signature_round_trip(sig):
    assert parse_signature(print_signature(sig)) == sig


@given(seeds, st.booleans(), st.integers(0, 4))
def test_round_trip(sig, seed, poly, depth):
    t = arrow_from(sig, seed, poly=poly, depth=depth)
    assert parse_arrow(print_arrow(t), sig) == t


@given(seeds)
def test_object_round_trip(sig, seed):
    obj = TermGenerator(sig, random.Random(seed), max_object_depth=3).object()
    assert parse_object(str(obj)) == obj
