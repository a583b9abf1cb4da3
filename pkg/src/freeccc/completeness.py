"""Functional completeness: abstraction and application against the indeterminate.

``phi_prime`` and ``gamma_prime`` give the bijection between K(D*A, B) and
K[x](A, B) (heritage has a left adjoint ``functor_F``, on objects ``D*-``);
``gamma_double`` and ``phi_double`` give the bijection between K[x](A, B) and
K(A, D->B) (heritage has a right adjoint ``functor_G``, on objects ``D->-``).

All outputs are the literal defining terms, never simplified.
"""

from __future__ import annotations

from .errors import TypeMismatch
from .syntax import (
    LEAVES,
    ArrowExpr,
    Bang,
    Comp,
    Curry,
    Eval,
    Exp,
    Id,
    Indet,
    Pair,
    Prod,
    Proj,
    Signature,
    T,
    assoc_left,
    assoc_right,
    phi,
    swap,
    times,
    type_of,
)


def phi_prime(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Abstract the indeterminate out of ``f : A |- B``, giving an x-free arrow ``D*A |- B``.

    Recursion on the term: ``x`` goes to ``p1[D,T]``; any other leaf ``g``
    goes to ``g . p2[D,A]``; composition, pairing and currying follow the
    structure, currying with the reassociation ``(A*D)*C -> (D*A)*C``.
    """
    d = sig.D
    memo: dict = {}

    def go(t):
        if isinstance(t, Indet):
            return Proj(1, d, T)
        if isinstance(t, LEAVES):
            return Comp(t, Proj(2, d, type_of(t, sig, memo).source))
        if isinstance(t, Comp):
            a = type_of(t.before, sig, memo).source
            return Comp(go(t.after), Pair(Proj(1, d, a), go(t.before)))
        if isinstance(t, Pair):
            return Pair(go(t.fst), go(t.snd))
        if isinstance(t, Curry):
            a, c = t.dom, t.ctx
            shuffle = Comp(
                assoc_left(d, a, c),
                Comp(times(swap(a, d), Id(c), sig), assoc_right(a, d, c)),
            )
            return Curry(a, Prod(d, c), Comp(go(t.body), shuffle))
        raise TypeError(f"not an arrow term: {t!r}")

    type_of(f, sig, memo)
    return go(f)


def gamma_prime(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Apply ``f : D*A |- B`` to the indeterminate: ``f . <x . k[A], id[A]>``."""
    d, x = sig.D, sig.indet_name
    ty = type_of(f, sig)
    if not (isinstance(ty.source, Prod) and ty.source.left == d):
        raise TypeMismatch(f"expected an arrow with source {d}*A, got {ty}", f, d, ty.source)
    a = ty.source.right
    return Comp(f, Pair(Comp(Indet(x), Bang(a)), Id(a)))


def functor_F(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Left adjoint of heritage on ``f : A |- B``: ``<p1[D,A], phi_prime(f)> : D*A |- D*B``."""
    a = type_of(f, sig).source
    return Pair(Proj(1, sig.D, a), phi_prime(f, sig))


def gamma_double(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Abstraction into an exponential: ``curry[D,A](phi_prime(f)) : A |- D->B``."""
    a = type_of(f, sig).source
    return Curry(sig.D, a, phi_prime(f, sig))


def phi_double(g: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Application of ``g : A |- D->B`` to the indeterminate: ``gamma_prime(phi(g))``."""
    ty = type_of(g, sig)
    if not (isinstance(ty.target, Exp) and ty.target.domain == sig.D):
        raise TypeMismatch(f"expected an arrow into {sig.D}->B, got {ty}", g, sig.D, ty.target)
    return gamma_prime(phi(g, sig), sig)


def functor_G(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Right adjoint of heritage on ``f : A |- B``, as a closed form ``D->A |- D->B``."""
    d = sig.D
    a = type_of(f, sig).source
    da = Exp(d, a)
    return Curry(d, da, Comp(phi_prime(f, sig), Pair(Proj(1, d, da), Eval(d, a))))
