"""The polynomial category K[x]: heritage, equality and instantiation.

Arrows of K[x] are represented by terms that may contain the indeterminate;
an equivalence class is represented by any of its members, and
:func:`poly_equal` decides whether two members lie in the same class.
"""

from __future__ import annotations

from .errors import TypeMismatch
from .normal_form import arrows_equal
from .syntax import ArrowExpr, ArrowType, Comp, Curry, Indet, Pair, Signature, T, contains_indet, type_of


def heritage(f: ArrowExpr, sig: Signature | None = None) -> ArrowExpr:
    """The K-arrow ``f`` seen in K[x]; on syntax this is the identity."""
    if contains_indet(f):
        raise TypeMismatch(f"{f} mentions the indeterminate, so it is not an arrow of K", f)
    if sig is not None:
        type_of(f, sig)
    return f


def poly_equal(f: ArrowExpr, g: ArrowExpr, sig: Signature) -> bool:
    # the free CC category over the signature extended by x is K[x] when K is free
    return arrows_equal(f, g, sig)


def instantiate(f: ArrowExpr, point: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Substitute the K-arrow ``point : T |- D`` for every occurrence of the indeterminate."""
    want = ArrowType(T, sig.D)
    got = type_of(point, sig)
    if got != want:
        raise TypeMismatch(f"instantiation point must have type {want}, got {got}", point, want, got)
    if contains_indet(point):
        raise TypeMismatch(f"instantiation point {point} mentions the indeterminate", point)
    type_of(f, sig)
    return _subst(f, point)


def _subst(f, point):
    if isinstance(f, Indet):
        return point
    if isinstance(f, Comp):
        return Comp(_subst(f.after, point), _subst(f.before, point))
    if isinstance(f, Pair):
        return Pair(_subst(f.fst, point), _subst(f.snd, point))
    if isinstance(f, Curry):
        return Curry(f.dom, f.ctx, _subst(f.body, point))
    return f
