"""Simply typed lambda terms over the object language.

Types are :mod:`freeccc.syntax` objects: ``T`` is the unit type, ``Prod`` the
pair type and ``Exp`` the function type.  Variables are de Bruijn *levels*:
``Var(k)`` refers to the binder with ``k`` enclosing binders outside it, so
normal forms come out with canonical variable names and alpha-equivalence is
plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import TypeMismatch
from .syntax import Exp, ObjectExpr, Prod, T, _Show


@dataclass(frozen=True, slots=True)
class Var(_Show):
    level: int


@dataclass(frozen=True, slots=True)
class Abs(_Show):
    domain: ObjectExpr
    body: "LambdaTerm"


@dataclass(frozen=True, slots=True)
class App(_Show):
    fun: "LambdaTerm"
    arg: "LambdaTerm"


@dataclass(frozen=True, slots=True)
class PairT(_Show):
    fst: "LambdaTerm"
    snd: "LambdaTerm"


@dataclass(frozen=True, slots=True)
class Fst(_Show):
    of: "LambdaTerm"


@dataclass(frozen=True, slots=True)
class Snd(_Show):
    of: "LambdaTerm"


@dataclass(frozen=True, slots=True)
class Unit(_Show):
    pass


@dataclass(frozen=True, slots=True)
class ConstT(_Show):
    """A free constant; ``type`` is its lambda type (``A->B`` for an arrow ``A |- B``)."""

    name: str
    type: ObjectExpr


LambdaTerm = Union[Var, Abs, App, PairT, Fst, Snd, Unit, ConstT]
UNIT = Unit()


def infer(t: LambdaTerm, ctx: tuple = ()) -> ObjectExpr:
    """Type of ``t`` where ``ctx[k]`` is the type of ``Var(k)``."""
    if isinstance(t, Var):
        if t.level >= len(ctx):
            raise TypeMismatch(f"unbound variable level {t.level}", t)
        return ctx[t.level]
    if isinstance(t, Abs):
        return Exp(t.domain, infer(t.body, ctx + (t.domain,)))
    if isinstance(t, App):
        ft = infer(t.fun, ctx)
        at = infer(t.arg, ctx)
        if not isinstance(ft, Exp) or ft.domain != at:
            raise TypeMismatch(f"cannot apply {ft} to {at}", t, ft, at)
        return ft.codomain
    if isinstance(t, PairT):
        return Prod(infer(t.fst, ctx), infer(t.snd, ctx))
    if isinstance(t, (Fst, Snd)):
        pt = infer(t.of, ctx)
        if not isinstance(pt, Prod):
            raise TypeMismatch(f"projection from non-product {pt}", t, None, pt)
        return pt.left if isinstance(t, Fst) else pt.right
    if isinstance(t, Unit):
        return T
    if isinstance(t, ConstT):
        return t.type
    raise TypeError(f"not a lambda term: {t!r}")


def is_normal(t: LambdaTerm, ctx: tuple = ()) -> bool:
    """True iff ``t`` is beta-normal, eta-long at arrow and pair types and unit-collapsed."""

    def nf(t, ty, ctx):
        if ty == T:
            return isinstance(t, Unit)
        if isinstance(ty, Prod):
            return isinstance(t, PairT) and nf(t.fst, ty.left, ctx) and nf(t.snd, ty.right, ctx)
        if isinstance(ty, Exp):
            return isinstance(t, Abs) and nf(t.body, ty.codomain, ctx + (ty.domain,))
        return neutral(t, ctx) is not None

    def neutral(t, ctx):
        if isinstance(t, Var):
            return ctx[t.level]
        if isinstance(t, ConstT):
            return t.type
        if isinstance(t, App):
            ft = neutral(t.fun, ctx)
            if isinstance(ft, Exp) and nf(t.arg, ft.domain, ctx):
                return ft.codomain
            return None
        if isinstance(t, (Fst, Snd)):
            pt = neutral(t.of, ctx)
            if isinstance(pt, Prod):
                return pt.left if isinstance(t, Fst) else pt.right
        return None

    return nf(t, infer(t, ctx), ctx)
