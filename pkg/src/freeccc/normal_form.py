"""Deciding equality in the free cartesian closed category.

An arrow ``f : A |- B`` is translated to a closed lambda term of type
``A -> B``; two arrows are provably equal iff the beta-eta-long normal forms
(with unit collapse) of their images coincide.  The indeterminate becomes a
free constant of type ``D``.

The normalizer is a compiled extension when it has been built and the
environment variable ``FREECCC_PURE_PYTHON`` is unset; otherwise the
interpreted kernel is used.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os
from typing import Optional

from . import _nbe_py
from .errors import TypeMismatch
from .lam import UNIT, Abs, App, ConstT, Fst, LambdaTerm, PairT, Snd, Unit, Var, infer
from .syntax import (
    ArrowExpr,
    Bang,
    Comp,
    Const,
    Curry,
    Eval,
    Exp,
    Id,
    Indet,
    Pair,
    Prod,
    Proj,
    Signature,
    type_of,
)

KERNELS = {"python": _nbe_py}
try:
    from . import _nbe as _compiled
except ImportError:
    _compiled = None
else:
    KERNELS["cython"] = _compiled

if _compiled is not None and not os.environ.get("FREECCC_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def to_lambda(f: ArrowExpr, sig: Signature) -> LambdaTerm:
    """Closed lambda term of type ``A -> B`` for ``f : A |- B``."""
    memo: dict = {}
    ty = type_of(f, sig, memo)
    return Abs(ty.source, _translate(f, Var(0), 1, sig, memo))


def _translate(f, v, depth, sig, memo):
    # v is the argument term; its free variables are all below `depth`.
    if isinstance(f, Id):
        return v
    if isinstance(f, Bang):
        return UNIT
    if isinstance(f, Proj):
        return Fst(v) if f.index == 1 else Snd(v)
    if isinstance(f, Eval):
        return App(Snd(v), Fst(v))
    if isinstance(f, Const):
        ty = type_of(f, sig, memo)
        return App(ConstT(f.name, Exp(ty.source, ty.target)), v)
    if isinstance(f, Indet):
        return ConstT(f.name, sig.D)
    if isinstance(f, Comp):
        inner = _translate(f.before, v, depth, sig, memo)
        if isinstance(inner, (Var, Unit, ConstT)):
            return _translate(f.after, inner, depth, sig, memo)
        # bind the intermediate value once instead of copying it into every use
        mid = type_of(f.before, sig, memo).target
        return App(Abs(mid, _translate(f.after, Var(depth), depth + 1, sig, memo)), inner)
    if isinstance(f, Pair):
        return PairT(_translate(f.fst, v, depth, sig, memo), _translate(f.snd, v, depth, sig, memo))
    if isinstance(f, Curry):
        return Abs(f.dom, _translate(f.body, PairT(Var(depth), v), depth + 1, sig, memo))
    raise TypeError(f"not an arrow term: {f!r}")


def nf(t: LambdaTerm, backend: Optional[str] = None) -> LambdaTerm:
    kernel = KERNELS[backend or BACKEND]
    return kernel.normalize(t, infer(t))


def normal_form(f: ArrowExpr, sig: Signature, backend: Optional[str] = None) -> LambdaTerm:
    return nf(to_lambda(f, sig), backend)


def arrows_equal(f: ArrowExpr, g: ArrowExpr, sig: Signature) -> bool:
    ft = type_of(f, sig)
    gt = type_of(g, sig)
    if ft != gt:
        raise TypeMismatch(f"cannot compare arrows of types {ft} and {gt}", g, ft, gt)
    return normal_form(f, sig) == normal_form(g, sig)


# Back-translation, used to show normal forms as arrows.


def from_lambda(t: LambdaTerm, sig: Signature) -> ArrowExpr:
    """Arrow for a closed lambda term ``Abs(A, body)`` of function type."""
    if not isinstance(t, Abs):
        raise TypeMismatch("expected a closed abstraction", t)
    return _back(t.body, (t.domain,), sig)


def _context_object(ctx):
    obj = ctx[0]
    for a in ctx[1:]:
        obj = Prod(a, obj)
    return obj


def _var_arrow(level, ctx):
    if len(ctx) == 1:
        return Id(ctx[0])
    rest = _context_object(ctx[:-1])
    if level == len(ctx) - 1:
        return Proj(1, ctx[-1], rest)
    return Comp(_var_arrow(level, ctx[:-1]), Proj(2, ctx[-1], rest))


def _back(t, ctx, sig):
    here = _context_object(ctx)
    if isinstance(t, Var):
        return _var_arrow(t.level, ctx)
    if isinstance(t, Unit):
        return Bang(here)
    if isinstance(t, PairT):
        return Pair(_back(t.fst, ctx, sig), _back(t.snd, ctx, sig))
    if isinstance(t, (Fst, Snd)):
        pty = infer(t.of, ctx)
        return Comp(Proj(1 if isinstance(t, Fst) else 2, pty.left, pty.right), _back(t.of, ctx, sig))
    if isinstance(t, Abs):
        return Curry(t.domain, here, _back(t.body, ctx + (t.domain,), sig))
    if isinstance(t, ConstT):
        if sig.indeterminate is not None and t.name == sig.indeterminate[0]:
            return Comp(Indet(t.name), Bang(here))
        ty = t.type
        return Curry(ty.domain, here, Comp(Const(t.name), Proj(1, ty.domain, here)))
    if isinstance(t, App):
        if isinstance(t.fun, ConstT) and t.fun.name in sig.arrows:
            return Comp(Const(t.fun.name), _back(t.arg, ctx, sig))
        fty = infer(t.fun, ctx)
        return Comp(
            Eval(fty.domain, fty.codomain),
            Pair(_back(t.arg, ctx, sig), _back(t.fun, ctx, sig)),
        )
    raise TypeError(f"not a lambda term: {t!r}")


def tidy(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Peephole clean-up: drop identities, reduce projections of pairs, right-associate."""
    if isinstance(f, Pair):
        return Pair(tidy(f.fst, sig), tidy(f.snd, sig))
    if isinstance(f, Curry):
        return Curry(f.dom, f.ctx, tidy(f.body, sig))
    if not isinstance(f, Comp):
        return f
    g, h = tidy(f.after, sig), tidy(f.before, sig)
    if isinstance(g, Id):
        return h
    if isinstance(h, Id):
        return g
    if isinstance(g, Bang):
        return Bang(type_of(h, sig).source)
    if isinstance(g, Proj) and isinstance(h, Pair):
        return h.fst if g.index == 1 else h.snd
    if isinstance(g, Comp):
        return tidy(Comp(g.after, Comp(g.before, h)), sig)
    if isinstance(g, Proj) and isinstance(h, Comp) and isinstance(h.after, Pair):
        picked = h.after.fst if g.index == 1 else h.after.snd
        return tidy(Comp(picked, h.before), sig)
    return Comp(g, h)


def simplify(f: ArrowExpr, sig: Signature) -> ArrowExpr:
    """An arrow provably equal to ``f``, read back from its normal form."""
    return tidy(from_lambda(normal_form(f, sig), sig), sig)
