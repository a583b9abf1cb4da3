"""Normalization by evaluation, interpreted kernel.

Mirror of ``_nbe.pyx``; the two must produce identical normal forms.
Values are closures, pairs, the unit value, or neutral terms (a variable or
constant under a spine of applications and projections).  Reification is
type-directed, which yields eta-long forms with every unit-typed subterm
collapsed to ``()``.
"""

from .lam import UNIT, Abs, App, ConstT, Fst, PairT, Snd, Unit, Var
from .syntax import Exp, Prod, Terminal


class _Closure:
    __slots__ = ("env", "body")

    def __init__(self, env, body):
        self.env = env
        self.body = body


class _Pair:
    __slots__ = ("fst", "snd")

    def __init__(self, fst, snd):
        self.fst = fst
        self.snd = snd


class _NVar:
    __slots__ = ("level",)

    def __init__(self, level):
        self.level = level


class _NConst:
    __slots__ = ("name", "type")

    def __init__(self, name, type):
        self.name = name
        self.type = type


class _NApp:
    __slots__ = ("fun", "arg")

    def __init__(self, fun, arg):
        self.fun = fun
        self.arg = arg


class _NFst:
    __slots__ = ("of",)

    def __init__(self, of):
        self.of = of


class _NSnd:
    __slots__ = ("of",)

    def __init__(self, of):
        self.of = of


_VUNIT = object()


def _eval(t, env):
    tp = type(t)
    if tp is Var:
        return env[t.level]
    if tp is App:
        return _apply(_eval(t.fun, env), _eval(t.arg, env))
    if tp is Abs:
        return _Closure(env, t.body)
    if tp is PairT:
        return _Pair(_eval(t.fst, env), _eval(t.snd, env))
    if tp is Fst:
        return _fst(_eval(t.of, env))
    if tp is Snd:
        return _snd(_eval(t.of, env))
    if tp is Unit:
        return _VUNIT
    if tp is ConstT:
        return _NConst(t.name, t.type)
    raise TypeError(f"not a lambda term: {t!r}")


def _apply(f, a):
    if type(f) is _Closure:
        return _eval(f.body, f.env + (a,))
    return _NApp(f, a)


def _fst(v):
    return v.fst if type(v) is _Pair else _NFst(v)


def _snd(v):
    return v.snd if type(v) is _Pair else _NSnd(v)


def _reify(ty, v, ctx):
    tp = type(ty)
    if tp is Terminal:
        return UNIT
    if tp is Prod:
        return PairT(_reify(ty.left, _fst(v), ctx), _reify(ty.right, _snd(v), ctx))
    if tp is Exp:
        k = len(ctx)
        body = _reify(ty.codomain, _apply(v, _NVar(k)), ctx + (ty.domain,))
        return Abs(ty.domain, body)
    return _reify_neutral(v, ctx)[0]


def _reify_neutral(n, ctx):
    tp = type(n)
    if tp is _NVar:
        return Var(n.level), ctx[n.level]
    if tp is _NConst:
        return ConstT(n.name, n.type), n.type
    if tp is _NApp:
        fun, fty = _reify_neutral(n.fun, ctx)
        return App(fun, _reify(fty.domain, n.arg, ctx)), fty.codomain
    if tp is _NFst:
        of, pty = _reify_neutral(n.of, ctx)
        return Fst(of), pty.left
    if tp is _NSnd:
        of, pty = _reify_neutral(n.of, ctx)
        return Snd(of), pty.right
    raise TypeError(f"ill-typed term: reifying {n!r} at a base type")


def normalize(term, ty):
    """Beta-eta-long normal form of the closed term ``term`` of type ``ty``."""
    return _reify(ty, _eval(term, ()), ())
