# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Normalization by evaluation, compiled kernel.

Same algorithm as ``_nbe_py``; semantic values are extension types so the
evaluator avoids attribute dictionaries and generic dispatch.
"""

from freeccc.lam import UNIT, Abs, App, ConstT, Fst, PairT, Snd, Unit, Var
from freeccc.syntax import Exp, Prod, Terminal

cdef object _Var = Var
cdef object _Abs = Abs
cdef object _App = App
cdef object _PairT = PairT
cdef object _Fst = Fst
cdef object _Snd = Snd
cdef object _Unit = Unit
cdef object _ConstT = ConstT
cdef object _Terminal = Terminal
cdef object _Prod = Prod
cdef object _Exp = Exp
cdef object _UNIT = UNIT


cdef class Closure:
    cdef tuple env
    cdef object body

    def __cinit__(self, tuple env, object body):
        self.env = env
        self.body = body


cdef class VPair:
    cdef object fst
    cdef object snd

    def __cinit__(self, object fst, object snd):
        self.fst = fst
        self.snd = snd


cdef class VUnit:
    pass


cdef class NVar:
    cdef Py_ssize_t level

    def __cinit__(self, Py_ssize_t level):
        self.level = level


cdef class NConst:
    cdef object name
    cdef object type

    def __cinit__(self, object name, object type):
        self.name = name
        self.type = type


cdef class NApp:
    cdef object fun
    cdef object arg

    def __cinit__(self, object fun, object arg):
        self.fun = fun
        self.arg = arg


cdef class NFst:
    cdef object of

    def __cinit__(self, object of):
        self.of = of


cdef class NSnd:
    cdef object of

    def __cinit__(self, object of):
        self.of = of


cdef VUnit _VUNIT = VUnit()


cdef object _eval(object t, tuple env):
    cdef object tp = type(t)
    if tp is _Var:
        return env[<Py_ssize_t>t.level]
    if tp is _App:
        return _apply(_eval(t.fun, env), _eval(t.arg, env))
    if tp is _Abs:
        return Closure(env, t.body)
    if tp is _PairT:
        return VPair(_eval(t.fst, env), _eval(t.snd, env))
    if tp is _Fst:
        return _fst(_eval(t.of, env))
    if tp is _Snd:
        return _snd(_eval(t.of, env))
    if tp is _Unit:
        return _VUNIT
    if tp is _ConstT:
        return NConst(t.name, t.type)
    raise TypeError(f"not a lambda term: {t!r}")


cdef object _apply(object f, object a):
    cdef Closure c
    if type(f) is Closure:
        c = <Closure>f
        return _eval(c.body, c.env + (a,))
    return NApp(f, a)


cdef inline object _fst(object v):
    if type(v) is VPair:
        return (<VPair>v).fst
    return NFst(v)


cdef inline object _snd(object v):
    if type(v) is VPair:
        return (<VPair>v).snd
    return NSnd(v)


cdef object _reify(object ty, object v, tuple ctx):
    cdef object tp = type(ty)
    cdef Py_ssize_t k
    if tp is _Terminal:
        return _UNIT
    if tp is _Prod:
        return _PairT(_reify(ty.left, _fst(v), ctx), _reify(ty.right, _snd(v), ctx))
    if tp is _Exp:
        k = len(ctx)
        dom = ty.domain
        return _Abs(dom, _reify(ty.codomain, _apply(v, NVar(k)), ctx + (dom,)))
    return _reify_neutral(v, ctx)[0]


cdef tuple _reify_neutral(object n, tuple ctx):
    cdef object tp = type(n)
    cdef Py_ssize_t level
    if tp is NVar:
        level = (<NVar>n).level
        return _Var(level), ctx[level]
    if tp is NConst:
        return _ConstT((<NConst>n).name, (<NConst>n).type), (<NConst>n).type
    if tp is NApp:
        fun, fty = _reify_neutral((<NApp>n).fun, ctx)
        return _App(fun, _reify(fty.domain, (<NApp>n).arg, ctx)), fty.codomain
    if tp is NFst:
        of, pty = _reify_neutral((<NFst>n).of, ctx)
        return _Fst(of), pty.left
    if tp is NSnd:
        of, pty = _reify_neutral((<NSnd>n).of, ctx)
        return _Snd(of), pty.right
    raise TypeError(f"ill-typed term: reifying {n!r} at a base type")


def normalize(term, ty):
    """Beta-eta-long normal form of the closed term ``term`` of type ``ty``."""
    return _reify(ty, _eval(term, ()), ())
