"""Syntactic oracle: bounded search through the equational closure.

A single step rewrites one subterm by one instance of a categorial or CC
equality, in either direction where the other side is determined by the
redex.  Congruence comes from rewriting at any position.  ``oracle_equal``
searches breadth-first from both ends and reports ``PROVED`` only when it
has an explicit chain of steps, so it can never contradict a sound decision
procedure; running out of budget gives ``UNPROVED``.
"""

from __future__ import annotations

import enum
import random
from typing import Iterator

from .errors import TypeMismatch
from .syntax import (
    ArrowExpr,
    Bang,
    Comp,
    Curry,
    Eval,
    Exp,
    Id,
    Pair,
    Prod,
    Proj,
    Signature,
    T,
    size,
    type_of,
)


class Verdict(str, enum.Enum):
    PROVED = "proved"
    UNPROVED = "unproved-at-bound"


def _phi_of(g, a, b, c):
    # eps[A,B] . (id[A] x g) for g : C |- A->B, spelled as in syntax.phi
    return Comp(Eval(a, b), Pair(Comp(Id(a), Proj(1, a, c)), Comp(g, Proj(2, a, c))))


def _match_phi(t):
    """``(g, A, C)`` if ``t`` is literally ``phi_{A,B} g`` with ``g : C |- A->B``."""
    if not (isinstance(t, Comp) and isinstance(t.after, Eval) and isinstance(t.before, Pair)):
        return None
    left, right = t.before.fst, t.before.snd
    a = t.after.dom
    if not (isinstance(left, Comp) and left.after == Id(a) and isinstance(left.before, Proj)):
        return None
    p1 = left.before
    if p1.index != 1 or p1.left != a:
        return None
    c = p1.right
    if not (isinstance(right, Comp) and right.before == Proj(2, a, c)):
        return None
    return right.after, a, c


def root_steps(t: ArrowExpr, sig: Signature, memo: dict, expand: bool = True) -> Iterator[ArrowExpr]:
    ty = type_of(t, sig, memo)
    if isinstance(t, Comp):
        g, f = t.after, t.before
        if isinstance(g, Id):
            yield f
        if isinstance(f, Id):
            yield g
        if isinstance(f, Comp):
            yield Comp(Comp(g, f.after), f.before)
        if isinstance(g, Comp):
            yield Comp(g.after, Comp(g.before, f))
        if isinstance(g, Proj) and isinstance(f, Pair):
            yield f.fst if g.index == 1 else f.snd
        m = _match_phi(t)
        if m is not None and isinstance(m[0], Curry) and m[0].dom == m[1] and m[0].ctx == m[2]:
            yield m[0].body
    if isinstance(t, Pair):
        l, r = t.fst, t.snd
        if (
            isinstance(l, Comp)
            and isinstance(r, Comp)
            and l.before == r.before
            and isinstance(l.after, Proj)
            and isinstance(r.after, Proj)
            and l.after.index == 1
            and r.after.index == 2
        ):
            yield l.before
    if isinstance(t, Curry):
        m = _match_phi(t.body)
        if m is not None and m[1] == t.dom and m[2] == t.ctx:
            yield m[0]
    if ty.target == T and t != Bang(ty.source):
        yield Bang(ty.source)
    if not expand:
        return
    yield Comp(Id(ty.target), t)
    yield Comp(t, Id(ty.source))
    if isinstance(ty.target, Prod):
        a, b = ty.target.left, ty.target.right
        yield Pair(Comp(Proj(1, a, b), t), Comp(Proj(2, a, b), t))
    if isinstance(ty.source, Prod):
        a, c = ty.source.left, ty.source.right
        yield _phi_of(Curry(a, c, t), a, ty.target, c)
    if isinstance(ty.target, Exp):
        a, b = ty.target.domain, ty.target.codomain
        yield Curry(a, ty.source, _phi_of(t, a, b, ty.source))


def steps(t: ArrowExpr, sig: Signature, expand: bool = True, memo: dict | None = None) -> Iterator[ArrowExpr]:
    """Every term one rewrite away from ``t``."""
    if memo is None:
        memo = {}
    yield from root_steps(t, sig, memo, expand)
    if isinstance(t, Comp):
        for a in steps(t.after, sig, expand, memo):
            yield Comp(a, t.before)
        for b in steps(t.before, sig, expand, memo):
            yield Comp(t.after, b)
    elif isinstance(t, Pair):
        for a in steps(t.fst, sig, expand, memo):
            yield Pair(a, t.snd)
        for b in steps(t.snd, sig, expand, memo):
            yield Pair(t.fst, b)
    elif isinstance(t, Curry):
        for body in steps(t.body, sig, expand, memo):
            yield Curry(t.dom, t.ctx, body)


def oracle_equal(f: ArrowExpr, g: ArrowExpr, sig: Signature, bound: int, max_states: int = 20_000) -> Verdict:
    """``PROVED`` iff a chain of at most ``bound`` rewrite steps links ``f`` and ``g``.

    Explores at most ``max_states`` distinct terms in total.
    """
    ft, gt = type_of(f, sig), type_of(g, sig)
    if ft != gt:
        raise TypeMismatch(f"cannot compare arrows of types {ft} and {gt}", g, ft, gt)
    if f == g:
        return Verdict.PROVED
    seen = [{f}, {g}]
    frontier = [[f], [g]]
    for _ in range(bound):
        live = [i for i in (0, 1) if frontier[i]]
        if not live:
            break
        side = min(live, key=lambda i: len(frontier[i]))
        other = seen[1 - side]
        nxt = []
        for t in frontier[side]:
            for u in steps(t, sig):
                if u in seen[side]:
                    continue
                if u in other:
                    return Verdict.PROVED
                seen[side].add(u)
                nxt.append(u)
                if len(seen[0]) + len(seen[1]) > max_states:
                    return Verdict.UNPROVED
        frontier[side] = nxt
    return Verdict.UNPROVED


def random_rewrite(t: ArrowExpr, sig: Signature, rng: random.Random, n: int = 3, max_size: int | None = None) -> ArrowExpr:
    """Apply ``n`` randomly chosen rewrite steps; the result is provably equal to ``t``."""
    for _ in range(n):
        options = list(steps(t, sig))
        if max_size is not None:
            options = [u for u in options if size(u) <= max_size] or options
        if not options:
            break
        t = rng.choice(options)
    return t
