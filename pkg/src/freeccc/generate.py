"""Random well-typed arrow terms over a signature.

Goals ``A |- B`` are only attempted when an arrow of that type exists.  The
check is provability in the implication/conjunction/truth fragment of
intuitionistic logic, with each arrow constant ``c : X |- Y`` as an extra
axiom ``X -> Y`` (and, for polynomial terms, the indeterminate as the axiom
``D``).  Every rule the generator picks keeps all its subgoals inhabited, so
generation never backtracks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .syntax import (
    ArrowExpr,
    Atom,
    Bang,
    Comp,
    Const,
    Curry,
    Eval,
    Exp,
    Id,
    Indet,
    ObjectExpr,
    Pair,
    Prod,
    Proj,
    Signature,
    T,
    Terminal,
)


@dataclass(frozen=True)
class GenConfig:
    max_depth: int = 4
    case_count: int = 200
    seed: int = 0
    max_object_depth: int = 2


def decompose(obj: ObjectExpr) -> frozenset:
    """Atoms and exponentials reachable from ``obj`` by projections."""
    if isinstance(obj, Terminal):
        return frozenset()
    if isinstance(obj, Prod):
        return decompose(obj.left) | decompose(obj.right)
    return frozenset((obj,))


class Inhabitation:
    """Decides whether some arrow ``A |- B`` exists over a signature."""

    def __init__(self, sig: Signature, poly: bool = False):
        self.sig = sig
        self.poly = poly and sig.indeterminate is not None
        self.axioms = [(ty.source, ty.target) for ty in sig.arrows.values()]
        if self.poly:
            self.axioms.append((T, sig.D))
        self.closure = lru_cache(maxsize=None)(self._closure)

    def _closure(self, facts: frozenset) -> frozenset:
        known = set(facts)
        changed = True
        while changed:
            changed = False
            snapshot = frozenset(known)
            rules = [(e.domain, e.codomain) for e in snapshot if isinstance(e, Exp)] + self.axioms
            for x, y in rules:
                gained = decompose(y)
                if not gained <= known and self._provable(snapshot, x):
                    known |= gained
                    changed = True
        return frozenset(known)

    def _provable(self, facts: frozenset, goal: ObjectExpr) -> bool:
        if isinstance(goal, Terminal):
            return True
        if isinstance(goal, Prod):
            return self._provable(facts, goal.left) and self._provable(facts, goal.right)
        if isinstance(goal, Exp):
            extra = decompose(goal.domain)
            if extra <= facts:
                return goal in facts or self._provable(facts, goal.codomain)
            return self._provable(self.closure(facts | extra), goal.codomain)
        return goal in facts

    def __call__(self, source: ObjectExpr, target: ObjectExpr) -> bool:
        return self._provable(self.closure(decompose(source)), target)


class TermGenerator:
    """Random arrows ``A |- B``; ``poly=True`` lets terms use the indeterminate."""

    def __init__(self, sig: Signature, rng: random.Random, poly: bool = False, max_object_depth: int = 2):
        self.sig = sig
        self.rng = rng
        self.poly = poly and sig.indeterminate is not None
        self.inhabited = Inhabitation(sig, self.poly)
        self.max_object_depth = max_object_depth
        self.atoms = [Atom(n) for n in sorted(sig.objects)]
        pool = {T, *self.atoms}
        for ty in sig.arrows.values():
            pool.update((ty.source, ty.target))
        if self.poly:
            pool.add(sig.D)
        self.pool = sorted(pool, key=str)

    # objects

    def object(self, depth: Optional[int] = None) -> ObjectExpr:
        depth = self.max_object_depth if depth is None else depth
        r = self.rng.random()
        if depth <= 0 or r < 0.45:
            return T if self.rng.random() < 0.1 or not self.atoms else self.rng.choice(self.atoms)
        if r < 0.75:
            return Prod(self.object(depth - 1), self.object(depth - 1))
        return Exp(self.object(depth - 1), self.object(depth - 1))

    def arrow_type(self, source=None, target=None, tries: int = 200):
        for _ in range(tries):
            a = self.object() if source is None else source
            b = self.object() if target is None else target
            if self.inhabited(a, b):
                return a, b
        raise ValueError(f"no inhabited type found for source={source} target={target}")

    # arrows

    def random_arrow(self, depth: int, source=None, target=None) -> ArrowExpr:
        a, b = self.arrow_type(source, target)
        return self.arrow(a, b, depth)

    def arrow(self, a: ObjectExpr, b: ObjectExpr, depth: int) -> ArrowExpr:
        if not self.inhabited(a, b):
            raise ValueError(f"no arrow {a} |- {b}")
        if depth <= 0:
            return self.canonical(a, b)
        options = self._options(a, b, depth - 1)
        weights = [w for w, _ in options]
        _, build = self.rng.choices(options, weights)[0]
        return build()

    def _options(self, a, b, d):
        inh = self.inhabited
        out = []
        if a == b:
            out.append((1.0, lambda: Id(a)))
        if isinstance(b, Terminal):
            out.append((2.0, lambda: Bang(a)))
        if isinstance(b, Prod):
            out.append((4.0, lambda: Pair(self.arrow(a, b.left, d), self.arrow(a, b.right, d))))
        if isinstance(b, Exp):
            out.append((4.0, lambda: Curry(b.domain, a, self.arrow(Prod(b.domain, a), b.codomain, d))))
        if isinstance(a, Prod):
            if a.left == b:
                out.append((2.0, lambda: Proj(1, a.left, a.right)))
            if a.right == b:
                out.append((2.0, lambda: Proj(2, a.left, a.right)))
            if isinstance(a.right, Exp) and a.right.domain == a.left and a.right.codomain == b:
                out.append((2.0, lambda: Eval(a.left, b)))
            for i, part in ((1, a.left), (2, a.right)):
                if inh(part, b):
                    out.append((1.5, lambda i=i, part=part: Comp(self.arrow(part, b, d), Proj(i, a.left, a.right))))
        for name, ty in self.sig.arrows.items():
            if ty.source == a and ty.target == b:
                out.append((2.0, lambda name=name: Const(name)))
            elif ty.target == b and inh(a, ty.source):
                out.append((1.5, lambda name=name, ty=ty: Comp(Const(name), self.arrow(a, ty.source, d))))
        if self.poly:
            point = Indet(self.sig.indet_name)
            dd = self.sig.D
            if a == T and b == dd:
                out.append((3.0, lambda: point))
            elif b == dd:
                out.append((2.0, lambda: Comp(point, self.arrow(a, T, d))))
            elif inh(dd, b):
                out.append((1.5, lambda: Comp(self.arrow(dd, b, d), Comp(point, Bang(a)))))
        middles = [m for m in self.pool if m not in (a, b) and inh(a, m) and inh(m, b)]
        if middles:
            m = self.rng.choice(middles)
            out.append((1.5, lambda m=m: Comp(self.arrow(m, b, d), self.arrow(a, m, d))))
        # beta redexes, so that equalities are exercised
        others = [m for m in self.pool if inh(a, m)]
        if others:
            m = self.rng.choice(others)
            out.append((0.7, lambda m=m: Comp(Proj(1, b, m), Pair(self.arrow(a, b, d), self.arrow(a, m, d)))))
            out.append((0.7, lambda m=m: Comp(Proj(2, m, b), Pair(self.arrow(a, m, d), self.arrow(a, b, d)))))
            out.append(
                (
                    0.7,
                    lambda m=m: Comp(
                        Eval(m, b),
                        Pair(self.arrow(a, m, d), Curry(m, a, self.arrow(Prod(m, a), b, d))),
                    ),
                )
            )
        for x, y in self._implications(a):
            if inh(Prod(a, y), b):
                out.append((1.0, lambda x=x, y=y: self._modus_ponens(a, b, x, y, d)))
        if not out:
            out.append((1.0, lambda: self.canonical(a, b)))
        return out

    def _implications(self, a):
        """Usable hypotheses ``x -> y`` in ``a`` whose conclusion adds something new."""
        have = decompose(a)
        for e in sorted(have, key=str):
            if isinstance(e, Exp) and not decompose(e.codomain) <= have and self.inhabited(a, e.domain):
                yield e.domain, e.codomain

    def _modus_ponens(self, a, b, x, y, d):
        use = Comp(Eval(x, y), Pair(self.arrow(a, x, d), self.arrow(a, Exp(x, y), d)))
        return Comp(self.arrow(Prod(a, y), b, d), Pair(Id(a), use))

    # deterministic completion

    def canonical(self, a: ObjectExpr, b: ObjectExpr) -> ArrowExpr:
        """Some arrow ``a |- b``, found by goal-directed proof search."""
        out = self._search(a, b, frozenset())
        if out is None:
            raise ValueError(f"no arrow {a} |- {b}")
        return out

    def _search(self, a, b, stack):
        if isinstance(b, Terminal):
            return Bang(a)
        if isinstance(b, Prod):
            left = self._search(a, b.left, stack)
            right = left and self._search(a, b.right, stack)
            return right and Pair(left, right)
        if isinstance(b, Exp):
            body = self._search(Prod(b.domain, a), b.codomain, stack)
            return body and Curry(b.domain, a, body)
        path = self.project(a, b)
        if path is not None:
            return path
        have = decompose(a)
        key = (have, b)
        if key in stack or not self.inhabited(a, b):
            return None
        stack = stack | {key}
        # hypotheses strictly grow on each use, so only same-context goals can cycle
        for x, y in self._implications(a):
            premise = self._search(a, x, stack)
            rest = premise and self._search(Prod(a, y), b, stack)
            if rest:
                use = Comp(Eval(x, y), Pair(premise, self.project(a, Exp(x, y))))
                return Comp(rest, Pair(Id(a), use))
        axioms = [(Const(name), ty.source, ty.target) for name, ty in sorted(self.sig.arrows.items())]
        if self.poly:
            axioms.append((Indet(self.sig.indet_name), T, self.sig.D))
        for head, x, y in axioms:
            if decompose(y) <= have:
                continue
            premise = self._search(a, x, stack)
            rest = premise and self._search(Prod(a, y), b, stack)
            if rest:
                return Comp(rest, Pair(Id(a), Comp(head, premise)))
        return None

    def project(self, a: ObjectExpr, b: ObjectExpr) -> Optional[ArrowExpr]:
        """Projection path from ``a`` down to a component equal to ``b``, if any."""
        if a == b:
            return Id(a)
        if isinstance(a, Prod):
            for i, part in ((1, a.left), (2, a.right)):
                inner = self.project(part, b)
                if inner is not None:
                    p = Proj(i, a.left, a.right)
                    return p if isinstance(inner, Id) else Comp(inner, p)
        return None
