"""Randomized checks of the equational laws, collected into a :class:`Report`.

Each law draws its cases from its own generator seeded by ``"{seed}:{law}"``,
so a law's cases depend only on the configuration and not on which other
laws ran or in what order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .completeness import functor_F, functor_G, gamma_double, gamma_prime, phi_double, phi_prime
from .errors import CCCError
from .generate import GenConfig, TermGenerator
from .normal_form import arrows_equal
from .poly import heritage, instantiate, poly_equal
from .rewrite import random_rewrite
from .syntax import (
    ArrowType,
    Bang,
    Comp,
    Curry,
    Exp,
    Id,
    Indet,
    Pair,
    Prod,
    Proj,
    Signature,
    T,
    arrow_map,
    phi,
    size,
    times,
    type_of,
)
from .text import print_arrow

MAX_COUNTEREXAMPLES = 3


@dataclass
class LawResult:
    name: str
    group: str
    cases: int = 0
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0


@dataclass
class Report:
    seed: int
    max_depth: int
    case_count: int
    results: list[LawResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def group(self, group: str) -> list[LawResult]:
        return [r for r in self.results if r.group == group]

    def to_text(self) -> str:
        """One ``key: value`` record per law, records separated by blank lines."""
        lines = ["record: run", f"seed: {self.seed}", f"max_depth: {self.max_depth}", f"case_count: {self.case_count}"]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"status: {'pass' if self.passed else 'fail'}")
        for r in self.results:
            lines += ["", "record: law", f"name: {r.name}", f"group: {r.group}", f"cases: {r.cases}", f"failures: {r.failures}"]
            lines += [f"counterexample: {c}" for c in r.counterexamples]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Report":
        report = None
        current = None
        for raw in text.splitlines():
            if not raw.strip():
                continue
            key, _, value = raw.partition(": ")
            if key == "record":
                current = None
                if value == "law":
                    current = LawResult("", "")
                    report.results.append(current)
                elif value == "run":
                    report = cls(0, 0, 0)
            elif current is None:
                if key in ("seed", "max_depth", "case_count"):
                    setattr(report, key, int(value))
                elif key == "note":
                    report.notes.append(value)
            elif key in ("name", "group"):
                setattr(current, key, value)
            elif key in ("cases", "failures"):
                setattr(current, key, int(value))
            elif key == "counterexample":
                current.counterexamples.append(value)
        if report is None:
            raise ValueError("no run record found")
        return report


# case context


class _Case:
    """Generators and helpers shared by the cases of one law."""

    def __init__(self, sig: Signature, rng: random.Random, cfg: GenConfig):
        self.sig = sig
        self.rng = rng
        self.cfg = cfg
        self.k = TermGenerator(sig, rng, poly=False, max_object_depth=cfg.max_object_depth)
        self.p = TermGenerator(sig, rng, poly=True, max_object_depth=cfg.max_object_depth)
        self.D = sig.D

    def depth(self) -> int:
        return self.rng.randint(1, self.cfg.max_depth)

    def obj(self):
        return self.k.object()

    def draw(self, gen: TermGenerator, source=None, target=None, tries: int = 100):
        """Random arrow whose source and target come from the given callables (or random objects)."""
        for _ in range(tries):
            a = source() if callable(source) else (source if source is not None else gen.object())
            b = target() if callable(target) else (target if target is not None else gen.object())
            if gen.inhabited(a, b):
                return gen.arrow(a, b, self.depth())
        # a fixed end can always be reached from a product containing it
        fixed_src = source is not None and not callable(source)
        if target is not None and not callable(target) and source is None:
            return gen.arrow(Prod(gen.object(), target), target, self.depth())
        if fixed_src and target is None:
            return gen.arrow(source, Prod(source, T), self.depth())
        raise ValueError(f"could not draw an arrow with source={source} target={target}")

    def src(self, f):
        return type_of(f, self.sig).source

    def tgt(self, f):
        return type_of(f, self.sig).target

    def eq(self, f, g) -> bool:
        return arrows_equal(f, g, self.sig)


_LAWS: list[tuple[str, str, Callable]] = []


def law(group: str):
    def register(fn):
        _LAWS.append((fn.__name__, group, fn))
        return fn

    return register


# categorial and CC equalities, on arrows of K


@law("equality")
def id_left(c: _Case):
    f = c.draw(c.k)
    return c.eq(Comp(Id(c.tgt(f)), f), f), (f,)


@law("equality")
def id_right(c: _Case):
    f = c.draw(c.k)
    return c.eq(Comp(f, Id(c.src(f))), f), (f,)


@law("equality")
def associativity(c: _Case):
    f = c.draw(c.k)
    g = c.draw(c.k, source=c.tgt(f))
    h = c.draw(c.k, source=c.tgt(g))
    return c.eq(Comp(h, Comp(g, f)), Comp(Comp(h, g), f)), (h, g, f)


@law("equality")
def terminal_eta(c: _Case):
    f = c.draw(c.k, target=T)
    return c.eq(f, Bang(c.src(f))), (f,)


@law("equality")
def product_beta(c: _Case):
    f1 = c.draw(c.k)
    f2 = c.draw(c.k, source=c.src(f1))
    i = c.rng.choice((1, 2))
    lhs = Comp(Proj(i, c.tgt(f1), c.tgt(f2)), Pair(f1, f2))
    return c.eq(lhs, f1 if i == 1 else f2), (f1, f2)


@law("equality")
def product_eta(c: _Case):
    h = c.draw(c.k, target=lambda: Prod(c.obj(), c.obj()))
    ty = c.tgt(h)
    lhs = Pair(Comp(Proj(1, ty.left, ty.right), h), Comp(Proj(2, ty.left, ty.right), h))
    return c.eq(lhs, h), (h,)


@law("equality")
def exponential_beta(c: _Case):
    f = c.draw(c.k, source=lambda: Prod(c.obj(), c.obj()))
    a, ctx = c.src(f).left, c.src(f).right
    return c.eq(phi(Curry(a, ctx, f), c.sig), f), (f,)


@law("equality")
def exponential_eta(c: _Case):
    g = c.draw(c.k, target=lambda: Exp(c.obj(), c.obj()))
    return c.eq(Curry(c.tgt(g).domain, c.src(g), phi(g, c.sig)), g), (g,)


# abstraction against x and application to x are inverse


def _rewritten(c: _Case, f):
    return random_rewrite(f, c.sig, c.rng, n=c.rng.randint(1, 4), max_size=size(f) + 12)


@law("bijection")
def abstraction_respects_equality(c: _Case):
    f = c.draw(c.p)
    g = _rewritten(c, f)
    ok = poly_equal(f, g, c.sig) and c.eq(phi_prime(f, c.sig), phi_prime(g, c.sig))
    return ok, (f, g)


@law("bijection")
def apply_after_abstract(c: _Case):
    f = c.draw(c.p)
    return poly_equal(gamma_prime(phi_prime(f, c.sig), c.sig), f, c.sig), (f,)


@law("bijection")
def abstract_after_apply(c: _Case):
    f = c.draw(c.k, source=lambda: Prod(c.D, c.obj()))
    return c.eq(phi_prime(gamma_prime(f, c.sig), c.sig), f), (f,)


# the two adjunctions


@law("adjunction")
def left_composition(c: _Case):
    f = c.draw(c.p)
    g = c.draw(c.p, source=c.tgt(f))
    lhs = phi_prime(Comp(g, f), c.sig)
    return c.eq(lhs, Comp(phi_prime(g, c.sig), functor_F(f, c.sig))), (g, f)


@law("adjunction")
def left_heritage(c: _Case):
    f = c.draw(c.k)
    lhs = gamma_prime(Comp(f, phi_prime(Id(c.src(f)), c.sig)), c.sig)
    return poly_equal(lhs, heritage(f), c.sig), (f,)


@law("adjunction")
def right_beta(c: _Case):
    f = c.draw(c.p)
    return poly_equal(phi_double(gamma_double(f, c.sig), c.sig), f, c.sig), (f,)


@law("adjunction")
def right_eta(c: _Case):
    g = c.draw(c.k, target=lambda: Exp(c.D, c.obj()))
    return c.eq(gamma_double(phi_double(g, c.sig), c.sig), g), (g,)


@law("adjunction")
def right_composition_gamma(c: _Case):
    f = c.draw(c.p)
    g = c.draw(c.p, source=c.tgt(f))
    lhs = gamma_double(Comp(g, f), c.sig)
    return c.eq(lhs, Comp(functor_G(g, c.sig), gamma_double(f, c.sig))), (g, f)


@law("adjunction")
def right_composition_phi(c: _Case):
    g = c.draw(c.k, target=lambda: Exp(c.D, c.obj()))
    f = c.draw(c.k, target=c.src(g))
    lhs = phi_double(Comp(g, f), c.sig)
    rhs = Comp(phi_double(g, c.sig), heritage(f))
    return poly_equal(lhs, rhs, c.sig), (g, f)


@law("adjunction")
def right_heritage(c: _Case):
    f = c.draw(c.k)
    lhs = phi_double(Comp(gamma_double(Id(c.tgt(f)), c.sig), f), c.sig)
    return poly_equal(lhs, heritage(f), c.sig), (f,)


@law("adjunction")
def functor_F_identity(c: _Case):
    a = c.obj()
    return c.eq(functor_F(Id(a), c.sig), Id(Prod(c.D, a))), (Id(a),)


@law("adjunction")
def functor_F_composition(c: _Case):
    f = c.draw(c.p)
    g = c.draw(c.p, source=c.tgt(f))
    rhs = Comp(functor_F(g, c.sig), functor_F(f, c.sig))
    return c.eq(functor_F(Comp(g, f), c.sig), rhs), (g, f)


@law("adjunction")
def functor_G_identity(c: _Case):
    a = c.obj()
    return c.eq(functor_G(Id(a), c.sig), Id(Exp(c.D, a))), (Id(a),)


@law("adjunction")
def functor_G_composition(c: _Case):
    f = c.draw(c.p)
    g = c.draw(c.p, source=c.tgt(f))
    rhs = Comp(functor_G(g, c.sig), functor_G(f, c.sig))
    return c.eq(functor_G(Comp(g, f), c.sig), rhs), (g, f)


# composite adjunction and naturality


@law("composite")
def composite_FH(c: _Case):
    f = c.draw(c.k)
    return c.eq(functor_F(heritage(f), c.sig), times(Id(c.D), f, c.sig)), (f,)


@law("composite")
def composite_GH(c: _Case):
    f = c.draw(c.k)
    return c.eq(functor_G(heritage(f), c.sig), arrow_map(Id(c.D), f, c.sig)), (f,)


@law("composite")
def exp_bijection(c: _Case):
    f = c.draw(c.k, source=lambda: Prod(c.D, c.obj()))
    g = c.draw(c.k, target=lambda: Exp(c.D, c.obj()))
    a = c.src(f).right
    ok = c.eq(phi(Curry(c.D, a, f), c.sig), f) and c.eq(Curry(c.D, c.src(g), phi(g, c.sig)), g)
    return ok, (f, g)


@law("composite")
def naturality_A(c: _Case):
    # curry(f . (1_D x u)) = curry(f) . u
    f = c.draw(c.k, source=lambda: Prod(c.D, c.obj()))
    a = c.src(f).right
    u = c.draw(c.k, target=a)
    lhs = Curry(c.D, c.src(u), Comp(f, times(Id(c.D), u, c.sig)))
    return c.eq(lhs, Comp(Curry(c.D, a, f), u)), (f, u)


@law("composite")
def naturality_B(c: _Case):
    # curry(v . f) = (1_D -> v) . curry(f)
    f = c.draw(c.k, source=lambda: Prod(c.D, c.obj()))
    v = c.draw(c.k, source=c.tgt(f))
    a = c.src(f).right
    lhs = Curry(c.D, a, Comp(v, f))
    return c.eq(lhs, Comp(arrow_map(Id(c.D), v, c.sig), Curry(c.D, a, f))), (f, v)


@law("composite")
def left_naturality(c: _Case):
    # application to x is natural in both arguments: v . f . (1_D x u) goes to v . f(x) . u
    f = c.draw(c.k, source=lambda: Prod(c.D, c.obj()))
    u = c.draw(c.k, target=c.src(f).right)
    v = c.draw(c.k, source=c.tgt(f))
    lhs = gamma_prime(Comp(v, Comp(f, times(Id(c.D), u, c.sig))), c.sig)
    rhs = Comp(heritage(v), Comp(gamma_prime(f, c.sig), heritage(u)))
    return poly_equal(lhs, rhs, c.sig), (f, u, v)


@law("composite")
def right_naturality(c: _Case):
    f = c.draw(c.p)
    u = c.draw(c.k, target=c.src(f))
    v = c.draw(c.k, source=c.tgt(f))
    lhs = gamma_double(Comp(heritage(v), Comp(f, heritage(u))), c.sig)
    rhs = Comp(arrow_map(Id(c.D), v, c.sig), Comp(gamma_double(f, c.sig), u))
    return c.eq(lhs, rhs), (f, u, v)


# universal property of K[x]


@law("universal")
def instantiate_point(c: _Case):
    a = c.draw(c.k, source=T, target=c.D)
    return instantiate(Indet(c.sig.indet_name), a, c.sig) == a, (a,)


@law("universal")
def instantiate_heritage(c: _Case):
    a = c.draw(c.k, source=T, target=c.D)
    f = c.draw(c.k)
    return instantiate(heritage(f), a, c.sig) == f, (f, a)


@law("universal")
def instantiate_respects(c: _Case):
    a = c.draw(c.k, source=T, target=c.D)
    f = c.draw(c.p)
    # alternate between rewrite chains and abstract-then-apply round trips
    g = _rewritten(c, f) if c.rng.random() < 0.5 else gamma_prime(phi_prime(f, c.sig), c.sig)
    ok = poly_equal(f, g, c.sig) and c.eq(instantiate(f, a, c.sig), instantiate(g, a, c.sig))
    return ok, (f, g, a)


UNIVERSAL = "universal"


def law_names() -> list[str]:
    return [name for name, _, _ in _LAWS]


def with_point(sig: Signature) -> tuple[Signature, str | None]:
    """``sig`` itself if it has an arrow ``T |- D``; otherwise ``sig`` plus a fresh constant of that type."""
    if TermGenerator(sig, random.Random(0)).inhabited(T, sig.D):
        return sig, None
    taken = set(sig.objects) | set(sig.arrows) | {sig.indet_name}
    name = next(n for n in (f"pt{i}" if i else "pt" for i in range(len(taken) + 1)) if n not in taken)
    arrows = dict(sig.arrows)
    arrows[name] = ArrowType(T, sig.D)
    return Signature(sorted(sig.objects), arrows, sig.indeterminate), name


def law_suite(sig: Signature, gen: GenConfig = GenConfig(), only=None) -> Report:
    """Run every law (or those named in ``only``) on ``gen.case_count`` random cases."""
    report = Report(gen.seed, gen.max_depth, gen.case_count)
    sig.D  # raises NoIndeterminate early
    pointed, extra = with_point(sig)
    if extra is not None:
        report.notes.append(f"universal laws use the added constant {extra} : T |- {sig.D}")
    for name, group, check in _LAWS:
        if only is not None and name not in only:
            continue
        rng = random.Random(f"{gen.seed}:{name}")
        case = _Case(pointed if group == UNIVERSAL else sig, rng, gen)
        result = LawResult(name, group)
        for _ in range(gen.case_count):
            result.cases += 1
            witness = ()
            try:
                ok, witness = check(case)
            except (CCCError, ValueError) as exc:
                ok = False
                witness = (f"error: {exc}",)
            if not ok:
                result.failures += 1
                if len(result.counterexamples) < MAX_COUNTEREXAMPLES:
                    result.counterexamples.append(" ; ".join(w if isinstance(w, str) else print_arrow(w) for w in witness))
        report.results.append(result)
    return report
