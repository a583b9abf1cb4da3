"""Objects, arrow terms, signatures and typing for free cartesian closed categories.

Objects are built from the terminal ``T``, declared atoms, binary products
and exponentials.  Arrow terms carry every object index explicitly, so
:func:`type_of` is a single bottom-up pass with no unification.  A term that
mentions the indeterminate (an :class:`Indet` leaf) is an arrow of the
polynomial extension; there is no separate class for those.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .errors import BadIndeterminateType, DuplicateName, NoIndeterminate, TypeMismatch, UnknownIdentifier


# Objects


class _Show:
    __slots__ = ()

    def __str__(self):
        from .text import show

        return show(self)


@dataclass(frozen=True, slots=True)
class Terminal(_Show):
    pass


@dataclass(frozen=True, slots=True)
class Atom(_Show):
    name: str


@dataclass(frozen=True, slots=True)
class Prod(_Show):
    left: "ObjectExpr"
    right: "ObjectExpr"


@dataclass(frozen=True, slots=True)
class Exp(_Show):
    domain: "ObjectExpr"
    codomain: "ObjectExpr"


ObjectExpr = Union[Terminal, Atom, Prod, Exp]
T = Terminal()


# Arrows


@dataclass(frozen=True, slots=True)
class Const(_Show):
    name: str


@dataclass(frozen=True, slots=True)
class Indet(_Show):
    name: str


@dataclass(frozen=True, slots=True)
class Id(_Show):
    at: ObjectExpr


@dataclass(frozen=True, slots=True)
class Bang(_Show):
    """The unique arrow ``k_A : A |- T``."""

    at: ObjectExpr


@dataclass(frozen=True, slots=True)
class Proj(_Show):
    index: int
    left: ObjectExpr
    right: ObjectExpr

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError(f"projection index must be 1 or 2, got {self.index}")


@dataclass(frozen=True, slots=True)
class Eval(_Show):
    """``eps_{A,B} : A*(A->B) |- B``."""

    dom: ObjectExpr
    cod: ObjectExpr


@dataclass(frozen=True, slots=True)
class Comp(_Show):
    after: "ArrowExpr"
    before: "ArrowExpr"


@dataclass(frozen=True, slots=True)
class Pair(_Show):
    fst: "ArrowExpr"
    snd: "ArrowExpr"


@dataclass(frozen=True, slots=True)
class Curry(_Show):
    """``gamma_{A,C} f : C |- A->B`` for ``f : A*C |- B``."""

    dom: ObjectExpr
    ctx: ObjectExpr
    body: "ArrowExpr"


ArrowExpr = Union[Const, Indet, Id, Bang, Proj, Eval, Comp, Pair, Curry]
PolyArrow = ArrowExpr
LEAVES = (Const, Indet, Id, Bang, Proj, Eval)


@dataclass(frozen=True, slots=True)
class ArrowType:
    source: ObjectExpr
    target: ObjectExpr

    def __str__(self):
        from .text import show

        return f"{show(self.source)} |- {show(self.target)}"


class Signature:
    """Declared atoms, typed arrow constants and at most one indeterminate ``x : T |- D``."""

    def __init__(
        self,
        objects=(),
        arrows: Optional[Mapping[str, ArrowType]] = None,
        indeterminate: Optional[tuple[str, ObjectExpr]] = None,
    ):
        atoms: list[str] = []
        for name in objects:
            if name in atoms:
                raise DuplicateName(name)
            atoms.append(name)
        self.objects = frozenset(atoms)
        arrows = dict(arrows or {})
        for name, ty in arrows.items():
            if name in self.objects:
                raise DuplicateName(name)
            self.check_object(ty.source)
            self.check_object(ty.target)
        self.arrows: Mapping[str, ArrowType] = arrows
        if indeterminate is not None:
            name, target = indeterminate
            if name in arrows or name in self.objects:
                raise DuplicateName(name)
            self.check_object(target)
        self.indeterminate = indeterminate

    def __repr__(self):
        return (
            f"Signature(objects={sorted(self.objects)!r}, arrows={dict(self.arrows)!r}, "
            f"indeterminate={self.indeterminate!r})"
        )

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.objects, dict(self.arrows), self.indeterminate) == (
            other.objects,
            dict(other.arrows),
            other.indeterminate,
        )

    def __hash__(self):
        return hash((self.objects, tuple(sorted(self.arrows.items(), key=lambda kv: kv[0])), self.indeterminate))

    @classmethod
    def with_indeterminate(cls, objects, arrows, name, source, target):
        if source != T:
            raise BadIndeterminateType(f"indeterminate {name!r} must have source T, got {source}")
        return cls(objects, arrows, (name, target))

    def check_object(self, obj: ObjectExpr):
        if isinstance(obj, Atom):
            if obj.name not in self.objects:
                raise UnknownIdentifier(obj.name, "object")
        elif isinstance(obj, (Prod, Exp)):
            self.check_object(obj.left if isinstance(obj, Prod) else obj.domain)
            self.check_object(obj.right if isinstance(obj, Prod) else obj.codomain)
        elif not isinstance(obj, Terminal):
            raise TypeError(f"not an object: {obj!r}")

    @property
    def indet_name(self) -> str:
        if self.indeterminate is None:
            raise NoIndeterminate()
        return self.indeterminate[0]

    @property
    def D(self) -> ObjectExpr:
        if self.indeterminate is None:
            raise NoIndeterminate()
        return self.indeterminate[1]

    def without_indeterminate(self) -> "Signature":
        return Signature(sorted(self.objects), self.arrows)


# Typing


def type_of(term: ArrowExpr, sig: Signature, memo: Optional[dict] = None) -> ArrowType:
    """Type of a (possibly polynomial) arrow term, computed bottom-up.

    ``memo`` maps ``id(subterm)`` to its type and may be shared by callers
    that ask for the types of many subterms of the same tree.
    """
    if memo is not None:
        hit = memo.get(id(term))
        if hit is not None:
            return hit
    ty = _infer(term, sig, memo)
    if memo is not None:
        memo[id(term)] = ty
    return ty


def _infer(t, sig, memo):
    if isinstance(t, Const):
        try:
            return sig.arrows[t.name]
        except KeyError:
            raise UnknownIdentifier(t.name, "arrow") from None
    if isinstance(t, Indet):
        if sig.indeterminate is None or sig.indeterminate[0] != t.name:
            raise UnknownIdentifier(t.name, "indeterminate")
        return ArrowType(T, sig.indeterminate[1])
    if isinstance(t, Id):
        sig.check_object(t.at)
        return ArrowType(t.at, t.at)
    if isinstance(t, Bang):
        sig.check_object(t.at)
        return ArrowType(t.at, T)
    if isinstance(t, Proj):
        sig.check_object(t.left)
        sig.check_object(t.right)
        return ArrowType(Prod(t.left, t.right), t.left if t.index == 1 else t.right)
    if isinstance(t, Eval):
        sig.check_object(t.dom)
        sig.check_object(t.cod)
        return ArrowType(Prod(t.dom, Exp(t.dom, t.cod)), t.cod)
    if isinstance(t, Comp):
        f = type_of(t.before, sig, memo)
        g = type_of(t.after, sig, memo)
        if f.target != g.source:
            raise TypeMismatch(
                f"cannot compose: {t.before} targets {f.target} but {t.after} expects {g.source}",
                t,
                g.source,
                f.target,
            )
        return ArrowType(f.source, g.target)
    if isinstance(t, Pair):
        f1 = type_of(t.fst, sig, memo)
        f2 = type_of(t.snd, sig, memo)
        if f1.source != f2.source:
            raise TypeMismatch(
                f"pair components have different sources {f1.source} and {f2.source}",
                t,
                f1.source,
                f2.source,
            )
        return ArrowType(f1.source, Prod(f1.target, f2.target))
    if isinstance(t, Curry):
        sig.check_object(t.dom)
        sig.check_object(t.ctx)
        f = type_of(t.body, sig, memo)
        want = Prod(t.dom, t.ctx)
        if f.source != want:
            raise TypeMismatch(f"curry body must have source {want}, got {f.source}", t, want, f.source)
        return ArrowType(t.ctx, Exp(t.dom, f.target))
    raise TypeError(f"not an arrow term: {t!r}")


def contains_indet(term: ArrowExpr) -> bool:
    if isinstance(term, Indet):
        return True
    if isinstance(term, Comp):
        return contains_indet(term.after) or contains_indet(term.before)
    if isinstance(term, Pair):
        return contains_indet(term.fst) or contains_indet(term.snd)
    if isinstance(term, Curry):
        return contains_indet(term.body)
    return False


def size(term: ArrowExpr) -> int:
    """Number of arrow-term nodes (objects are not counted)."""
    if isinstance(term, (Comp, Pair)):
        a, b = (term.after, term.before) if isinstance(term, Comp) else (term.fst, term.snd)
        return 1 + size(a) + size(b)
    if isinstance(term, Curry):
        return 1 + size(term.body)
    return 1


# Derived combinators


def times(f: ArrowExpr, g: ArrowExpr, sig: Signature) -> ArrowExpr:
    """``f x g = <f . p1[A,C], g . p2[A,C]>`` for ``f : A |- B`` and ``g : C |- D``."""
    a = type_of(f, sig).source
    c = type_of(g, sig).source
    return Pair(Comp(f, Proj(1, a, c)), Comp(g, Proj(2, a, c)))


def arrow_map(f: ArrowExpr, g: ArrowExpr, sig: Signature) -> ArrowExpr:
    """``f -> g : B->C |- A->D`` for ``f : A |- B`` and ``g : C |- D``."""
    ft = type_of(f, sig)
    gt = type_of(g, sig)
    a, b = ft.source, ft.target
    c = gt.source
    bc = Exp(b, c)
    return Curry(a, bc, Comp(g, Comp(Eval(b, c), times(f, Id(bc), sig))))


def phi(g: ArrowExpr, sig: Signature) -> ArrowExpr:
    """Uncurry: ``eps[A,B] . (id[A] x g) : A*C |- B`` for ``g : C |- A->B``."""
    gt = type_of(g, sig)
    if not isinstance(gt.target, Exp):
        raise TypeMismatch(f"phi needs an arrow into an exponential, got {gt}", g, None, gt.target)
    a, b = gt.target.domain, gt.target.codomain
    return Comp(Eval(a, b), times(Id(a), g, sig))


def assoc_left(a: ObjectExpr, b: ObjectExpr, c: ObjectExpr) -> ArrowExpr:
    """``(A*B)*C |- A*(B*C)``."""
    ab = Prod(a, b)
    return Pair(
        Comp(Proj(1, a, b), Proj(1, ab, c)),
        Pair(Comp(Proj(2, a, b), Proj(1, ab, c)), Comp(Id(c), Proj(2, ab, c))),
    )


def assoc_right(a: ObjectExpr, b: ObjectExpr, c: ObjectExpr) -> ArrowExpr:
    """``A*(B*C) |- (A*B)*C``."""
    bc = Prod(b, c)
    return Pair(
        Pair(Comp(Id(a), Proj(1, a, bc)), Comp(Proj(1, b, c), Proj(2, a, bc))),
        Comp(Proj(2, b, c), Proj(2, a, bc)),
    )


def swap(a: ObjectExpr, b: ObjectExpr) -> ArrowExpr:
    return Pair(Proj(2, a, b), Proj(1, a, b))


def derived(kind: str, *args, sig: Optional[Signature] = None) -> ArrowExpr:
    """Literal expansion of a derived combinator.

    ``times``, ``arrow`` and ``phi`` take arrows and need ``sig`` to read off
    their types; ``assoc_left``, ``assoc_right`` and ``swap`` take objects.
    """
    if kind in ("times", "arrow", "phi"):
        if sig is None:
            raise TypeError(f"derived({kind!r}) needs a signature")
        fn = {"times": times, "arrow": arrow_map, "phi": phi}[kind]
        out = fn(*args, sig)
    elif kind == "assoc_left":
        out = assoc_left(*args)
    elif kind == "assoc_right":
        out = assoc_right(*args)
    elif kind == "swap":
        out = swap(*args)
    else:
        raise ValueError(f"unknown derived combinator {kind!r}")
    if sig is not None:
        type_of(out, sig)
    return out
