"""Concrete syntax for signatures, objects, arrow terms and lambda terms.

Objects::

    obj  ::= prod ('->' obj)?              -> is right-associative
    prod ::= base ('*' base)*              * binds tighter, left-associative
    base ::= 'T' | NAME | '(' obj ')'

Arrows (``.`` is composition, right operand applied first)::

    term ::= atom ('.' term)?
    atom ::= 'id[' obj ']' | 'k[' obj ']' | 'p1[' obj ',' obj ']' | 'p2[' obj ',' obj ']'
           | 'eps[' obj ',' obj ']' | 'curry[' obj ',' obj '](' term ')'
           | '<' term ',' term '>' | '(' term ')' | NAME

Signature files hold one declaration per line (``#`` starts a comment)::

    object D A
    arrow f : A |- D
    indeterminate x : T |- D
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import BadIndeterminateType, DuplicateName, ParseError, UnknownIdentifier
from .lam import Abs, App, ConstT, Fst, PairT, Snd, Unit, Var
from .syntax import (
    ArrowExpr,
    ArrowType,
    Atom,
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
    T,
    Terminal,
    type_of,
)

RESERVED = frozenset({"T", "id", "k", "p1", "p2", "eps", "curry", "object", "arrow", "indeterminate"})

_UNICODE = {"⊢": "|-", "→": "->", "×": "*", "∘": ".", "⟨": "<", "⟩": ">"}
_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>->|\|-|[\[\](),<>.*:])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    for u, a in _UNICODE.items():
        text = text.replace(u, a)
    tokens = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, pos - start + 1))
            line += 1
            start = m.end()
        elif kind in ("name", "sym"):
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        found = repr(tok.text) if tok.kind != "eof" else "end of input"
        raise ParseError(f"{msg}, found {found}", tok.line, tok.column)

    def at(self, text):
        return self.tok.kind == "sym" and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            self.fail(f"expected {text!r}")
        self.pos += 1

    def name(self):
        tok = self.tok
        if tok.kind != "name":
            self.fail("expected a name")
        self.pos += 1
        return tok

    def skip_newlines(self):
        while self.tok.kind == "nl":
            self.pos += 1

    def end(self):
        self.skip_newlines()
        if self.tok.kind != "eof":
            self.fail("unexpected trailing input")

    # objects

    def obj(self):
        left = self.prod()
        if self.at("->"):
            self.pos += 1
            return Exp(left, self.obj())
        return left

    def prod(self):
        left = self.base()
        while self.at("*"):
            self.pos += 1
            left = Prod(left, self.base())
        return left

    def base(self):
        if self.at("("):
            self.pos += 1
            inner = self.obj()
            self.expect(")")
            return inner
        tok = self.name()
        if tok.text == "T":
            return T
        if tok.text in RESERVED:
            self.fail("expected an object", tok)
        return Atom(tok.text)

    def obj_args(self, n):
        self.expect("[")
        out = [self.obj()]
        for _ in range(n - 1):
            self.expect(",")
            out.append(self.obj())
        self.expect("]")
        return out

    # arrows

    def term(self, indet_name):
        left = self.atom(indet_name)
        if self.at("."):
            self.pos += 1
            return Comp(left, self.term(indet_name))
        return left

    def atom(self, indet_name):
        if self.at("<"):
            self.pos += 1
            a = self.term(indet_name)
            self.expect(",")
            b = self.term(indet_name)
            self.expect(">")
            return Pair(a, b)
        if self.at("("):
            self.pos += 1
            inner = self.term(indet_name)
            self.expect(")")
            return inner
        tok = self.name()
        word = tok.text
        if word == "id":
            return Id(*self.obj_args(1))
        if word == "k":
            return Bang(*self.obj_args(1))
        if word in ("p1", "p2"):
            return Proj(int(word[1]), *self.obj_args(2))
        if word == "eps":
            return Eval(*self.obj_args(2))
        if word == "curry":
            dom, ctx = self.obj_args(2)
            self.expect("(")
            body = self.term(indet_name)
            self.expect(")")
            return Curry(dom, ctx, body)
        if word in RESERVED:
            self.fail("expected an arrow term", tok)
        if word == indet_name:
            return Indet(word)
        return Const(word)


def parse_object(text: str, sig: Signature | None = None):
    p = _Parser(tokenize(text))
    obj = p.obj()
    p.end()
    if sig is not None:
        sig.check_object(obj)
    return obj


def parse_arrow(text: str, sig: Signature) -> ArrowExpr:
    """Parse and type-check an arrow term; it is polynomial iff it mentions the indeterminate."""
    indet_name = sig.indeterminate[0] if sig.indeterminate is not None else None
    p = _Parser(tokenize(text))
    p.skip_newlines()
    term = p.term(indet_name)
    p.end()
    type_of(term, sig)
    return term


def parse_signature(text: str) -> Signature:
    p = _Parser(tokenize(text))
    atoms: list[str] = []
    arrows: dict[str, ArrowType] = {}
    indet = None
    seen: dict[str, int] = {}
    pending = []

    def declare(tok):
        if tok.text in RESERVED:
            raise ParseError(f"{tok.text!r} is a reserved word", tok.line, tok.column)
        if tok.text in seen:
            raise DuplicateName(tok.text, tok.line)
        seen[tok.text] = tok.line

    while True:
        p.skip_newlines()
        if p.tok.kind == "eof":
            break
        head = p.name()
        if head.text == "object":
            if p.tok.kind != "name":
                p.fail("expected a name")
            while p.tok.kind == "name":
                tok = p.name()
                declare(tok)
                atoms.append(tok.text)
        elif head.text in ("arrow", "indeterminate"):
            name = p.name()
            declare(name)
            p.expect(":")
            source = p.obj()
            p.expect("|-")
            target = p.obj()
            if head.text == "arrow":
                arrows[name.text] = ArrowType(source, target)
            else:
                if indet is not None:
                    raise ParseError("at most one indeterminate may be declared", head.line, head.column)
                if source != T:
                    raise BadIndeterminateType(
                        f"line {head.line}: indeterminate {name.text!r} must have source T, got {show(source)}"
                    )
                indet = (name.text, target)
            pending.append((head, source, target))
        else:
            p.fail("expected 'object', 'arrow' or 'indeterminate'", head)
        if p.tok.kind not in ("nl", "eof"):
            p.fail("expected end of line")
    for head, source, target in pending:
        for obj in (source, target):
            for name in _atom_names(obj):
                if name not in atoms:
                    raise UnknownIdentifier(name, f"object (line {head.line})")
    return Signature(atoms, arrows, indet)


def _atom_names(obj):
    if isinstance(obj, Atom):
        yield obj.name
    elif isinstance(obj, Prod):
        yield from _atom_names(obj.left)
        yield from _atom_names(obj.right)
    elif isinstance(obj, Exp):
        yield from _atom_names(obj.domain)
        yield from _atom_names(obj.codomain)


# Printing


def show_object(o, prec: int = 0) -> str:
    if isinstance(o, Terminal):
        return "T"
    if isinstance(o, Atom):
        return o.name
    if isinstance(o, Prod):
        s = f"{show_object(o.left, 1)}*{show_object(o.right, 2)}"
        return f"({s})" if prec > 1 else s
    if isinstance(o, Exp):
        s = f"{show_object(o.domain, 1)}->{show_object(o.codomain, 0)}"
        return f"({s})" if prec > 0 else s
    raise TypeError(f"not an object: {o!r}")


def print_arrow(t, prec: int = 0) -> str:
    if isinstance(t, (Const, Indet)):
        return t.name
    if isinstance(t, Id):
        return f"id[{show_object(t.at)}]"
    if isinstance(t, Bang):
        return f"k[{show_object(t.at)}]"
    if isinstance(t, Proj):
        return f"p{t.index}[{show_object(t.left)},{show_object(t.right)}]"
    if isinstance(t, Eval):
        return f"eps[{show_object(t.dom)},{show_object(t.cod)}]"
    if isinstance(t, Pair):
        return f"<{print_arrow(t.fst)}, {print_arrow(t.snd)}>"
    if isinstance(t, Curry):
        return f"curry[{show_object(t.dom)},{show_object(t.ctx)}]({print_arrow(t.body)})"
    if isinstance(t, Comp):
        s = f"{print_arrow(t.after, 1)} . {print_arrow(t.before, 0)}"
        return f"({s})" if prec > 0 else s
    raise TypeError(f"not an arrow term: {t!r}")


def show_lambda(t, prec: int = 0, depth: int = 0) -> str:
    """Lambda term with binders named ``v<level>``.

    ``prec`` is 0 anywhere, 1 in function position, 2 in argument position.
    """
    if isinstance(t, Var):
        return f"v{t.level}"
    if isinstance(t, ConstT):
        return t.name
    if isinstance(t, Unit):
        return "()"
    if isinstance(t, PairT):
        return f"<{show_lambda(t.fst, 0, depth)}, {show_lambda(t.snd, 0, depth)}>"
    if isinstance(t, Abs):
        s = f"\\v{depth}:{show_object(t.domain)}. {show_lambda(t.body, 0, depth + 1)}"
        return f"({s})" if prec > 0 else s
    if isinstance(t, App):
        s = f"{show_lambda(t.fun, 1, depth)} {show_lambda(t.arg, 2, depth)}"
        return f"({s})" if prec > 1 else s
    if isinstance(t, (Fst, Snd)):
        s = f"{'fst' if isinstance(t, Fst) else 'snd'} {show_lambda(t.of, 2, depth)}"
        return f"({s})" if prec > 1 else s
    raise TypeError(f"not a lambda term: {t!r}")


def show(x) -> str:
    if isinstance(x, ArrowType):
        return f"{show_object(x.source)} |- {show_object(x.target)}"
    if isinstance(x, (Terminal, Atom, Prod, Exp)):
        return show_object(x)
    if isinstance(x, (Var, Abs, App, PairT, Fst, Snd, Unit, ConstT)):
        return show_lambda(x)
    return print_arrow(x)


def print_signature(sig: Signature) -> str:
    lines = [f"object {name}" for name in sorted(sig.objects)]
    for name, ty in sig.arrows.items():
        lines.append(f"arrow {name} : {show_object(ty.source)} |- {show_object(ty.target)}")
    if sig.indeterminate is not None:
        name, target = sig.indeterminate
        lines.append(f"indeterminate {name} : T |- {show_object(target)}")
    return "\n".join(lines) + "\n"
