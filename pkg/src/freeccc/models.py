"""Finite set-theoretic models.

Every object denotes a finite set whose elements are numbered ``0..n-1``:

* ``T`` has one element;
* the pair ``(a, b)`` of ``A*B`` is numbered ``a*|B| + b``;
* a function ``h : A -> B`` is numbered by its digits in base ``|B|``,
  ``h = sum(h(a) * |B|**a)``.

An arrow then denotes an integer array mapping source numbers to target
numbers.  Interpretation is compositional in the term, so it is an oracle
independent of the lambda translation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MissingInterpretation, ModelTooLarge
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
    Terminal,
    type_of,
)

MAX_CARRIER = 200_000


@dataclass
class FiniteModel:
    sig: Signature
    carrier: dict[str, tuple[str, ...]]
    const_interp: dict[str, np.ndarray] = field(default_factory=dict)
    indet_interp: Optional[int] = None

    def size(self, obj: ObjectExpr) -> int:
        if isinstance(obj, Terminal):
            return 1
        if isinstance(obj, Atom):
            try:
                return len(self.carrier[obj.name])
            except KeyError:
                raise MissingInterpretation(f"no carrier for object {obj.name!r}") from None
        if isinstance(obj, Prod):
            n = self.size(obj.left) * self.size(obj.right)
        else:
            n = self.size(obj.codomain) ** self.size(obj.domain)
        if n > MAX_CARRIER:
            raise ModelTooLarge(f"carrier of {obj} has {n} elements")
        return n

    def check(self):
        """Raise unless every table is total and lands in its target."""
        for name, ty in self.sig.arrows.items():
            table = self.const_interp.get(name)
            if table is None:
                continue
            if table.shape != (self.size(ty.source),) or table.min(initial=0) < 0:
                raise ValueError(f"table for {name!r} has the wrong shape")
            if len(table) and table.max() >= self.size(ty.target):
                raise ValueError(f"table for {name!r} leaves its target")


def interpret_finite(f: ArrowExpr, m: FiniteModel) -> np.ndarray:
    """Function table of ``f`` in ``m``: entry ``i`` is the image of source element ``i``."""
    memo: dict = {}
    return _interp(f, m, memo)


def _interp(f, m, memo):
    size = m.size
    if isinstance(f, Id):
        return np.arange(size(f.at), dtype=np.int64)
    if isinstance(f, Bang):
        return np.zeros(size(f.at), dtype=np.int64)
    if isinstance(f, Proj):
        n = size(f.right)
        idx = np.arange(size(f.left) * n, dtype=np.int64)
        return idx // n if f.index == 1 else idx % n
    if isinstance(f, Eval):
        na, nb = size(f.dom), size(f.cod)
        nh = size(Exp(f.dom, f.cod))
        idx = np.arange(na * nh, dtype=np.int64)
        a, h = idx // nh, idx % nh
        return (h // (nb ** a)) % nb
    if isinstance(f, Const):
        try:
            return m.const_interp[f.name]
        except KeyError:
            raise MissingInterpretation(f"no table for arrow {f.name!r}") from None
    if isinstance(f, Indet):
        if m.indet_interp is None:
            raise MissingInterpretation("model does not interpret the indeterminate")
        return np.array([m.indet_interp], dtype=np.int64)
    if isinstance(f, Comp):
        return _interp(f.after, m, memo)[_interp(f.before, m, memo)]
    if isinstance(f, Pair):
        n2 = size(type_of(f.snd, m.sig, memo).target)
        return _interp(f.fst, m, memo) * n2 + _interp(f.snd, m, memo)
    if isinstance(f, Curry):
        na, nc = size(f.dom), size(f.ctx)
        cod = type_of(f.body, m.sig, memo).target
        nb = size(cod)
        size(Exp(f.dom, cod))  # enforces the carrier cap before the weights overflow
        body = _interp(f.body, m, memo).reshape(na, nc)
        weights = nb ** np.arange(na, dtype=np.int64)
        return (weights[:, None] * body).sum(axis=0)
    raise TypeError(f"not an arrow term: {f!r}")


def random_model(sig: Signature, rng: random.Random, max_size: int = 3, min_size: int = 1) -> FiniteModel:
    carrier = {}
    for name in sorted(sig.objects):
        n = rng.randint(min_size, max_size)
        carrier[name] = tuple(f"{name.lower()}{i}" for i in range(n))
    m = FiniteModel(sig, carrier)
    for name in sorted(sig.arrows):
        ty = sig.arrows[name]
        n_src, n_tgt = m.size(ty.source), m.size(ty.target)
        m.const_interp[name] = np.array([rng.randrange(n_tgt) for _ in range(n_src)], dtype=np.int64)
    if sig.indeterminate is not None:
        m.indet_interp = rng.randrange(m.size(sig.D))
    return m
