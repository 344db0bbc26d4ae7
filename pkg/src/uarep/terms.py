"""Words: the term AST, its canonical printer and a prefix-notation parser.

A term is one of

* ``Leaf(ref, slot=False)``: a concrete element index of M, or (``slot=True``)
  a position in an ordered generating set,
* ``Apply(op, args)``: an operation of the algebra M,
* ``Act(a, child)``: the action of the element ``a`` of A.

Canonical text form::

    term := label | $<n> | op '(' [term (', ' term)*] ')' | 'act(' a ', ' term ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ArityError, ModelError, ModelSyntaxError, SlotOutOfRange, UnknownLabel


@dataclass(frozen=True)
class Leaf:
    ref: int
    slot: bool = False


@dataclass(frozen=True)
class Apply:
    op: str
    args: tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Act:
    a: int
    child: Term


Term = Union[Leaf, Apply, Act]


def leaves(t: Term):
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            yield node
        elif isinstance(node, Apply):
            stack.extend(reversed(node.args))
        else:
            stack.append(node.child)


def flavor(t: Term) -> str | None:
    """``'slot'``, ``'concrete'``, or ``None`` for a leafless term (built from constants)."""
    kinds = {leaf.slot for leaf in leaves(t)}
    if len(kinds) > 1:
        raise ModelError("term mixes slot leaves and element leaves")
    if not kinds:
        return None
    return "slot" if kinds.pop() else "concrete"


def is_slotted(t: Term) -> bool:
    return flavor(t) != "concrete"


def max_slot(t: Term) -> int:
    """Largest slot index in ``t``, ``-1`` if there is none."""
    return max((leaf.ref for leaf in leaves(t) if leaf.slot), default=-1)


def depth(t: Term) -> int:
    if isinstance(t, Leaf):
        return 0
    if isinstance(t, Act):
        return 1 + depth(t.child)
    return 1 + max((depth(c) for c in t.args), default=0)


def size(t: Term) -> int:
    if isinstance(t, Leaf):
        return 1
    if isinstance(t, Act):
        return 1 + size(t.child)
    return 1 + sum(size(c) for c in t.args)


def slot(i: int) -> Leaf:
    return Leaf(i, slot=True)


def evaluate(t: Term, rep, X: Sequence[int] = ()) -> int:
    """Evaluate ``t`` in the representation ``rep``; slot ``i`` stands for ``X[i]``."""
    M = rep.algM
    if isinstance(t, Leaf):
        if not t.slot:
            return t.ref
        if not 0 <= t.ref < len(X):
            raise SlotOutOfRange(f"slot ${t.ref} with a generating list of length {len(X)}")
        return X[t.ref]
    if isinstance(t, Act):
        return rep.act(t.a, evaluate(t.child, rep, X))
    return M.apply(t.op, [evaluate(c, rep, X) for c in t.args])


def to_slots(t: Term, X: Sequence[int]) -> Term:
    """Replace concrete leaf ``X[i]`` by slot ``i``."""
    pos = {}
    for i, x in enumerate(X):
        pos.setdefault(x, i)
    return _map_leaves(t, lambda leaf: slot(pos[leaf.ref]) if not leaf.slot else leaf)


def to_concrete(t: Term, X: Sequence[int]) -> Term:
    return _map_leaves(t, lambda leaf: Leaf(X[leaf.ref]) if leaf.slot else leaf)


def _map_leaves(t, fn):
    if isinstance(t, Leaf):
        return fn(t)
    if isinstance(t, Act):
        return Act(t.a, _map_leaves(t.child, fn))
    return Apply(t.op, tuple(_map_leaves(c, fn) for c in t.args))


# printing -------------------------------------------------------------------


def format_term(t: Term, rep=None) -> str:
    """Canonical text of ``t``. Without ``rep``, indices are printed raw."""

    def elem(i):
        return rep.algM.label(i) if rep is not None else str(i)

    def a_label(i):
        return rep.algA.label(i) if rep is not None else str(i)

    def go(node):
        if isinstance(node, Leaf):
            return f"${node.ref}" if node.slot else elem(node.ref)
        if isinstance(node, Act):
            return f"act({a_label(node.a)}, {go(node.child)})"
        return f"{node.op}({', '.join(go(c) for c in node.args)})"

    return go(t)


# parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<slot>\$\d+)|(?P<id>[A-Za-z0-9_]+)|(?P<punct>[(),]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ModelSyntaxError(f"unexpected character {text[col - 1]!r}", 1, col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    out.append(("eof", "", len(text) + 1))
    return out


def parse_term(text: str, rep, basis_size: int | None = None) -> Term:
    """Parse a term over ``rep``.

    Element labels name elements of M; ``$n`` names slot ``n``. When
    ``basis_size`` is given, slot indices must be below it. Mixed terms are
    rejected.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tk = toks[pos]
        if (kind and tk[0] != kind) or (value is not None and tk[1] != value):
            want = repr(value) if value is not None else kind
            got = repr(tk[1]) if tk[0] != "eof" else "end of input"
            raise ModelSyntaxError(f"expected {want}, got {got}", 1, tk[2])
        pos += 1
        return tk

    def term():
        kind, val, col = peek()
        if kind == "slot":
            take()
            i = int(val[1:])
            if basis_size is not None and i >= basis_size:
                raise SlotOutOfRange(f"slot {val} with a generating list of length {basis_size}")
            return slot(i)
        if kind != "id":
            raise ModelSyntaxError(
                f"expected a term, got {val!r}" if kind != "eof" else "expected a term, got end of input",
                1,
                col,
            )
        take()
        if peek()[1] != "(":
            try:
                return Leaf(rep.algM.index(val))
            except UnknownLabel:
                raise UnknownLabel(val, f"unknown element '{val}'", 1, col) from None
        take(value="(")
        if val == "act":
            akind, aval, acol = take("id")
            try:
                a = rep.algA.index(aval)
            except UnknownLabel:
                raise UnknownLabel(aval, f"unknown element '{aval}' of A", 1, acol) from None
            take(value=",")
            child = term()
            take(value=")")
            return Act(a, child)
        sig = rep.algM.signature
        if val not in sig:
            raise UnknownLabel(val, f"unknown operation '{val}'", 1, col)
        args = []
        if peek()[1] != ")":
            args.append(term())
            while peek()[1] == ",":
                take()
                args.append(term())
        take(value=")")
        k = sig.arity(val)
        if len(args) != k:
            raise ArityError(f"'{val}' takes {k} argument(s), got {len(args)}", 1, col)
        return Apply(val, tuple(args))

    t = term()
    take("eof")
    flavor(t)
    return t
