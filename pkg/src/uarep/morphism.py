"""Endomorphisms and automorphisms of a representation.

A morphism is a self-map ``R`` of M, stored as a table, that commutes with
every operation of M and with every ``f(a)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, Inconsistent, NotMorphism
from .representation import Representation, _hom_violation, closure, generating_closure
from .terms import Act, Apply, Leaf, format_term

DEFAULT_ENDO_BUDGET = 10**6
DEFAULT_SUBSET_BUDGET = 2**20


@dataclass(frozen=True)
class Violation:
    """Where a self-map fails: ``kind`` is ``"op"`` or ``"act"``."""

    kind: str
    symbol: str
    args: tuple[str, ...]

    def __str__(self):
        if self.kind == "act":
            return f"R(f({self.symbol})({self.args[0]})) != f({self.symbol})(R({self.args[0]}))"
        return f"R({self.symbol}({', '.join(self.args)})) != {self.symbol}(R(...))"


@dataclass(frozen=True, eq=False)
class Morphism:
    rep: Representation
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))

    def __call__(self, m: int) -> int:
        return self.table[m]

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @property
    def is_bijective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def compose(self, other: Morphism) -> Morphism:
        """``self ∘ other``: apply ``other`` first."""
        return Morphism(self.rep, tuple(self.table[x] for x in other.table))

    def inverse(self) -> Morphism:
        inv = [0] * len(self.table)
        for m, r in enumerate(self.table):
            inv[r] = m
        return Morphism(self.rep, inv)

    def image(self, X: Sequence[int]) -> list[int]:
        return [self.table[x] for x in X]

    def format(self) -> str:
        lab = self.rep.algM.label
        body = " ".join(f"{lab(m)} -> {lab(r)};" for m, r in enumerate(self.table))
        return f"map {{ {body} }}"


def morphism_violation(rep: Representation, table: Sequence[int]) -> Violation | None:
    R = np.asarray(table, dtype=np.int64)
    M = rep.algM
    hit = _hom_violation(M, R)
    if hit:
        sym, args = hit
        return Violation("op", sym, tuple(M.label(x) for x in args))
    f = rep.action
    bad = np.argwhere(R[f] != f[:, R])
    if bad.size:
        a, m = (int(x) for x in bad[0])
        return Violation("act", rep.algA.label(a), (M.label(m),))
    return None


def is_morphism(rep: Representation, table: Sequence[int]) -> bool:
    return morphism_violation(rep, table) is None


def extend_map(rep: Representation, X: Sequence[int], images: Sequence[int]) -> Morphism:
    """The unique morphism sending ``X[i]`` to ``images[i]``.

    Images are propagated along the closure of ``X`` in worklist order. Every
    application examined there (each tuple over M exactly once) is a
    constraint; the first one that assigns a second, different image to an
    element raises :class:`Inconsistent`.
    """
    X = [int(x) for x in X]
    images = [int(y) for y in images]
    if len(X) != len(images):
        raise ValueError(f"{len(X)} generators but {len(images)} images")
    return _propagate(rep, generating_closure(rep, X), images)


def _propagate(rep, res, images):
    M = rep.algM
    image: dict[int, int] = {}
    how: dict[int, object] = {}

    def describe(d):
        if isinstance(d, int):
            return f"generator {M.label(d)}"
        if d.kind == "op":
            return format_term(Apply(d.symbol, tuple(Leaf(x) for x in d.args)), rep)
        return format_term(Act(d.symbol, Leaf(d.args[0])), rep)

    def assign(r, y, d):
        if r not in image:
            image[r] = y
            how[r] = d
        elif image[r] != y:
            raise Inconsistent(
                M.label(r), (M.label(image[r]), describe(how[r])), (M.label(y), describe(d))
            )

    for x, y in zip(res.X, images):
        assign(x, y, x)
    for d in res.derivations:
        if d.kind == "op":
            y = M.apply(d.symbol, [image[x] for x in d.args])
        else:
            y = rep.act(d.symbol, image[d.args[0]])
        assign(d.result, y, d)
    table = [image[m] for m in range(len(M))]
    bad = morphism_violation(rep, table)
    if bad:
        raise NotMorphism(str(bad))
    return Morphism(rep, table)


@dataclass(frozen=True, eq=False)
class MorphismSet:
    rep: Representation
    all: tuple[Morphism, ...]

    @cached_property
    def autos(self) -> tuple[Morphism, ...]:
        return tuple(R for R in self.all if R.is_bijective)

    @cached_property
    def auto_index(self) -> dict[tuple[int, ...], int]:
        return {R.table: i for i, R in enumerate(self.autos)}

    def index_of(self, R: Morphism) -> int:
        return self.auto_index[R.table]

    @cached_property
    def identity(self) -> int:
        return self.auto_index[tuple(range(len(self.rep.algM)))]

    def check_closed(self) -> None:
        """Composition closure of all morphisms; inverse closure of the automorphisms."""
        members = set(R.table for R in self.all)
        for R, S in itertools.product(self.all, repeat=2):
            if R.compose(S).table not in members:
                raise NotMorphism(f"composition {R.table} ∘ {S.table} is missing")
        for R in self.autos:
            inv = R.inverse()
            if inv.table not in self.auto_index:
                raise NotMorphism(f"inverse of {R.table} is missing")
            assert is_morphism(self.rep, inv.table)


def enumerate_endomorphisms(
    rep: Representation, X: Sequence[int], budget: int = DEFAULT_ENDO_BUDGET
) -> MorphismSet:
    """All morphisms, found by extending every image tuple of ``X``.

    Image tuples are tried in lexicographic order, which fixes the order of
    the result.
    """
    X = list(X)
    n = len(rep.algM)
    if n ** len(X) > budget:
        raise BudgetExceeded(f"{n}^{len(X)} image tuples exceed the budget {budget}")
    res = generating_closure(rep, X)
    found = []
    for images in itertools.product(range(n), repeat=len(X)):
        try:
            found.append(_propagate(rep, res, images))
        except (Inconsistent, NotMorphism):
            continue
    return MorphismSet(rep, tuple(found))


def is_regular_on(rep: Representation, R: Morphism, X: Sequence[int]) -> bool:
    generating_closure(rep, list(X))
    return len(closure(rep, R.image(X)).closure) == len(rep.algM)


def is_regular(rep: Representation, R: Morphism, budget: int = DEFAULT_SUBSET_BUDGET) -> bool:
    """Regular on every generating subset of M (exhaustive)."""
    n = len(rep.algM)
    if 2**n > budget:
        raise BudgetExceeded(f"2^{n} subsets exceed the budget {budget}")
    for r in range(n + 1):
        for X in itertools.combinations(range(n), r):
            if len(closure(rep, X).closure) == n and len(closure(rep, R.image(X)).closure) != n:
                return False
    return True
