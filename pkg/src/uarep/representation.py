"""Representations of a finite algebra A in a finite algebra M.

The action is a total table ``action[a, m] = f(a)(m)``. Subsets of M are
handled as sorted lists of element indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .algebra import FiniteAlgebra, trivial_algebra
from .errors import (
    NotGenerating,
    NotStable,
    NotSubalgebra,
    ParentMismatch,
    RepresentationError,
    UarepError,
)
from .terms import Act, Apply, Leaf, Term, format_term


@dataclass(frozen=True)
class Monoid:
    """Mode flag: A is a monoid under ``mul`` (optionally with ``unit``) acting on M."""

    mul: str
    unit: int | None = None


@dataclass(frozen=True, eq=False)
class Representation:
    algA: FiniteAlgebra
    algM: FiniteAlgebra
    action: np.ndarray
    mode: Monoid | None = None
    name: str = "f"
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        act = np.array(self.action, dtype=np.int64)
        shape = (len(self.algA), len(self.algM))
        if act.shape != shape:
            raise RepresentationError(f"action table has shape {act.shape}, expected {shape}")
        if act.size and (act.min() < 0 or act.max() >= len(self.algM)):
            raise RepresentationError("action table has an output outside M")
        act.setflags(write=False)
        object.__setattr__(self, "action", act)
        if self.check:
            problem = self.violation()
            if problem:
                raise RepresentationError(problem)

    @cached_property
    def _rows(self) -> list[list[int]]:
        return self.action.tolist()

    def act(self, a: int, m: int) -> int:
        return self._rows[a][m]

    def violation(self) -> str | None:
        """First violated mode axiom, as text; ``None`` when all hold."""
        if self.mode is None:
            return None
        A, M, f = self.algA, self.algM, self.action
        mul = self.mode.mul
        if mul not in A.signature or A.signature.arity(mul) != 2:
            return f"monoid mode needs a binary operation '{mul}' on {A.name}"
        table = A.tables[mul]
        for a1, a2 in itertools.product(range(len(A)), repeat=2):
            lhs = f[table[a1, a2]]
            rhs = f[a1][f[a2]]
            bad = np.flatnonzero(lhs != rhs)
            if bad.size:
                m = int(bad[0])
                return (
                    f"f({mul}(a1, a2)) = f(a1)∘f(a2) fails at a1={A.label(a1)}, "
                    f"a2={A.label(a2)}, m={M.label(m)}"
                )
        if self.mode.unit is not None:
            u = self.mode.unit
            bad = np.flatnonzero(f[u] != np.arange(len(M)))
            if bad.size:
                return f"f({A.label(u)}) is not the identity at m={M.label(int(bad[0]))}"
        for a in range(len(A)):
            hit = _hom_violation(M, f[a])
            if hit:
                sym, args = hit
                labels = ", ".join(M.label(x) for x in args)
                return f"f({A.label(a)}) is not an endomorphism: fails on {sym}({labels})"
        return None

    def label_set(self, elems: Iterable[int]) -> list[str]:
        return [self.algM.label(x) for x in elems]

    def format(self, t: Term) -> str:
        return format_term(t, self)


def _hom_violation(M: FiniteAlgebra, R: np.ndarray):
    """First ``(op, args)`` where the self-map ``R`` fails to commute with ``op``."""
    for sym, k in M.signature.ops:
        t = M.tables[sym]
        lhs = R[t]
        rhs = t[np.ix_(*([R] * k))] if k else t
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return sym, tuple(int(x) for x in bad[0])
    return None


def trivial_representation(algM: FiniteAlgebra, name: str = "f") -> Representation:
    """The one-element monoid acting identically on ``algM``."""
    A = trivial_algebra()
    return Representation(A, algM, np.arange(len(algM))[None, :], Monoid("mul", 0), name)


# stability and subrepresentations -------------------------------------------


def _check_subset(rep, N):
    n = len(rep.algM)
    N = sorted(set(int(x) for x in N))
    if N and not (0 <= N[0] and N[-1] < n):
        raise IndexError(f"element index out of range 0..{n - 1}")
    return N


def is_stable(rep: Representation, N: Iterable[int]) -> bool:
    N = _check_subset(rep, N)
    inside = set(N)
    return all(rep.act(a, m) in inside for a in range(len(rep.algA)) for m in N)


def _subalgebra_violation(M, N):
    inside = set(N)
    for sym, k in M.signature.ops:
        for args in itertools.product(N, repeat=k):
            out = M.apply(sym, args)
            if out not in inside:
                return sym, args, out
    return None


@dataclass(frozen=True, eq=False)
class SubRepresentation:
    parent: Representation
    subset: tuple[int, ...]
    restricted: Representation

    def __len__(self):
        return len(self.subset)


def restrict(rep: Representation, N: Iterable[int]) -> SubRepresentation:
    """The subrepresentation on ``N``; raises if ``N`` is not a stable subalgebra."""
    N = _check_subset(rep, N)
    M = rep.algM
    hit = _subalgebra_violation(M, N)
    if hit:
        sym, args, out = hit
        raise NotSubalgebra(sym, [M.label(x) for x in args], M.label(out))
    inside = set(N)
    for a in range(len(rep.algA)):
        for m in N:
            out = rep.act(a, m)
            if out not in inside:
                raise NotStable(rep.algA.label(a), M.label(m), M.label(out))
    pos = {x: i for i, x in enumerate(N)}
    tables = {}
    for sym, k in M.signature.ops:
        t = M.tables[sym][np.ix_(*([N] * k))] if k else M.tables[sym]
        tables[sym] = np.vectorize(pos.__getitem__, otypes=[np.int64])(t) if t.size else t
    sub = FiniteAlgebra(M.name, M.signature, [M.label(x) for x in N], tables)
    action = np.array(
        [[pos[rep.act(a, m)] for m in N] for a in range(len(rep.algA))], dtype=np.int64
    ).reshape(len(rep.algA), len(N))
    restricted = Representation(rep.algA, sub, action, rep.mode, rep.name, check=False)
    return SubRepresentation(rep, tuple(N), restricted)


def meet(s1: SubRepresentation, s2: SubRepresentation) -> SubRepresentation:
    if s1.parent is not s2.parent:
        raise ParentMismatch("subrepresentations of different representations")
    return restrict(s1.parent, set(s1.subset) & set(s2.subset))


# generated subrepresentation ---------------------------------------------------


@dataclass(frozen=True)
class Derivation:
    """One application examined while closing: ``op(args)`` or ``f(a)(args[0])``."""

    kind: str  # "op" or "act"
    symbol: str | int
    args: tuple[int, ...]
    result: int


@dataclass(frozen=True, eq=False)
class ClosureResult:
    """``J(f, X)`` with its stages and a witness word for every element.

    ``derivations`` lists every application examined, in worklist order; each
    tuple over the closure appears exactly once.
    """

    rep: Representation
    X: tuple[int, ...]
    closure: tuple[int, ...]
    stages: tuple[tuple[int, ...], ...]
    witnesses: dict[int, Term]
    stage_of: dict[int, int]
    derivations: tuple[Derivation, ...]

    def report(self) -> list[str]:
        lab = self.rep.algM.label
        return [
            f"elem {lab(m)} stage {self.stage_of[m]} word {self.rep.format(self.witnesses[m])}"
            for m in self.closure
        ]


def closure(rep: Representation, X: Sequence[int]) -> ClosureResult:
    """Staged closure of ``X`` under the operations of M and the action of A.

    Stage ``k+1`` examines, in order: each operation in signature order with
    argument tuples over stage ``k`` in lexicographic index order, then each
    ``(a, m)`` with ``a`` ascending and ``m`` ascending. Only tuples touching
    an element new at stage ``k`` are examined, which finds exactly the same
    first discoveries as a full rescan. The first derivation of an element
    fixes its witness.
    """
    M, A = rep.algM, rep.algA
    X = tuple(int(x) for x in X)
    _check_subset(rep, X)
    witnesses: dict[int, Term] = {}
    depths: dict[int, int] = {}
    stage_of: dict[int, int] = {}
    derivations: list[Derivation] = []
    for x in X:
        if x not in witnesses:
            witnesses[x] = Leaf(x)
            depths[x] = 0
            stage_of[x] = 0
    cap = len(M) * (1 + len(A))

    def found(x, term, d, stage):
        if d > cap:
            raise UarepError(f"witness depth {d} exceeds the cap {cap}")
        witnesses[x] = term
        depths[x] = d
        stage_of[x] = stage

    current = sorted(witnesses)
    stages = [tuple(current)]
    fresh = set(current)
    k = 0
    while True:
        old = set(current)
        new = []
        for sym, ar in M.signature.ops:
            if ar == 0:
                # no argument touches a fresh element; examine constants once
                tuples = [()] if k == 0 else []
            else:
                tuples = [t for t in itertools.product(current, repeat=ar) if fresh.intersection(t)]
            for args in tuples:
                out = M.apply(sym, args)
                derivations.append(Derivation("op", sym, args, out))
                if out not in witnesses:
                    term = Apply(sym, tuple(witnesses[x] for x in args))
                    found(out, term, 1 + max((depths[x] for x in args), default=0), k + 1)
                    new.append(out)
        for a in range(len(A)):
            for m in current:
                if m not in fresh:
                    continue
                out = rep.act(a, m)
                derivations.append(Derivation("act", a, (m,), out))
                if out not in witnesses:
                    found(out, Act(a, witnesses[m]), 1 + depths[m], k + 1)
                    new.append(out)
        if not new:
            break
        current = sorted(old | set(new))
        fresh = set(new)
        stages.append(tuple(current))
        k += 1
    return ClosureResult(
        rep,
        X,
        tuple(current),
        tuple(stages),
        witnesses,
        stage_of,
        tuple(derivations),
    )


def generating_closure(rep: Representation, X: Sequence[int]) -> ClosureResult:
    """``closure(rep, X)``, raising :class:`NotGenerating` unless it is all of M."""
    res = closure(rep, X)
    if len(res.closure) != len(rep.algM):
        raise NotGenerating(
            f"{{{', '.join(rep.label_set(X))}}} generates only "
            f"{{{', '.join(rep.label_set(res.closure))}}}"
        )
    return res


def is_generating(rep: Representation, X: Iterable[int]) -> bool:
    return len(closure(rep, list(X)).closure) == len(rep.algM)
