"""Coordinates: slotted witness words relative to an ordered generating list.

Slot ``i`` of a coordinate word stands for ``X[i]``. Operations and the
action of A lift to coordinate words syntactically, and substitution of
coordinate words into slots composes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, SlotOutOfRange
from .representation import Representation, generating_closure
from .terms import Act, Apply, Leaf, Term, max_slot, slot, to_slots


@dataclass(frozen=True, eq=False)
class CoordinateSet:
    """Coordinate words for some elements relative to an ordered generating list."""

    X: tuple[int, ...]
    entries: dict[int, Term]

    @property
    def basis_size(self) -> int:
        return len(self.X)

    def __getitem__(self, m: int) -> Term:
        return self.entries[m]


def coordinate_set(rep: Representation, X: Sequence[int]) -> CoordinateSet:
    X = tuple(X)
    res = generating_closure(rep, X)
    return CoordinateSet(X, {m: to_slots(w, X) for m, w in res.witnesses.items()})


def coordinates_of(rep: Representation, X: Sequence[int], m: int) -> Term:
    return coordinate_set(rep, X)[m]


def coord_op(rep: Representation, op: str, ws: Sequence[Term]) -> Term:
    k = rep.algM.signature.arity(op)
    if len(ws) != k:
        raise ArityError(f"'{op}' takes {k} argument(s), got {len(ws)}")
    return Apply(op, tuple(ws))


def coord_act(a: int, w: Term) -> Term:
    return Act(a, w)


def substitute(w: Term, images: Sequence[Term]) -> Term:
    """Replace every slot ``i`` of ``w`` by ``images[i]``; nothing is simplified."""
    images = tuple(images)
    if max_slot(w) >= len(images):
        raise SlotOutOfRange(f"slot ${max_slot(w)} with {len(images)} image(s)")

    def go(t):
        if isinstance(t, Leaf):
            return images[t.ref] if t.slot else t
        if isinstance(t, Act):
            return Act(t.a, go(t.child))
        return Apply(t.op, tuple(go(c) for c in t.args))

    return go(w)


def identity_coordinates(n: int) -> list[Term]:
    return [slot(i) for i in range(n)]


def morphism_coordinates(rep: Representation, X: Sequence[int], table: Sequence[int]) -> list[Term]:
    """Coordinates of ``R(X[i])`` relative to ``X``: the coordinate form of ``R``."""
    cs = coordinate_set(rep, X)
    return [cs[int(table[x])] for x in X]
