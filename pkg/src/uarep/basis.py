"""Bases, the basis manifold, and its active and passive group actions.

The manifold is the orbit of a reference basis ``X0`` under the automorphism
group. Every point is ``R(X0)`` for exactly one automorphism ``R``. The
active action of ``R`` moves a point ``Y`` to ``R(Y)``. The passive action of
``S`` moves ``R_Y(X0)`` to ``(R_Y ∘ S)(X0)``. The two actions commute.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coordinates import coordinate_set, substitute
from .errors import BudgetExceeded, NotAutomorphism, NotGenerating, NotInManifold
from .morphism import DEFAULT_ENDO_BUDGET, DEFAULT_SUBSET_BUDGET, Morphism, MorphismSet, enumerate_endomorphisms
from .representation import Representation, closure, generating_closure, is_generating
from .terms import Term


def is_basis(rep: Representation, X: Sequence[int]) -> bool:
    X = list(X)
    if not is_generating(rep, X):
        return False
    return not any(is_generating(rep, X[:i] + X[i + 1 :]) for i in range(len(X)))


def reduce_to_basis(rep: Representation, X: Sequence[int]) -> list[int]:
    """Drop, one at a time, the first element whose removal keeps ``X`` generating."""
    X = list(dict.fromkeys(X))
    generating_closure(rep, X)
    X.sort()
    while True:
        for i in range(len(X)):
            rest = X[:i] + X[i + 1 :]
            if is_generating(rep, rest):
                X = rest
                break
        else:
            return X


def all_bases(rep: Representation, budget: int = DEFAULT_SUBSET_BUDGET) -> list[tuple[int, ...]]:
    """Every basis as an ascending tuple, by exhaustive subset search."""
    n = len(rep.algM)
    if 2**n > budget:
        raise BudgetExceeded(f"2^{n} subsets exceed the budget {budget}")
    gen = {
        X
        for r in range(n + 1)
        for X in itertools.combinations(range(n), r)
        if len(closure(rep, X).closure) == n
    }
    return sorted(
        X for X in gen if not any(X[:i] + X[i + 1 :] in gen for i in range(len(X)))
    )


@dataclass(frozen=True, eq=False)
class BasisManifold:
    rep: Representation
    reference: tuple[int, ...]
    group: MorphismSet

    @cached_property
    def orbit(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(R.image(self.reference)) for R in self.group.autos)

    @cached_property
    def _point_index(self) -> dict[tuple[int, ...], int]:
        return {Y: j for j, Y in enumerate(self.orbit)}

    @property
    def autos(self) -> tuple[Morphism, ...]:
        return self.group.autos

    def __len__(self):
        return len(self.orbit)

    def __contains__(self, Y) -> bool:
        return tuple(Y) in self._point_index

    def locate(self, Y: Sequence[int]) -> int:
        """Index of the unique automorphism ``R`` with ``R(X0) = Y``."""
        try:
            return self._point_index[tuple(Y)]
        except KeyError:
            labels = ", ".join(self.rep.label_set(Y))
            raise NotInManifold(f"[{labels}] is not in the manifold of this basis") from None

    def auto(self, j: int) -> Morphism:
        return self.group.autos[j]

    def compose_index(self, i: int, j: int) -> int:
        """Index of ``autos[i] ∘ autos[j]``."""
        return self.group.index_of(self.auto(i).compose(self.auto(j)))

    def listing(self) -> list[str]:
        return [
            f"basis {j}: [{', '.join(self.rep.label_set(Y))}] via auto {j}"
            for j, Y in enumerate(self.orbit)
        ]


def basis_manifold(
    rep: Representation, X0: Sequence[int], budget: int = DEFAULT_ENDO_BUDGET
) -> BasisManifold:
    X0 = tuple(X0)
    if not is_basis(rep, X0):
        raise NotGenerating(f"[{', '.join(rep.label_set(X0))}] is not a basis")
    group = enumerate_endomorphisms(rep, X0, budget)
    manifold = BasisManifold(rep, X0, group)
    # freeness of the active action
    assert len(set(manifold.orbit)) == len(group.autos)
    return manifold


def _auto_index(manifold, R):
    if isinstance(R, int):
        return R
    try:
        return manifold.group.index_of(R)
    except KeyError:
        raise NotAutomorphism(f"{R.table} is not an automorphism") from None


def active(manifold: BasisManifold, R: Morphism | int, Y: Sequence[int]) -> tuple[int, ...]:
    j = _auto_index(manifold, R)
    manifold.locate(Y)
    return tuple(manifold.auto(j).image(Y))


def passive(manifold: BasisManifold, S: Morphism | int, Y: Sequence[int]) -> tuple[int, ...]:
    """``S ★ Y``: with ``Y = R_Y(X0)``, the point ``(R_Y ∘ S)(X0)``."""
    s = _auto_index(manifold, S)
    ry = manifold.locate(Y)
    return tuple(manifold.auto(ry).compose(manifold.auto(s)).image(manifold.reference))


def passive_product(manifold: BasisManifold, T: Morphism | int, S: Morphism | int) -> int:
    """Index of ``T ★ S``, the passive transformation ``Y -> T ★ (S ★ Y)``."""
    t, s = _auto_index(manifold, T), _auto_index(manifold, S)
    return manifold.compose_index(s, t)


def coordinate_transform(
    manifold: BasisManifold, Y: Sequence[int], Yp: Sequence[int], w: Term
) -> Term:
    """Rewrite a coordinate word over ``Y`` as one over ``Yp`` with the same value."""
    Y, Yp = tuple(Y), tuple(Yp)
    manifold.locate(Y)
    manifold.locate(Yp)
    cs = coordinate_set(manifold.rep, Yp)
    return substitute(w, [cs[y] for y in Y])
