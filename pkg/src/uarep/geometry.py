"""Geometric objects carried by a second representation.

A context links a representation ``f`` (on M) and a representation ``g`` (on
N) of the same algebra A by a group homomorphism ``h`` from the
automorphisms of ``f`` to those of ``g``. A passive change of basis ``S`` of
``f`` drives the passive change ``h(S)`` of ``g`` and the matching coordinate
transformation. The orbit of a seed coordinate word under these changes is a
geometric object; evaluating any orbit point at its own basis gives the same
element of N, its representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .basis import BasisManifold, coordinate_transform, passive
from .coordinates import coord_act, coord_op
from .errors import ArityError, ContextMismatch, InvarianceViolation, NotInManifold, WellDefinednessFailure
from .terms import Term, evaluate, format_term, max_slot


@dataclass(frozen=True, eq=False)
class GeomContext:
    """``h[i]`` is the index in ``manifold_g`` of the image of ``manifold_f.autos[i]``."""

    manifold_f: BasisManifold
    manifold_g: BasisManifold
    h: tuple[int, ...]
    name: str = "H"

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        if self.repF.algA is not self.repG.algA and (
            self.repF.algA.carrier != self.repG.algA.carrier
        ):
            raise ContextMismatch("the two representations act by different algebras")
        problem = self.homomorphism_violation()
        if problem:
            raise ContextMismatch(problem)

    @property
    def repF(self):
        return self.manifold_f.rep

    @property
    def repG(self):
        return self.manifold_g.rep

    def homomorphism_violation(self) -> str | None:
        mf, mg = self.manifold_f, self.manifold_g
        if len(self.h) != len(mf.autos):
            return f"h has {len(self.h)} entries for {len(mf.autos)} automorphisms"
        if any(not 0 <= x < len(mg.autos) for x in self.h):
            return "h names an automorphism outside the target group"
        if self.h[mf.group.identity] != mg.group.identity:
            return "h does not send the identity to the identity"
        for s, t in itertools.product(range(len(mf.autos)), repeat=2):
            if self.h[mf.compose_index(s, t)] != mg.compose_index(self.h[s], self.h[t]):
                return f"h(S∘T) != h(S)∘h(T) for S={s}, T={t}"
        return None

    @classmethod
    def trivial(cls, manifold_f, manifold_g, name="H"):
        return cls(manifold_f, manifold_g, (manifold_g.group.identity,) * len(manifold_f.autos), name)


@dataclass(frozen=True, eq=False)
class GeometricObject:
    """Orbit points keyed by the automorphism ``S`` of ``f`` that reaches them.

    ``points[s]`` is ``(basis of g, coordinate word over it)``; ``points`` at
    the identity is the seed, attached to the reference basis of ``f``.
    """

    context: GeomContext
    points: tuple[tuple[tuple[int, ...], Term], ...]

    @property
    def seed(self):
        return self.points[self.context.manifold_f.group.identity]

    @cached_property
    def orbit(self) -> dict[tuple[int, ...], Term]:
        out = {}
        for basis, w in self.points:
            out.setdefault(basis, w)
        return out

    def __len__(self):
        return len(self.orbit)

    def at(self, Y_M: Sequence[int]):
        """Coordinates of the object relative to the basis ``Y_M`` of ``f``."""
        mf = self.context.manifold_f
        s = mf.locate(Y_M)
        # Y_M = S(X0) = S ★ X0, so the point reached by S
        return self.points[s]

    def report(self) -> str:
        ctx = self.context
        basis, w = self.seed
        labels = ", ".join(ctx.repG.label_set(basis))
        rep_label = ctx.repG.algM.label(representative(self))
        return (
            f"geom type={ctx.name} seed=([{labels}], {format_term(w, ctx.repG)}) "
            f"orbit_size={len(self)} representative={rep_label}"
        )


def geom_orbit(ctx: GeomContext, Y_N: Sequence[int], p: Term) -> GeometricObject:
    mg = ctx.manifold_g
    Y_N = tuple(Y_N)
    mg.locate(Y_N)
    if max_slot(p) >= len(Y_N):
        raise ContextMismatch(f"word uses slot ${max_slot(p)} over a basis of size {len(Y_N)}")
    points = []
    for s in range(len(ctx.manifold_f.autos)):
        target = passive(mg, ctx.h[s], Y_N)
        points.append((target, coordinate_transform(mg, Y_N, target, p)))
    return GeometricObject(ctx, tuple(points))


def representative(obj: GeometricObject, Y_M: Sequence[int] | None = None, Y_N: Sequence[int] | None = None) -> int:
    """The element of N the object stands for.

    Computed at the point for ``Y_M`` (the reference basis by default), then
    re-expressed over ``Y_N`` when given. Every orbit point is evaluated and
    must agree; a disagreement raises :class:`InvarianceViolation`.
    """
    ctx = obj.context
    values = {evaluate(w, ctx.repG, basis) for basis, w in obj.points}
    if len(values) != 1:
        raise InvarianceViolation(f"orbit points evaluate to {sorted(values)}")
    basis, w = obj.at(Y_M) if Y_M is not None else obj.seed
    if Y_N is not None:
        if tuple(Y_N) not in ctx.manifold_g:
            raise NotInManifold("Y_N is not in the manifold of g")
        w = coordinate_transform(ctx.manifold_g, basis, Y_N, w)
        basis = tuple(Y_N)
    value = evaluate(w, ctx.repG, basis)
    if value not in values:
        raise InvarianceViolation(f"value {value} differs from the orbit value {values.pop()}")
    return value


def _aligned_words(objs):
    ctx = objs[0].context
    for o in objs[1:]:
        if o.context is not ctx:
            raise ContextMismatch("geometric objects from different contexts")
    base = objs[0].seed[0]
    words = []
    for o in objs:
        if base not in o.orbit:
            raise WellDefinednessFailure(
                f"seed basis {list(base)} is not on the orbit of every operand"
            )
        words.append(o.orbit[base])
    return ctx, base, words


def word_profile(manifold: BasisManifold, w: Term) -> tuple[int, ...]:
    """Values of ``w`` at every point of ``manifold``.

    Two words with equal profiles are interchangeable as coordinates: they
    agree at one basis exactly when they agree at all of them.
    """
    return tuple(evaluate(w, manifold.rep, Y) for Y in manifold.orbit)


def _check_points(obj, expected):
    """Each orbit point of ``obj`` must match the pointwise combination."""
    mg = obj.context.manifold_g
    for (basis, w), (basis2, w2) in zip(obj.points, expected):
        if basis != basis2 or (w != w2 and word_profile(mg, w) != word_profile(mg, w2)):
            raise WellDefinednessFailure(
                f"combination leaves the orbit pattern at basis {list(basis)}"
            )


def geom_op(op: str, objs: Sequence[GeometricObject]) -> GeometricObject:
    if not objs:
        raise ArityError(f"'{op}' needs at least one operand to fix the context")
    objs = list(objs)
    ctx, base, words = _aligned_words(objs)
    k = ctx.repG.algM.signature.arity(op)
    if len(objs) != k:
        raise ArityError(f"'{op}' takes {k} argument(s), got {len(objs)}")
    obj = geom_orbit(ctx, base, coord_op(ctx.repG, op, words))
    pointwise = [
        (basis, coord_op(ctx.repG, op, [o.orbit[basis] for o in objs])) for basis, _ in obj.points
    ]
    _check_points(obj, pointwise)
    return obj


def geom_act(a: int, obj: GeometricObject) -> GeometricObject:
    ctx = obj.context
    base, w = obj.seed
    new = geom_orbit(ctx, base, coord_act(a, w))
    _check_points(new, [(basis, coord_act(a, obj.orbit[basis])) for basis, _ in new.points])
    return new
