import itertools
import random

import pytest

from uarep.basis import (
    active,
    all_bases,
    basis_manifold,
    coordinate_transform,
    is_basis,
    passive,
    passive_product,
    reduce_to_basis,
)
from uarep.coordinates import coordinate_set, identity_coordinates, substitute
from uarep.errors import NotAutomorphism, NotGenerating, NotInManifold
from uarep.model import load_fixture, parse_model
from uarep.morphism import Morphism
from uarep.terms import Act, evaluate, slot

from conftest import idx
from oracles import minimal_generating_subsets

REFERENCE = {"CYC6": ["a", "a2,a3"], "VEC2": ["10,01"], "GSET": ["0,3"]}


def manifolds():
    for name, refs in REFERENCE.items():
        rep = load_fixture(name).rep("f")
        for labels in refs:
            yield name, rep, basis_manifold(rep, idx(rep, labels))


@pytest.fixture(scope="module")
def cyc6_manifold(cyc6):
    return basis_manifold(cyc6, idx(cyc6, "a"))


def test_cyclic_group_has_inequivalent_bases(cyc6):
    assert is_basis(cyc6, idx(cyc6, "a"))
    assert is_basis(cyc6, idx(cyc6, "a2,a3"))
    assert not is_basis(cyc6, idx(cyc6, "a,a2"))


@pytest.mark.parametrize("name", ["CYC6", "VEC2", "GSET"])
def test_is_basis_matches_minimal_generating_oracle(name):
    rep = load_fixture(name).rep("f")
    assert set(all_bases(rep)) == minimal_generating_subsets(rep)
    n = len(rep.algM)
    for r in range(n + 1):
        for X in itertools.combinations(range(n), r):
            assert is_basis(rep, X) == (X in minimal_generating_subsets(rep))


def test_reduce_removal_scan(cyc6, gset):
    B = reduce_to_basis(cyc6, idx(cyc6, "a,a2,a3"))
    assert B == idx(cyc6, "a2,a3")
    assert tuple(B) in minimal_generating_subsets(cyc6)
    assert reduce_to_basis(gset, [0, 1, 3]) == [1, 3]
    assert reduce_to_basis(cyc6, idx(cyc6, "a")) == idx(cyc6, "a")


def test_reduce_needs_generating_set(cyc6):
    with pytest.raises(NotGenerating):
        reduce_to_basis(cyc6, idx(cyc6, "a2"))


def test_manifold_of_generator(cyc6, cyc6_manifold):
    assert set(cyc6_manifold.orbit) == {tuple(idx(cyc6, "a")), tuple(idx(cyc6, "a5"))}


def test_manifold_of_two_element_basis(cyc6):
    mf = basis_manifold(cyc6, idx(cyc6, "a2,a3"))
    assert set(mf.orbit) == {tuple(idx(cyc6, "a2,a3")), tuple(idx(cyc6, "a4,a3"))}


def test_trivial_group_manifold():
    src = "algebra Z3 { elements: 0, 1, 2; op s/1 { (0) = 1; (1) = 2; (2) = 0; } op z/0 { () = 0; } }\n"
    rep = parse_model(src + "representation f { omega2: Z3; }").rep()
    mf = basis_manifold(rep, [])
    assert mf.orbit == ((),)
    assert len(mf.autos) == 1


def test_manifold_needs_basis(cyc6):
    with pytest.raises(NotGenerating):
        basis_manifold(cyc6, idx(cyc6, "a,a2"))


def test_active(cyc6, cyc6_manifold):
    mf = cyc6_manifold
    inv = mf.group.index_of(Morphism(cyc6, [(-k) % 6 for k in range(6)]))
    a, a5 = idx(cyc6, "a"), idx(cyc6, "a5")
    assert active(mf, mf.group.identity, a) == tuple(a)
    assert active(mf, inv, a) == tuple(a5)
    mf2 = basis_manifold(cyc6, idx(cyc6, "a2,a3"))
    assert active(mf2, mf2.auto(inv), idx(cyc6, "a2,a3")) == tuple(idx(cyc6, "a4,a3"))


def test_active_rejects_non_automorphism(cyc6, cyc6_manifold):
    with pytest.raises(NotAutomorphism):
        active(cyc6_manifold, Morphism(cyc6, [0] * 6), idx(cyc6, "a"))


def test_passive_examples(cyc6, cyc6_manifold):
    mf = cyc6_manifold
    inv = 1 - mf.group.identity
    a, a5 = tuple(idx(cyc6, "a")), tuple(idx(cyc6, "a5"))
    assert passive(mf, mf.group.identity, a5) == a5
    assert passive(mf, inv, a) == a5
    # commuting diagram with R = S = inversion and Y = [a5]
    assert passive(mf, inv, a5) == active(mf, inv, passive(mf, inv, a)) == a


def test_passive_outside_manifold(cyc6, cyc6_manifold):
    with pytest.raises(NotInManifold):
        passive(cyc6_manifold, 0, idx(cyc6, "a2"))


def test_passive_product_examples(cyc6_manifold):
    mf = cyc6_manifold
    e, inv = mf.group.identity, 1 - mf.group.identity
    assert passive_product(mf, inv, inv) == e
    assert passive_product(mf, e, inv) == inv


def test_passive_product_associative_on_gset(gset):
    mf = basis_manifold(gset, [0, 3])
    rng = random.Random(7)
    n = len(mf.autos)
    assert n == 18
    # group-table oracle: composition of the raw tables
    table = {(i, j): mf.group.index_of(mf.auto(i).compose(mf.auto(j))) for i in range(n) for j in range(n)}
    for _ in range(20):
        T, S, U = (rng.randrange(n) for _ in range(3))
        lhs = passive_product(mf, passive_product(mf, T, S), U)
        rhs = passive_product(mf, T, passive_product(mf, S, U))
        assert lhs == rhs
        assert passive_product(mf, T, S) == table[S, T]


def test_active_is_free_and_passive_single_transitive():
    for _, rep, mf in manifolds():
        n = len(mf.autos)
        assert len(mf.orbit) == n
        for Y in mf.orbit:
            assert is_basis(rep, Y)
            images = [active(mf, R, Y) for R in range(n)]
            assert len(set(images)) == n
            targets = [passive(mf, S, Y) for S in range(n)]
            assert sorted(targets) == sorted(mf.orbit)


def test_passive_commutes_with_active():
    for _, rep, mf in manifolds():
        n = len(mf.autos)
        for R, S in itertools.product(range(n), repeat=2):
            for Y in mf.orbit:
                assert passive(mf, S, active(mf, R, Y)) == active(mf, R, passive(mf, S, Y))


def test_passive_product_is_composition():
    for _, rep, mf in manifolds():
        n = len(mf.autos)
        for T, S in itertools.product(range(n), repeat=2):
            TS = passive_product(mf, T, S)
            for Y in mf.orbit:
                assert passive(mf, TS, Y) == passive(mf, T, passive(mf, S, Y))


def test_coordinate_transform_examples(cyc6, cyc6_manifold, gset):
    a, a5 = idx(cyc6, "a"), idx(cyc6, "a5")
    w = coordinate_transform(cyc6_manifold, a, a5, slot(0))
    assert evaluate(w, cyc6, a5) == a[0]
    assert w == coordinate_set(cyc6, a5)[a[0]]
    assert coordinate_transform(cyc6_manifold, a, a, slot(0)) == slot(0)

    mf = basis_manifold(gset, [0, 3])
    g = gset.algA.index("g")
    w = coordinate_transform(mf, [0, 3], [1, 3], Act(g, slot(0)))
    # denotation is preserved: act(g, $0) over [0, 3] is f(g)(0) = 1
    assert evaluate(w, gset, [1, 3]) == evaluate(Act(g, slot(0)), gset, [0, 3]) == 1


def test_coordinate_transform_across_manifolds(cyc6, cyc6_manifold):
    with pytest.raises(NotInManifold):
        coordinate_transform(cyc6_manifold, idx(cyc6, "a"), idx(cyc6, "a2,a3"), slot(0))


def test_coordinate_transform_preserves_denotation():
    for _, rep, mf in manifolds():
        for Y, Yp in itertools.product(mf.orbit, repeat=2):
            cs = coordinate_set(rep, Y)
            for m in range(len(rep.algM)):
                w = coordinate_transform(mf, Y, Yp, cs[m])
                assert evaluate(w, rep, Yp) == m


def test_identity_and_inverse_coordinates():
    for _, rep, mf in manifolds():
        X = mf.reference
        csX = coordinate_set(rep, X)
        assert [csX[x] for x in X] == identity_coordinates(len(X))
        for R in mf.autos:
            RX = R.image(X)
            forward = [csX[y] for y in RX]  # W(f, X, R∘X)
            back = [coordinate_set(rep, RX)[x] for x in X]  # W(f, R∘X, X): coordinates of R⁻¹
            inv = R.inverse()
            for x, w in zip(X, back):
                assert evaluate(w, rep, X) == inv(x)
            for m in range(len(rep.algM)):
                w = substitute(substitute(csX[m], forward), back)
                assert evaluate(w, rep, X) == m
