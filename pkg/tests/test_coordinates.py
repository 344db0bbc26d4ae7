import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uarep.coordinates import (
    coord_act,
    coord_op,
    coordinate_set,
    coordinates_of,
    identity_coordinates,
    morphism_coordinates,
    substitute,
)
from uarep.errors import ArityError, NotGenerating, SlotOutOfRange
from uarep.model import load_fixture, parse_model
from uarep.morphism import enumerate_endomorphisms
from uarep.representation import closure
from uarep.terms import Act, Apply, Leaf, evaluate, format_term, slot

from conftest import idx

GENERATING = {"CYC6": ["a", "a2,a3", "a5"], "VEC2": ["10,01", "11,01"], "GSET": ["0,3", "1,5"]}


def test_first_discovery_action_word(gset):
    X = idx(gset, "0,3")
    w = coordinates_of(gset, X, idx(gset, "4")[0])
    assert w == Act(gset.algA.index("g"), slot(1))
    assert format_term(w, gset) == "act(g, $1)"


def test_generator_coordinates_are_slots(fixtures):
    for name, sets in GENERATING.items():
        rep = fixtures[name]
        for labels in sets:
            X = idx(rep, labels)
            for i, x in enumerate(X):
                assert coordinates_of(rep, X, x) == slot(i)


def test_product_word_for_identity(cyc6):
    X = idx(cyc6, "a2,a3")
    e = idx(cyc6, "e")[0]
    w = coordinates_of(cyc6, X, e)
    assert format_term(w, cyc6) == "mul($1, $1)"
    assert evaluate(w, cyc6, X) == e
    # re-run closure and evaluate the concrete witness
    assert evaluate(closure(cyc6, X).witnesses[e], cyc6) == e


def test_coordinates_need_generating_set(cyc6):
    with pytest.raises(NotGenerating):
        coordinates_of(cyc6, idx(cyc6, "a2"), 0)


def test_coord_op_vectors(vec2):
    X = idx(vec2, "10,01")
    w = coord_op(vec2, "add", [slot(0), slot(1)])
    assert vec2.algM.label(evaluate(w, vec2, X)) == "11"


def test_coord_op_constant():
    rep = parse_model("algebra P { elements: x; op z/0 { () = x; } }\nrepresentation f { omega2: P; }").rep()
    assert coord_op(rep, "z", []) == Apply("z", ())


def test_coord_op_square(cyc6):
    w = coord_op(cyc6, "mul", [slot(0), slot(0)])
    assert evaluate(w, cyc6, idx(cyc6, "a")) == idx(cyc6, "a2")[0]


def test_coord_op_arity(cyc6):
    with pytest.raises(ArityError):
        coord_op(cyc6, "mul", [slot(0)])


def test_coord_act(gset, vec2, cyc6):
    w = coord_act(gset.algA.index("g"), slot(0))
    assert evaluate(w, gset, idx(gset, "0,3")) == 1
    assert vec2.algM.label(evaluate(coord_act(vec2.algA.index("0"), slot(0)), vec2, idx(vec2, "10,01"))) == "00"
    u = vec2.mode.unit
    for m in range(4):
        assert evaluate(coord_act(u, slot(0)), vec2, [m]) == m
    for m in range(6):
        assert evaluate(coord_act(0, slot(0)), cyc6, [m]) == m


def test_substitute_identity(cyc6):
    w = coordinates_of(cyc6, idx(cyc6, "a2,a3"), idx(cyc6, "a")[0])
    assert substitute(w, identity_coordinates(2)) == w


def test_substitute_renames_slots(gset):
    g = gset.algA.index("g")
    assert substitute(Act(g, slot(1)), [slot(1), slot(0)]) == Act(g, slot(0))


def test_substitute_out_of_range():
    with pytest.raises(SlotOutOfRange):
        substitute(slot(2), [slot(0)])


def test_substitute_leaves_concrete_leaves():
    assert substitute(Apply("mul", (Leaf(3), slot(0))), [slot(1)]) == Apply("mul", (Leaf(3), slot(1)))


def test_inversion_by_superposition(cyc6):
    X = idx(cyc6, "a")
    inversion = [(-k) % 6 for k in range(6)]  # label order is e, a, a2, ..., a5
    images = morphism_coordinates(cyc6, X, inversion)
    cs = coordinate_set(cyc6, X)
    for m in range(6):
        assert evaluate(substitute(cs[m], images), cyc6, X) == inversion[m]


@pytest.mark.parametrize("name", ["CYC6", "VEC2", "GSET"])
def test_superposition_soundness_for_every_endomorphism(name):
    rep = load_fixture(name).rep("f")
    for labels in GENERATING[name]:
        X = idx(rep, labels)
        cs = coordinate_set(rep, X)
        for R in enumerate_endomorphisms(rep, X).all:
            images = morphism_coordinates(rep, X, R.table)
            for m in range(len(rep.algM)):
                assert evaluate(substitute(cs[m], images), rep, X) == R(m)


@pytest.mark.parametrize("name", ["CYC6", "VEC2", "GSET"])
def test_right_action_reading(name):
    """Superposing R's coordinates then S's realizes S∘R."""
    rep = load_fixture(name).rep("f")
    X = idx(rep, GENERATING[name][0])
    cs = coordinate_set(rep, X)
    endos = enumerate_endomorphisms(rep, X).all
    for R in endos:
        wR = morphism_coordinates(rep, X, R.table)
        for S in endos:
            wS = morphism_coordinates(rep, X, S.table)
            composed = [substitute(w, wS) for w in wR]
            for m in range(len(rep.algM)):
                assert evaluate(substitute(cs[m], composed), rep, X) == S(R(m))
                assert evaluate(substitute(substitute(cs[m], wR), wS), rep, X) == S(R(m))


# syntactic laws on random slotted terms ---------------------------------------


def slotted(n_slots):
    leaf = st.integers(0, n_slots - 1).map(slot)

    def extend(children):
        return st.one_of(
            st.tuples(children, children).map(lambda p: Apply("mul", p)),
            st.tuples(st.integers(0, 2), children).map(lambda p: Act(*p)),
        )

    return st.recursive(leaf, extend, max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(
    w=slotted(3),
    u=st.lists(slotted(2), min_size=3, max_size=3),
    v=st.lists(slotted(4), min_size=2, max_size=2),
)
def test_substitution_is_associative(w, u, v):
    assert substitute(substitute(w, u), v) == substitute(w, [substitute(x, v) for x in u])


@settings(max_examples=100, deadline=None)
@given(ws=st.lists(slotted(2), min_size=2, max_size=2), v=st.lists(slotted(3), min_size=2, max_size=2), a=st.integers(0, 2))
def test_lifted_operations_commute_with_substitution(ws, v, a):
    assert substitute(Apply("mul", tuple(ws)), v) == Apply("mul", tuple(substitute(w, v) for w in ws))
    assert substitute(Act(a, ws[0]), v) == Act(a, substitute(ws[0], v))
