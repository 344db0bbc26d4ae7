"""
Coordinates
===========

Over a generating set each element gets a coordinate word whose leaves are
slots. Substituting words into slots composes maps.
"""

from uarep.coordinates import coordinate_set, morphism_coordinates, substitute
from uarep.model import load_fixture
from uarep.terms import evaluate

rep = load_fixture("CYC6").rep("f")
M = rep.algM
X = M.indices(["a2", "a3"])

cs = coordinate_set(rep, X)
for m in range(len(M)):
    print(M.label(m), rep.format(cs[m]))

# inversion, written as the coordinates of its images of X
inversion = [(-k) % 6 for k in range(6)]
images = morphism_coordinates(rep, X, inversion)
for m in range(len(M)):
    w = substitute(cs[m], images)
    print(M.label(m), "->", M.label(evaluate(w, rep, X)), "via", rep.format(w))
