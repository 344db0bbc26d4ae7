"""
Endomorphisms and automorphisms
===============================

A morphism is fixed by the images of a generating set, so enumerating image
tuples and extending them finds every endomorphism.
"""

from uarep.errors import Inconsistent
from uarep.model import load_fixture
from uarep.morphism import enumerate_endomorphisms, extend_map

for name, basis in [("CYC6", ["a"]), ("VEC2", ["10", "01"]), ("GSET", ["0", "3"])]:
    rep = load_fixture(name).rep("f")
    ms = enumerate_endomorphisms(rep, rep.algM.indices(basis))
    print(name, "endos", len(ms.all), "autos", len(ms.autos))

rep = load_fixture("CYC6").rep("f")
M = rep.algM
print(extend_map(rep, M.indices(["a"]), M.indices(["a5"])).format())

# swapping a2 and a3 is not a morphism; extension says where it breaks
try:
    extend_map(rep, M.indices(["a2", "a3"]), M.indices(["a3", "a2"]))
except Inconsistent as exc:
    print(exc)
