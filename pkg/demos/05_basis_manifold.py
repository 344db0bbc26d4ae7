"""
Bases and the basis manifold
============================

Automorphisms move a basis around its orbit (active). The twin passive
action changes the basis and rewrites coordinates without moving elements.
"""

from uarep.basis import active, all_bases, basis_manifold, coordinate_transform, passive, reduce_to_basis
from uarep.coordinates import coordinate_set
from uarep.model import load_fixture
from uarep.terms import evaluate

rep = load_fixture("CYC6").rep("f")
M = rep.algM
print("bases:", [rep.label_set(B) for B in all_bases(rep)])
print("reduce [a, a2, a3]:", rep.label_set(reduce_to_basis(rep, M.indices(["a", "a2", "a3"]))))

mf = basis_manifold(rep, M.indices(["a"]))
print("\n".join(mf.listing()))

inv = 1 - mf.group.identity
Y = mf.reference
print("active:", rep.label_set(active(mf, inv, Y)), "passive:", rep.label_set(passive(mf, inv, Y)))

gset = load_fixture("GSET").rep("f")
mg = basis_manifold(gset, [0, 3])
cs = coordinate_set(gset, [0, 3])
for m in range(len(gset.algM)):
    w = coordinate_transform(mg, [0, 3], [1, 3], cs[m])
    print(m, gset.format(cs[m]), "->", gset.format(w), "=", evaluate(w, gset, [1, 3]))
