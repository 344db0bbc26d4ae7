"""
Geometric objects
=================

A word over a basis of g is swept through the basis manifold by the passive
action, steered by a group homomorphism h. The element it names does not
depend on the basis.
"""

import itertools

from uarep.geometry import geom_act, geom_op, geom_orbit, representative
from uarep.model import load_fixture
from uarep.terms import parse_term

ctx = load_fixture("GSET").context("H")
G = ctx.repG
p = geom_orbit(ctx, ctx.manifold_g.reference, parse_term("act(g, $0)", G))
print(p.report())
for basis, w in p.orbit.items():
    print(G.label_set(basis), G.format(w))

values = {
    representative(p, Y_M, Y_N)
    for Y_M, Y_N in itertools.product(ctx.manifold_f.orbit, ctx.manifold_g.orbit)
}
print("representatives over all bases:", G.label_set(sorted(values)))
print(geom_act(G.algA.index("g"), p).report())

cyc = load_fixture("CYC6").context("H")
x = geom_orbit(cyc, cyc.manifold_g.reference, parse_term("$0", cyc.repG))
print(geom_op("mul", [x, x]).report())
