"""
Generated subrepresentations
============================

The closure of a set grows in stages. Every new element records the word
that first produced it.
"""

from uarep.model import load_fixture
from uarep.representation import closure, is_generating, restrict

rep = load_fixture("CYC6").rep("f")
M = rep.algM

res = closure(rep, M.indices(["a"]))
for line in res.report():
    print(line)
print("stage sizes:", [len(s) for s in res.stages])

# {a2} stays inside the even powers
print(is_generating(rep, M.indices(["a2"])), rep.label_set(closure(rep, M.indices(["a2"])).closure))

# orbits of a group action are stable sets
gset = load_fixture("GSET").rep("f")
sub = restrict(gset, [0, 1, 2])
print("restricted action:\n", sub.restricted.action)
