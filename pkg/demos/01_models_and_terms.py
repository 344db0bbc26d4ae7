"""
Finite models and terms
=======================

Load a shipped model, look at its tables and evaluate a few terms.
"""

from uarep.model import fixture_path, format_model, load_fixture, parse_model
from uarep.terms import evaluate, format_term, parse_term

model = load_fixture("CYC6")
rep = model.rep("f")
C6 = rep.algM

print(C6.carrier)
print(C6.tables["mul"])  # read-only numpy table, indexed by element positions

# a term over concrete elements
t = parse_term("mul(a2, mul(a, a3))", rep)
print(format_term(t, rep), "=", C6.label(evaluate(t, rep)))

# a slotted term is evaluated against a basis
w = parse_term("mul($0, $0)", rep)
print(format_term(w, rep), "over [a] =", C6.label(evaluate(w, rep, C6.indices(["a"]))))

# printing is canonical, so a model round-trips
text = fixture_path("CYC6").read_text()
print(format_model(parse_model(text)) == text)
