"""Model files: algebras, representations and geometry contexts as text.

Grammar (line oriented, ``#`` starts a comment, case sensitive)::

    algebra <Name> {
      elements: <id> (, <id>)* ;
      op <id>/<arity> { (<id> (, <id>)*) = <id> ; ... }
      ...
    }
    representation <Name> {
      omega1: <AlgName> ;                 # omitted: trivial one-element monoid
      omega2: <AlgName> ;
      mode: monoid(<mul> [, <unit>]) ;    # optional, default raw
      action { (<aId>, <mId>) = <mId> ; ... }
    }
    geometry <Name> {
      f: <RepName> ; basis_f: <id> (, <id>)* ;
      g: <RepName> ; basis_g: <id> (, <id>)* ;
      h { (<ids>) -> (<ids>) ; ... }
    }

In ``h`` an automorphism of ``f`` is named by its image of ``basis_f`` and
an automorphism of ``g`` by its image of ``basis_g``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .algebra import FiniteAlgebra, Signature, trivial_algebra
from .errors import ArityError, DuplicateLabel, ModelError, ModelSyntaxError, UnknownLabel
from .representation import Monoid, Representation

_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<arrow>->)|(?P<id>[A-Za-z0-9_]+)|(?P<punct>[{}(),;:=/])")


@dataclass(frozen=True)
class GeometrySpec:
    name: str
    f: str
    basis_f: tuple[str, ...]
    g: str
    basis_g: tuple[str, ...]
    h: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]


@dataclass(eq=False)
class ModelFile:
    algebras: dict[str, FiniteAlgebra] = field(default_factory=dict)
    representations: dict[str, Representation] = field(default_factory=dict)
    geometries: dict[str, GeometrySpec] = field(default_factory=dict)
    implicit_omega1: set[str] = field(default_factory=set)
    order: list[tuple[str, str]] = field(default_factory=list)

    def rep(self, name: str | None = None) -> Representation:
        if name is None:
            if not self.representations:
                raise UnknownLabel("", "the model declares no representation")
            return next(iter(self.representations.values()))
        try:
            return self.representations[name]
        except KeyError:
            raise UnknownLabel(name, f"unknown representation '{name}'") from None

    def context(self, name: str | None = None, budget: int | None = None):
        """Build the :class:`~uarep.geometry.GeomContext` of a geometry block."""
        from .basis import basis_manifold
        from .geometry import GeomContext
        from .morphism import DEFAULT_ENDO_BUDGET

        if name is None:
            if len(self.geometries) != 1:
                raise UnknownLabel("", "the model has no single geometry block; name one")
            name = next(iter(self.geometries))
        if name not in self.geometries:
            raise UnknownLabel(name, f"unknown geometry '{name}'")
        geo = self.geometries[name]
        budget = budget or DEFAULT_ENDO_BUDGET
        rf, rg = self.rep(geo.f), self.rep(geo.g)
        mf = basis_manifold(rf, rf.algM.indices(geo.basis_f), budget)
        mg = basis_manifold(rg, rg.algM.indices(geo.basis_g), budget)
        h = [None] * len(mf.autos)
        for src, dst in geo.h:
            i = mf.locate(rf.algM.indices(src))
            j = mg.locate(rg.algM.indices(dst))
            if h[i] is not None and h[i] != j:
                raise ModelError(f"h lists ({', '.join(src)}) twice")
            h[i] = j
        missing = [k for k, x in enumerate(h) if x is None]
        if missing:
            src = ", ".join(rf.label_set(mf.orbit[missing[0]]))
            raise ModelError(f"h has no entry for ({src})")
        return GeomContext(mf, mg, tuple(h), name)


class _Parser:
    def __init__(self, text):
        self.toks = []
        line, col, pos = 1, 1, 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ModelSyntaxError(f"unexpected character {text[pos]!r}", line, col)
            kind = m.lastgroup
            if kind == "nl":
                line, col = line + 1, 1
            else:
                if kind not in ("ws", "comment"):
                    self.toks.append((kind, m.group(), line, col))
                col += m.end() - m.start()
            pos = m.end()
        self.toks.append(("eof", "", line, col))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, value=None, kind=None, what=None):
        tk = self.toks[self.pos]
        if (value is not None and tk[1] != value) or (kind is not None and tk[0] != kind):
            want = what or (f"'{value}'" if value is not None else "an identifier")
            got = f"'{tk[1]}'" if tk[0] != "eof" else "end of input"
            raise ModelSyntaxError(f"expected {want}, got {got}", tk[2], tk[3])
        self.pos += 1
        return tk

    def ident(self, what="an identifier"):
        return self.take(kind="id", what=what)

    def id_list(self, close):
        out = [self.ident()]
        while self.peek()[1] == ",":
            self.take(",")
            out.append(self.ident())
        self.take(close)
        return out

    def tuple_(self):
        self.take("(")
        if self.peek()[1] == ")":
            self.take(")")
            return []
        return self.id_list(")")


def _resolve(alg, tok):
    try:
        return alg.index(tok[1])
    except UnknownLabel:
        raise UnknownLabel(tok[1], f"unknown element '{tok[1]}' of {alg.name}", tok[2], tok[3]) from None


def parse_model(text: str, check: bool = True) -> ModelFile:
    """Parse a model file.

    With ``check=False`` representations are built without verifying their
    mode axioms, so a faulty file can still be loaded and inspected.
    """
    p = _Parser(text)
    model = ModelFile()

    def declare(kind, tok):
        if any(name == tok[1] for _, name in model.order):
            raise DuplicateLabel(tok[1], tok[2], tok[3])
        model.order.append((kind, tok[1]))

    while p.peek()[0] != "eof" or not model.order:
        kw = p.peek()
        if kw[1] == "algebra":
            _algebra(p, model, declare)
        elif kw[1] == "representation" and model.order:
            _representation(p, model, declare, check)
        elif kw[1] == "geometry" and model.order:
            _geometry(p, model, declare)
        else:
            want = "'algebra'" if not model.algebras else "'algebra', 'representation' or 'geometry'"
            got = f"'{kw[1]}'" if kw[0] != "eof" else "end of input"
            raise ModelSyntaxError(f"expected {want}, got {got}", kw[2], kw[3])
    return model


def _algebra(p, model, declare):
    p.take("algebra")
    name = p.ident("an algebra name")
    declare("algebra", name)
    p.take("{")
    p.take("elements")
    p.take(":")
    elems = p.id_list(";")
    labels = []
    for tok in elems:
        if tok[1] in labels:
            raise DuplicateLabel(tok[1], tok[2], tok[3])
        labels.append(tok[1])
    index = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    ops, tables = [], {}
    while p.peek()[1] == "op":
        p.take("op")
        sym = p.ident("an operation name")
        if sym[1] in tables:
            raise DuplicateLabel(sym[1], sym[2], sym[3])
        p.take("/")
        ar_tok = p.ident("an arity")
        if not ar_tok[1].isdigit():
            raise ModelSyntaxError(f"expected an arity, got '{ar_tok[1]}'", ar_tok[2], ar_tok[3])
        k = int(ar_tok[1])
        if k > 4:
            raise ArityError(f"arity {k} exceeds the maximum 4", ar_tok[2], ar_tok[3])
        p.take("{")
        table = np.full((n,) * k, -1, dtype=np.int64)
        while p.peek()[1] == "(":
            row_tok = p.peek()
            args = p.tuple_()
            if len(args) != k:
                raise ArityError(
                    f"row of '{sym[1]}' has {len(args)} argument(s), expected {k}",
                    row_tok[2],
                    row_tok[3],
                )
            p.take("=")
            out = p.ident("an element")
            p.take(";")
            idx = []
            for tok in args + [out]:
                if tok[1] not in index:
                    raise UnknownLabel(tok[1], f"unknown element '{tok[1]}' of {name[1]}", tok[2], tok[3])
                idx.append(index[tok[1]])
            cell = tuple(idx[:-1])
            if table[cell] != -1:
                raise ModelError(f"duplicate row for {sym[1]}({', '.join(a[1] for a in args)})", row_tok[2], row_tok[3])
            table[cell] = idx[-1]
        p.take("}")
        if (table == -1).any():
            hole = tuple(int(x) for x in np.argwhere(table == -1)[0])
            raise ModelError(
                f"table of '{sym[1]}' has no row for ({', '.join(labels[i] for i in hole)})",
                sym[2],
                sym[3],
            )
        ops.append((sym[1], k))
        tables[sym[1]] = table
    p.take("}")
    alg = FiniteAlgebra(name[1], Signature(tuple(ops)), tuple(labels), tables)
    alg.check_tables()
    model.algebras[name[1]] = alg


def _algebra_ref(p, model):
    tok = p.ident("an algebra name")
    if tok[1] not in model.algebras:
        raise UnknownLabel(tok[1], f"unknown algebra '{tok[1]}'", tok[2], tok[3])
    p.take(";")
    return model.algebras[tok[1]]


def _representation(p, model, declare, check):
    p.take("representation")
    name = p.ident("a representation name")
    declare("representation", name)
    p.take("{")
    A = None
    if p.peek()[1] == "omega1":
        p.take("omega1")
        p.take(":")
        A = _algebra_ref(p, model)
    p.take("omega2")
    p.take(":")
    M = _algebra_ref(p, model)
    if A is None:
        p.take("}")
        model.implicit_omega1.add(name[1])
        rep = Representation(
            trivial_algebra(), M, np.arange(len(M))[None, :], Monoid("mul", 0), name[1], check=check
        )
        model.representations[name[1]] = rep
        return
    mode = None
    if p.peek()[1] == "mode":
        p.take("mode")
        p.take(":")
        kind = p.ident("'monoid' or 'raw'")
        if kind[1] == "monoid":
            p.take("(")
            mul = p.ident("an operation name")
            if mul[1] not in A.signature:
                raise UnknownLabel(mul[1], f"unknown operation '{mul[1]}' of {A.name}", mul[2], mul[3])
            unit = None
            if p.peek()[1] == ",":
                p.take(",")
                unit = _resolve(A, p.ident("an element"))
            p.take(")")
            mode = Monoid(mul[1], unit)
        elif kind[1] != "raw":
            raise ModelSyntaxError(f"expected 'monoid' or 'raw', got '{kind[1]}'", kind[2], kind[3])
        p.take(";")
    p.take("action")
    p.take("{")
    action = np.full((len(A), len(M)), -1, dtype=np.int64)
    while p.peek()[1] == "(":
        row_tok = p.peek()
        args = p.tuple_()
        if len(args) != 2:
            raise ArityError(f"action rows take (a, m), got {len(args)} item(s)", row_tok[2], row_tok[3])
        p.take("=")
        out = p.ident("an element")
        p.take(";")
        a, m, r = _resolve(A, args[0]), _resolve(M, args[1]), _resolve(M, out)
        if action[a, m] != -1:
            raise ModelError(f"duplicate action row for ({args[0][1]}, {args[1][1]})", row_tok[2], row_tok[3])
        action[a, m] = r
    p.take("}")
    p.take("}")
    if (action == -1).any():
        a, m = (int(x) for x in np.argwhere(action == -1)[0])
        raise ModelError(f"action of '{name[1]}' has no row for ({A.label(a)}, {M.label(m)})", name[2], name[3])
    model.representations[name[1]] = Representation(A, M, action, mode, name[1], check=check)


def _geometry(p, model, declare):
    p.take("geometry")
    name = p.ident("a geometry name")
    declare("geometry", name)
    p.take("{")
    parts = {}
    for key, basis_key in (("f", "basis_f"), ("g", "basis_g")):
        p.take(key)
        p.take(":")
        tok = p.ident("a representation name")
        if tok[1] not in model.representations:
            raise UnknownLabel(tok[1], f"unknown representation '{tok[1]}'", tok[2], tok[3])
        p.take(";")
        rep = model.representations[tok[1]]
        p.take(basis_key)
        p.take(":")
        basis = p.id_list(";")
        for b in basis:
            _resolve(rep.algM, b)
        parts[key] = (tok[1], tuple(b[1] for b in basis), rep)
    p.take("h")
    p.take("{")
    rows = []
    while p.peek()[1] == "(":
        src = p.tuple_()
        p.take("->", what="'->'")
        dst = p.tuple_()
        p.take(";")
        for toks, (_, basis, rep) in ((src, parts["f"]), (dst, parts["g"])):
            if len(toks) != len(basis):
                raise ArityError(f"expected {len(basis)} label(s) in an h row", toks[0][2] if toks else None, toks[0][3] if toks else None)
            for tok in toks:
                _resolve(rep.algM, tok)
        rows.append((tuple(t[1] for t in src), tuple(t[1] for t in dst)))
    p.take("}")
    p.take("}")
    model.geometries[name[1]] = GeometrySpec(
        name[1], parts["f"][0], parts["f"][1], parts["g"][0], parts["g"][1], tuple(rows)
    )


def format_model(model: ModelFile) -> str:
    """Canonical text: blocks in declaration order, table rows in index order."""
    blocks = []
    for kind, name in model.order:
        if kind == "algebra":
            blocks.append(_format_algebra(model.algebras[name]))
        elif kind == "representation":
            blocks.append(_format_rep(model.representations[name], name in model.implicit_omega1))
        else:
            blocks.append(_format_geometry(model.geometries[name]))
    return "\n".join(blocks)


def _format_algebra(alg):
    lines = [f"algebra {alg.name} {{", f"  elements: {', '.join(alg.carrier)};"]
    for sym, k in alg.signature.ops:
        lines.append(f"  op {sym}/{k} {{")
        for args in itertools.product(range(len(alg)), repeat=k):
            lhs = ", ".join(alg.label(x) for x in args)
            lines.append(f"    ({lhs}) = {alg.label(alg.apply(sym, args))};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _format_rep(rep, implicit):
    lines = [f"representation {rep.name} {{"]
    if implicit:
        lines.append(f"  omega2: {rep.algM.name};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    A, M = rep.algA, rep.algM
    lines.append(f"  omega1: {A.name};")
    lines.append(f"  omega2: {M.name};")
    if rep.mode is not None:
        unit = f", {A.label(rep.mode.unit)}" if rep.mode.unit is not None else ""
        lines.append(f"  mode: monoid({rep.mode.mul}{unit});")
    lines.append("  action {")
    for a in range(len(A)):
        for m in range(len(M)):
            lines.append(f"    ({A.label(a)}, {M.label(m)}) = {M.label(rep.act(a, m))};")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _format_geometry(geo):
    lines = [
        f"geometry {geo.name} {{",
        f"  f: {geo.f};",
        f"  basis_f: {', '.join(geo.basis_f)};",
        f"  g: {geo.g};",
        f"  basis_g: {', '.join(geo.basis_g)};",
        "  h {",
    ]
    for src, dst in geo.h:
        lines.append(f"    ({', '.join(src)}) -> ({', '.join(dst)});")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_model(path, check: bool = True) -> ModelFile:
    return parse_model(Path(path).read_text(encoding="utf-8"), check=check)


FIXTURES = Path(__file__).parent / "data"


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture: ``"CYC6"``, ``"VEC2"`` or ``"GSET"``."""
    return FIXTURES / f"{name}.alg"


def load_fixture(name: str, check: bool = True) -> ModelFile:
    return load_model(fixture_path(name), check=check)
