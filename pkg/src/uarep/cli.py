"""Command-line front end.

Every verb prints one record per line. ``--json`` switches to one JSON object
per line with the same field names. Exit status: 0 on success, 1 on a domain
error, 2 on a usage or model-file error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .basis import basis_manifold, coordinate_transform, is_basis, passive, reduce_to_basis
from .coordinates import coordinate_set
from .geometry import geom_orbit, representative
from .model import load_model
from .morphism import DEFAULT_ENDO_BUDGET, enumerate_endomorphisms
from .representation import closure
from .terms import format_term, parse_term

VERBS = ("closure", "basis", "reduce", "endos", "autos", "coords", "manifold", "passive", "coordxform", "geom", "check")


class UsageError(Exception):
    pass


def _labels(text):
    if text is None:
        return None
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uarep", description=__doc__.splitlines()[0])
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--model", required=True, help="model file")
    parser.add_argument("--rep", help="representation name")
    parser.add_argument("--set", help="comma separated element labels")
    parser.add_argument("--basis", help="comma separated labels of a basis")
    parser.add_argument("--target", help="second basis (coordxform)")
    parser.add_argument("--auto", type=int, help="automorphism index (passive)")
    parser.add_argument("--geom", help="geometry block name")
    parser.add_argument("--word", help="seed coordinate word (geom)")
    parser.add_argument("--budget", type=int, default=DEFAULT_ENDO_BUDGET)
    parser.add_argument("--json", action="store_true")
    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.verb} needs --{name}")


def _records(args):
    """Yield ``(text, fields)`` pairs for the requested verb."""
    if args.verb == "check":
        yield from _check(args)
        return
    model = load_model(args.model)
    if args.verb == "geom":
        _need(args, "word")
        ctx = model.context(args.geom, args.budget)
        mg = ctx.manifold_g
        Y_N = mg.rep.algM.indices(_labels(args.basis)) if args.basis else mg.reference
        p = parse_term(args.word, ctx.repG, basis_size=len(Y_N))
        obj = geom_orbit(ctx, Y_N, p)
        basis, w = obj.seed
        yield obj.report(), {
            "type": ctx.name,
            "seed_basis": ctx.repG.label_set(basis),
            "seed_word": format_term(w, ctx.repG),
            "orbit_size": len(obj),
            "representative": ctx.repG.algM.label(representative(obj)),
        }
        return
    rep = model.rep(args.rep)
    M = rep.algM
    lab = M.label
    if args.verb in ("closure", "basis", "reduce"):
        _need(args, "set")
        X = M.indices(_labels(args.set))
        if args.verb == "closure":
            res = closure(rep, X)
            for m, line in zip(res.closure, res.report()):
                yield line, {"elem": lab(m), "stage": res.stage_of[m], "word": rep.format(res.witnesses[m])}
        elif args.verb == "basis":
            ok = is_basis(rep, X)
            yield f"basis: {str(ok).lower()}", {"basis": ok}
        else:
            B = reduce_to_basis(rep, X)
            yield f"basis: [{', '.join(rep.label_set(B))}]", {"basis": rep.label_set(B)}
        return
    _need(args, "basis")
    X = M.indices(_labels(args.basis))
    if args.verb in ("endos", "autos"):
        ms = enumerate_endomorphisms(rep, X, args.budget)
        chosen = ms.all if args.verb == "endos" else ms.autos
        for R in chosen:
            yield R.format(), {"map": {lab(m): lab(r) for m, r in enumerate(R.table)}}
        yield f"endos {len(ms.all)} autos {len(ms.autos)}", {"endos": len(ms.all), "autos": len(ms.autos)}
    elif args.verb == "coords":
        cs = coordinate_set(rep, X)
        for m in range(len(M)):
            word = rep.format(cs[m])
            yield f"coord {lab(m)} {word}", {"coord": lab(m), "word": word}
    elif args.verb == "manifold":
        mf = basis_manifold(rep, X, args.budget)
        for j, (Y, line) in enumerate(zip(mf.orbit, mf.listing())):
            yield line, {"basis": j, "labels": rep.label_set(Y), "auto": j}
    elif args.verb == "passive":
        _need(args, "auto")
        mf = basis_manifold(rep, X, args.budget)
        if not 0 <= args.auto < len(mf.autos):
            raise UsageError(f"--auto must be in 0..{len(mf.autos) - 1}")
        points = [tuple(M.indices(_labels(args.set)))] if args.set else mf.orbit
        for Y in points:
            Yp = passive(mf, args.auto, Y)
            src, dst = rep.label_set(Y), rep.label_set(Yp)
            yield (
                f"passive auto {args.auto}: [{', '.join(src)}] -> [{', '.join(dst)}]",
                {"passive": args.auto, "from": src, "to": dst},
            )
    elif args.verb == "coordxform":
        _need(args, "target")
        Yp = M.indices(_labels(args.target))
        mf = basis_manifold(rep, X, args.budget)
        cs = coordinate_set(rep, X)
        for m in range(len(M)):
            old = rep.format(cs[m])
            new = rep.format(coordinate_transform(mf, X, Yp, cs[m]))
            yield f"elem {lab(m)} from {old} to {new}", {"elem": lab(m), "from": old, "to": new}


def _check(args):
    model = load_model(args.model, check=False)
    for name, rep in model.representations.items():
        problem = rep.violation()
        if problem:
            yield f"violation {name}: {problem}", {"violation": name, "equation": problem}
            return
    for name in model.geometries:
        try:
            model.context(name, args.budget)
        except errors.DomainError as exc:
            yield f"violation {name}: {exc}", {"violation": name, "equation": str(exc)}
            return
    yield "ok", {"status": "ok"}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def emit(text, fields):
        print(json.dumps(fields, ensure_ascii=False) if args.json else text, file=out)

    try:
        for text, fields in _records(args):
            emit(text, fields)
    except errors.DomainError as exc:
        emit(f"error {type(exc).__name__}: {exc}", {"error": type(exc).__name__, "message": str(exc)})
        return 1
    except (errors.ModelError, UsageError, OSError) as exc:
        name = type(exc).__name__
        emit(f"error {name}: {exc}", {"error": name, "message": str(exc)})
        return 2
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
