"""Brute-force oracles, written against the raw tables only."""

import itertools


def _apply(alg, op, args):
    t = alg.tables[op]
    return int(t[tuple(args)]) if args else int(t)


def naive_closure(rep, X):
    M = rep.algM
    S = set(X)
    while True:
        new = set(S)
        for op, k in M.signature.ops:
            for args in itertools.product(sorted(S), repeat=k):
                new.add(_apply(M, op, args))
        for a in range(len(rep.algA)):
            for m in S:
                new.add(int(rep.action[a, m]))
        if new == S:
            return S
        S = new


def naive_is_morphism(rep, R):
    M = rep.algM
    for op, k in M.signature.ops:
        for args in itertools.product(range(len(M)), repeat=k):
            if R[_apply(M, op, args)] != _apply(M, op, [R[x] for x in args]):
                return False
    for a in range(len(rep.algA)):
        for m in range(len(M)):
            if R[int(rep.action[a, m])] != int(rep.action[a, R[m]]):
                return False
    return True


def brute_endomorphisms(rep):
    n = len(rep.algM)
    return {R for R in itertools.product(range(n), repeat=n) if naive_is_morphism(rep, R)}


def generating_subsets(rep):
    n = len(rep.algM)
    return {
        X
        for r in range(n + 1)
        for X in itertools.combinations(range(n), r)
        if len(naive_closure(rep, X)) == n
    }


def minimal_generating_subsets(rep):
    gen = generating_subsets(rep)
    return {X for X in gen if not any(set(Y) < set(X) for Y in gen)}


def orbit(rep, m):
    return naive_closure(rep, [m])
