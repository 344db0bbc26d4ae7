"""Signatures and finite algebras given by operation tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ArityError, DuplicateLabel, ModelError, UnknownLabel

MAX_ARITY = 4
MAX_CARRIER = 4096
RESERVED = frozenset({"act"})


@dataclass(frozen=True)
class Signature:
    """Ordered list of ``(symbol, arity)`` pairs."""

    ops: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        ops = tuple((str(s), int(k)) for s, k in self.ops)
        object.__setattr__(self, "ops", ops)
        seen = set()
        for sym, k in ops:
            if sym in seen:
                raise DuplicateLabel(sym)
            if sym in RESERVED:
                raise ModelError(f"'{sym}' is reserved")
            if not 0 <= k <= MAX_ARITY:
                raise ArityError(f"arity of '{sym}' must be in 0..{MAX_ARITY}, got {k}")
            seen.add(sym)

    def arity(self, symbol: str) -> int:
        for sym, k in self.ops:
            if sym == symbol:
                return k
        raise UnknownLabel(symbol, f"unknown operation '{symbol}'")

    def __contains__(self, symbol) -> bool:
        return any(sym == symbol for sym, _ in self.ops)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(sym for sym, _ in self.ops)

    def __len__(self):
        return len(self.ops)


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """A finite carrier with a total table for every operation symbol.

    Elements are the dense indices ``0..n-1``; ``carrier`` holds their labels.
    The table of a ``k``-ary operation is a read-only ``int64`` array of shape
    ``(n,) * k`` (a 0-d array for constants).
    """

    name: str
    signature: Signature
    carrier: tuple[str, ...]
    tables: Mapping[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        carrier = tuple(self.carrier)
        object.__setattr__(self, "carrier", carrier)
        n = len(carrier)
        if n > MAX_CARRIER:
            raise ModelError(f"carrier of '{self.name}' exceeds {MAX_CARRIER} elements")
        if len(set(carrier)) != n:
            dup = next(x for x in carrier if carrier.count(x) > 1)
            raise DuplicateLabel(dup)
        tables = {}
        for sym, k in self.signature.ops:
            if sym not in self.tables:
                raise ModelError(f"missing table for '{sym}'")
            t = np.array(self.tables[sym], dtype=np.int64)
            if t.shape != (n,) * k:
                raise ArityError(
                    f"table of '{sym}' has shape {t.shape}, expected {(n,) * k}"
                )
            if t.size and (t.min() < 0 or t.max() >= n):
                raise ModelError(f"table of '{sym}' has an output outside the carrier")
            if k == 0 and n == 0:
                raise ModelError(f"constant '{sym}' on an empty carrier")
            t.setflags(write=False)
            tables[sym] = t
        extra = set(self.tables) - set(self.signature.symbols)
        if extra:
            raise UnknownLabel(sorted(extra)[0], f"table for undeclared operation '{sorted(extra)[0]}'")
        object.__setattr__(self, "tables", tables)

    def __len__(self):
        return len(self.carrier)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.carrier)}

    @cached_property
    def _flat(self) -> dict[str, list[int]]:
        return {sym: t.ravel().tolist() for sym, t in self.tables.items()}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label, f"unknown element '{label}' of {self.name}") from None

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index(x) for x in labels]

    def label(self, i: int) -> str:
        return self.carrier[i]

    def apply(self, op: str, args: Sequence[int]) -> int:
        """Table lookup ``op(args)``."""
        flat = self._flat[op]
        n = len(self.carrier)
        pos = 0
        for x in args:
            pos = pos * n + x
        return flat[pos]

    def constants(self) -> list[int]:
        return [int(t) for sym, t in self.tables.items() if t.ndim == 0]

    def check_tables(self) -> None:
        """Exhaustive scan: every tuple has an in-range output."""
        n = len(self)
        for sym, k in self.signature.ops:
            for args in itertools.product(range(n), repeat=k):
                out = self.apply(sym, args)
                if not 0 <= out < n:
                    raise ModelError(f"{sym}{args} = {out} is out of range")

    @classmethod
    def from_function(cls, name, signature, carrier, funcs) -> FiniteAlgebra:
        """Build tables by calling ``funcs[sym](*labels)`` on every label tuple."""
        carrier = tuple(carrier)
        index = {x: i for i, x in enumerate(carrier)}
        n = len(carrier)
        tables = {}
        for sym, k in signature.ops:
            t = np.empty((n,) * k, dtype=np.int64)
            for args in itertools.product(range(n), repeat=k):
                t[args] = index[funcs[sym](*(carrier[i] for i in args))]
            tables[sym] = t
        return cls(name, signature, carrier, tables)


def trivial_algebra(name: str = "One", label: str = "1", mul: str = "mul") -> FiniteAlgebra:
    """The one-element monoid."""
    sig = Signature(((mul, 2),))
    return FiniteAlgebra(name, sig, (label,), {mul: np.zeros((1, 1), dtype=np.int64)})
