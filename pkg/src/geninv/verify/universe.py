"""Universes of test tuples: every matrix over a small GF(p), random matrices,
or the elements of a table monoid."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from ..formats import read_monoid
from ..matrix import SquareMatrix, random_rank_matrix
from ..monoid import FiniteMonoid, all_matrices, table_from_matrices
from ..scalars import QI, Domain, PrimeField

DEFAULT_CAP = 6561


class UniverseError(ValueError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("GENINV_CAP", DEFAULT_CAP))


@dataclass(frozen=True, eq=False)
class Universe:
    """Where theorem tuples come from.

    ``kind`` is ``"exhaustive"`` (all of M_n(GF(p))), ``"random"`` (seeded
    samples over Q(i) or GF(p)) or ``"table"`` (a loaded monoid). Exhaustive
    and table universes carry a :class:`FiniteMonoid` used as the oracle.
    """

    spec: str
    kind: str
    tier: str
    seed: int = 0
    samples: Optional[int] = None
    domain: Optional[Domain] = None
    n: Optional[int] = None
    monoid: Optional[FiniteMonoid] = None
    elements: Optional[tuple] = None

    @property
    def size(self) -> Optional[int]:
        return None if self.elements is None else len(self.elements)

    @property
    def has_star(self) -> bool:
        return self.kind != "table" or self.monoid.star is not None

    def describe(self) -> dict:
        out = {"spec": self.spec, "kind": self.kind, "tier": self.tier}
        if self.size is not None:
            out["size"] = self.size
        if self.kind == "random":
            out["samples"] = self.samples
            out["seed"] = self.seed
        return out

    def indices(self, arity: int) -> tuple:
        """``(indices, total, sampled)`` for tuples of the given arity."""
        if self.kind == "random":
            return np.arange(self.samples, dtype=np.int64), self.samples, False
        total = self.size ** arity
        if self.samples is not None and self.samples < total:
            rng = np.random.default_rng([self.seed, arity])
            picked = np.sort(rng.choice(total, size=self.samples, replace=False))
            return picked.astype(np.int64), total, True
        return np.arange(total, dtype=np.int64), total, False

    def tuple_at(self, index: int, arity: int, generate: Optional[Callable] = None) -> tuple:
        if self.kind == "random":
            rng = np.random.default_rng([self.seed, int(index)])
            if generate is not None:
                return tuple(generate(rng, self))
            return tuple(self.random_element(rng) for _ in range(arity))
        k = self.size
        digits = []
        for _ in range(arity):
            digits.append(int(index) % k)
            index = int(index) // k
        return tuple(self.elements[i] for i in reversed(digits))

    def random_element(self, rng) -> SquareMatrix:
        return random_rank_matrix(rng, self.domain, self.n)

    def iter_tuples(self, arity: int, generate=None) -> Iterator[tuple]:
        idx, _, _ = self.indices(arity)
        for i in idx:
            yield int(i), self.tuple_at(int(i), arity, generate)


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UniverseError(f"{what} must be an integer, got {text!r}") from None


def parse_universe(spec: str, samples: Optional[int] = None, seed: int = 0,
                   cap: Optional[int] = None) -> Universe:
    """Parse ``gf:p:n``, ``gf:p:n:random``, ``qi:n:random`` or ``table:FILE``.

    ``samples`` on an exhaustive universe turns it into a deterministic
    sample of that many tuples per theorem (reported as sampled).
    """
    kind, _, rest = spec.partition(":")
    cap = enumeration_cap() if cap is None else cap
    if kind == "table":
        if not rest:
            raise UniverseError("table universe needs a file: table:FILE")
        monoid = read_monoid(rest)
        if monoid.k > cap and samples is None:
            raise UniverseError(f"table has {monoid.k} elements, cap is {cap} (set GENINV_CAP)")
        return Universe(spec, "table", "monoid", seed, samples, monoid=monoid,
                        elements=tuple(monoid.all_elements()))
    parts = rest.split(":")
    if kind == "gf" and len(parts) == 2:
        p, n = _int(parts[0], "p"), _int(parts[1], "n")
        try:
            domain = PrimeField(p)
        except ValueError as exc:
            raise UniverseError(str(exc)) from None
        if n < 1:
            raise UniverseError("n must be positive")
        size = p ** (n * n)
        if size > cap:
            raise UniverseError(f"gf:{p}:{n} has {size} elements, cap is {cap} (set GENINV_CAP)")
        elements = tuple(all_matrices(domain, n))
        return Universe(spec, "exhaustive", "ring", seed, samples, domain, n,
                        table_from_matrices(elements), elements)
    if kind in ("gf", "qi") and parts[-1] == "random":
        if kind == "gf":
            if len(parts) != 3:
                raise UniverseError("random GF universe is gf:p:n:random")
            domain, n = PrimeField(_int(parts[0], "p")), _int(parts[1], "n")
        else:
            if len(parts) != 2:
                raise UniverseError("random Q(i) universe is qi:n:random")
            domain, n = QI, _int(parts[0], "n")
        if samples is None or samples < 1:
            raise UniverseError(f"{spec} needs a positive --samples")
        if n < 1:
            raise UniverseError("n must be positive")
        return Universe(spec, "random", "ring", seed, samples, domain, n)
    raise UniverseError(f"unrecognised universe {spec!r}; expected gf:p:n, qi:n:random or table:FILE")


def singleton_universe(values: tuple, spec: str = "explicit") -> Universe:
    """A universe for evaluating explicitly given tuples.

    Matrices get the rank oracle; table elements get their own monoid as a
    table universe.
    """
    first = values[0]
    if isinstance(first, SquareMatrix):
        return Universe(spec, "explicit", "ring", domain=first.domain, n=first.n)
    M = first.monoid
    return Universe(spec, "table", "monoid", monoid=M, elements=tuple(M.all_elements()))
