"""Finite monoids given by multiplication tables, and exhaustive oracles.

A :class:`FiniteMonoid` is validated in full when it is built: associativity
over all k^3 triples, the identity, and (if present) the involution as an
anti-automorphism. Queries then scan the table; nothing here relies on the
criteria implemented in :mod:`geninv.inverses`, which is the point: these
scans are the arbiter those criteria are tested against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .matrix import GreenWitness, SquareMatrix
from .scalars import PrimeField

DEFAULT_CLOSURE_CAP = 100_000
DEFAULT_SCAN_CAP = 10_000

TAGS = ("inner", "{1,3}", "{1,4}", "mp", "group", "along", "left-along", "right-along")
STAR_TAGS = ("{1,3}", "{1,4}", "mp")


class MonoidError(ValueError):
    """Invalid table; ``witness`` holds the violating element ids, if any."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class CapExceeded(ValueError):
    pass


def scan_cap() -> int:
    return int(os.environ.get("GENINV_CAP_MONOID", DEFAULT_SCAN_CAP))


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    mul: np.ndarray
    identity: int
    star: Optional[np.ndarray] = None
    labels: Optional[tuple] = None
    elements: Optional[tuple] = None  # generating matrices, when built by closure

    @property
    def k(self) -> int:
        return int(self.mul.shape[0])

    @cached_property
    def rows(self) -> list:
        return self.mul.tolist()

    @cached_property
    def star_list(self) -> Optional[list]:
        return None if self.star is None else self.star.tolist()

    @cached_property
    def index(self) -> dict:
        if self.elements is None:
            return {}
        return {m: i for i, m in enumerate(self.elements)}

    def element(self, i: int) -> "TableElement":
        return TableElement(self, int(i))

    def all_elements(self) -> list:
        return [TableElement(self, i) for i in range(self.k)]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def check_cap(self, allow_large: bool = False) -> None:
        if not allow_large and self.k > scan_cap():
            raise CapExceeded(f"monoid has {self.k} elements; exhaustive scans are capped at {scan_cap()}")

    # exhaustive tables, computed once per monoid by the scan kernels

    @cached_property
    def green(self) -> tuple:
        """``(wl, wr)``: least left / right Green witnesses, ``-1`` when absent."""
        return _kernels.green_tables(self.mul)

    @cached_property
    def along(self) -> tuple:
        """``(left, right, two_sided)`` least inverse along tables indexed ``[a, d]``."""
        self.check_cap()
        wl, wr = self.green
        return _kernels.along_tables(self.mul, wl, wr, False)

    @cached_property
    def penrose(self) -> np.ndarray:
        star = self.star if self.star is not None else np.arange(self.k)
        return _kernels.penrose_masks(self.mul, star)

    def to_dict(self) -> dict:
        out = {"k": self.k, "identity": self.identity, "mul": self.mul.tolist()}
        if self.star is not None:
            out["star"] = self.star.tolist()
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


@dataclass(frozen=True, eq=False)
class TableElement:
    """An element of a :class:`FiniteMonoid`; supports ``@``, ``star`` and Green queries."""

    monoid: FiniteMonoid
    id: int

    def __matmul__(self, other: "TableElement") -> "TableElement":
        return TableElement(self.monoid, self.monoid.rows[self.id][other.id])

    def __eq__(self, other) -> bool:
        return isinstance(other, TableElement) and other.monoid is self.monoid and other.id == self.id

    def __hash__(self) -> int:
        return hash(self.id)

    def star(self) -> "TableElement":
        if self.monoid.star_list is None:
            raise MonoidError("monoid has no involution")
        return TableElement(self.monoid, self.monoid.star_list[self.id])

    def one(self) -> "TableElement":
        return TableElement(self.monoid, self.monoid.identity)

    def green_leq(self, other: "TableElement", relation: str) -> GreenWitness:
        wl, wr = self.monoid.green
        x = y = None
        if relation in ("L", "H"):
            w = int(wl[self.id, other.id])
            if w < 0:
                return GreenWitness(relation, False)
            x = TableElement(self.monoid, w)
        if relation in ("R", "H"):
            w = int(wr[self.id, other.id])
            if w < 0:
                return GreenWitness(relation, False)
            y = TableElement(self.monoid, w)
        if relation not in ("L", "R", "H"):
            raise ValueError(f"unknown Green relation {relation!r}")
        return GreenWitness(relation, True, x, y)

    def inner_inverse(self) -> Optional["TableElement"]:
        """Least x with ``a x a = a``; None if the element is not regular."""
        hits = np.flatnonzero(self.monoid.penrose[self.id] & _kernels.EQ_INNER)
        return TableElement(self.monoid, int(hits[0])) if len(hits) else None

    def __repr__(self) -> str:
        return f"<{self.monoid.label(self.id)}>"

    def __str__(self) -> str:
        return self.monoid.label(self.id)


def validate(mul: np.ndarray, identity: int, star: Optional[np.ndarray]) -> None:
    k = mul.shape[0]
    if mul.ndim != 2 or mul.shape != (k, k) or k == 0:
        raise MonoidError(f"multiplication table must be a non-empty k x k array, got shape {mul.shape}")
    if mul.min() < 0 or mul.max() >= k:
        raise MonoidError("multiplication table entries must be element ids in [0, k)")
    if not 0 <= identity < k:
        raise MonoidError(f"identity {identity} out of range")
    idx = np.arange(k)
    bad = np.flatnonzero((mul[identity] != idx) | (mul[:, identity] != idx))
    if len(bad):
        raise MonoidError(f"identity {identity} is not neutral for element {bad[0]}", (int(bad[0]),))
    trip = _kernels.associativity_violation(mul)
    if trip[0] >= 0:
        a, b, c = (int(v) for v in trip)
        raise MonoidError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    if star is not None:
        if star.shape != (k,) or star.min() < 0 or star.max() >= k:
            raise MonoidError("star must be a permutation of element ids")
        bad = _kernels.star_violation(mul, star)
        if bad[0] >= 0:
            x, y = int(bad[0]), int(bad[1])
            if y < 0:
                raise MonoidError(f"star is not an involution at {x}", (x,))
            raise MonoidError(f"star is not an anti-automorphism: ({x}*{y})* != {y}* * {x}*", (x, y))


def load_monoid(description: dict) -> FiniteMonoid:
    """Build and validate a monoid from ``{"k", "identity", "mul", "star"?, "labels"?}``."""
    try:
        k = int(description["k"])
        identity = int(description["identity"])
        mul = np.array(description["mul"], dtype=np.int64)
    except (KeyError, TypeError, ValueError) as exc:
        raise MonoidError(f"malformed monoid description: {exc}") from exc
    if mul.shape != (k, k):
        raise MonoidError(f"mul has shape {mul.shape}, expected ({k}, {k})")
    star = description.get("star")
    star = None if star is None else np.array(star, dtype=np.int64)
    labels = description.get("labels")
    if labels is not None:
        if len(labels) != k:
            raise MonoidError("labels must have one entry per element")
        labels = tuple(str(s) for s in labels)
    validate(mul, identity, star)
    mul.setflags(write=False)
    if star is not None:
        star.setflags(write=False)
    return FiniteMonoid(mul, identity, star, labels)


def table_from_matrices(elements: Sequence[SquareMatrix], check: bool = True) -> FiniteMonoid:
    """Monoid on a multiplicatively closed list of matrices containing the identity."""
    index = {m: i for i, m in enumerate(elements)}
    k = len(elements)
    mul = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            try:
                mul[i, j] = index[x @ y]
            except KeyError:
                raise MonoidError(f"elements are not closed: {x} @ {y}") from None
    identity = index.get(elements[0].one())
    if identity is None:
        raise MonoidError("identity matrix missing from element list")
    try:
        star = np.array([index[m.star()] for m in elements], dtype=np.int64)
    except KeyError:
        star = None
    if check:
        validate(mul, identity, star)
    mul.setflags(write=False)
    if star is not None:
        star.setflags(write=False)
    return FiniteMonoid(mul, identity, star, tuple(str(m) for m in elements), tuple(elements))


def closure(generators: Iterable[SquareMatrix], cap: int = DEFAULT_CLOSURE_CAP) -> FiniteMonoid:
    """Multiplicative closure of ``generators`` with the identity adjoined (id 0).

    Element order is breadth-first from the identity, then generators in the
    given order. The involution table is the transpose when the closure is
    closed under it.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    dom = gens[0].domain
    if not isinstance(dom, PrimeField):
        raise ValueError("closure is defined for matrices over a prime field only")
    elements = [gens[0].one()]
    seen = {elements[0]: 0}
    for g in gens:
        g.one()._check(g)
        if g not in seen:
            if len(elements) >= cap:
                raise CapExceeded(f"closure exceeds {cap} elements")
            seen[g] = len(elements)
            elements.append(g)
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = x @ g
            if y not in seen:
                if len(elements) >= cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
                seen[y] = len(elements)
                elements.append(y)
    return table_from_matrices(elements, check=False)


def all_matrices(domain: PrimeField, n: int) -> list:
    """Every n x n matrix over GF(p), in lexicographic order of row-major entries."""
    p = domain.p
    out = []
    for code in range(p ** (n * n)):
        digits = []
        for _ in range(n * n):
            digits.append(code % p)
            code //= p
        digits.reverse()
        out.append(SquareMatrix(domain, tuple(tuple(digits[i * n:(i + 1) * n]) for i in range(n))))
    return out


def full_matrix_monoid(p: int, n: int, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteMonoid:
    """The multiplicative monoid of M_n(GF(p)), elements in lexicographic order."""
    dom = PrimeField(p)
    if p ** (n * n) > cap:
        raise CapExceeded(f"M_{n}(GF({p})) has {p ** (n * n)} elements, cap is {cap}")
    return table_from_matrices(all_matrices(dom, n))


@dataclass(frozen=True)
class SolutionSet:
    tag: str
    subjects: tuple
    solutions: tuple

    def __len__(self) -> int:
        return len(self.solutions)


def _check_subject(M: FiniteMonoid, i: int) -> int:
    i = int(i)
    if not 0 <= i < M.k:
        raise ValueError(f"element id {i} out of range for a monoid of size {M.k}")
    return i


def exhaustive_solutions(M: FiniteMonoid, tag: str, *subjects: int, literal_right: bool = False,
                         allow_large: bool = False) -> SolutionSet:
    """All elements satisfying the defining equations of ``tag`` by direct scan.

    Unary tags take ``a``; the along tags take ``(a, d)``. ``literal_right``
    reads the right inverse along d as ``d a b = b`` instead of ``d a b = d``.
    """
    if tag not in TAGS:
        raise ValueError(f"unknown tag {tag!r}; expected one of {TAGS}")
    if tag in STAR_TAGS and M.star is None:
        raise MonoidError(f"tag {tag} needs an involution but the monoid has none")
    M.check_cap(allow_large)
    subj = tuple(_check_subject(M, s) for s in subjects)
    mul = M.mul
    k = M.k
    xs = np.arange(k)
    if tag in ("along", "left-along", "right-along"):
        if len(subj) != 2:
            raise ValueError(f"tag {tag} takes subjects (a, d)")
        a, d = subj
        bad = mul[mul[xs, a], d]
        dab = mul[mul[d, a], xs]
        leq_l = np.isin(xs, mul[:, d])
        leq_r = np.isin(xs, mul[d, :])
        left = (bad == d) & leq_l
        if literal_right:
            right = (dab == xs) & leq_r
        else:
            right = (dab == d) & leq_r
        mask = {"left-along": left, "right-along": right,
                "along": left & (dab == d) & leq_r}[tag]
    else:
        if len(subj) != 1:
            raise ValueError(f"tag {tag} takes a single subject")
        (a,) = subj
        ax = mul[a, xs]
        xa = mul[xs, a]
        eq1 = mul[ax, a] == a
        eq2 = mul[xa, xs] == xs
        if M.star is not None:
            eq3 = M.star[ax] == ax
            eq4 = M.star[xa] == xa
        mask = {
            "inner": lambda: eq1,
            "{1,3}": lambda: eq1 & eq3,
            "{1,4}": lambda: eq1 & eq4,
            "mp": lambda: eq1 & eq2 & eq3 & eq4,
            "group": lambda: eq1 & eq2 & (ax == xa),
        }[tag]()
    return SolutionSet(tag, subj, tuple(int(i) for i in np.flatnonzero(mask)))


def exhaustive_green(M: FiniteMonoid, a: int, b: int, relation: str) -> GreenWitness:
    """Scan for ``x`` with ``a = x b`` (L), ``y`` with ``a = b y`` (R), or both (H)."""
    a, b = _check_subject(M, a), _check_subject(M, b)
    x = y = None
    if relation in ("L", "H"):
        hits = np.flatnonzero(M.mul[:, b] == a)
        if not len(hits):
            return GreenWitness(relation, False)
        x = int(hits[0])
    if relation in ("R", "H"):
        hits = np.flatnonzero(M.mul[b, :] == a)
        if not len(hits):
            return GreenWitness(relation, False)
        y = int(hits[0])
    if relation not in ("L", "R", "H"):
        raise ValueError(f"unknown Green relation {relation!r}")
    return GreenWitness(relation, True, x, y)
