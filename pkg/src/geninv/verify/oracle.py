"""Independent truth sources the criterion code is compared against.

:class:`TableOracle` answers by scanning a multiplication table (finite
carriers). :class:`RankOracle` answers for matrices too large to enumerate
using plain rank arithmetic on stacked rows, a Leibniz determinant, and the
full-rank-factorization formula for the Moore-Penrose inverse. Neither goes
through the unit criteria or the Green witnesses of :mod:`geninv.inverses`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Optional

import numpy as np

from ..inverses import along_by_green, one_sided_along
from ..matrix import SquareMatrix, inner_inverse, row_reduce, try_invert
from ..monoid import FiniteMonoid, exhaustive_solutions
from ..scalars import Domain

MP_MASK = 1 | 2 | 4 | 8  # all four Penrose bits of the kernel mask


class TableOracle:
    """Scan-based answers on a finite monoid whose elements are ``elements[i]``."""

    def __init__(self, monoid: FiniteMonoid, elements):
        self.M = monoid
        self.elements = tuple(elements)
        self.k = monoid.k
        mul = monoid.mul
        self._left_sets = [frozenset(mul[:, b].tolist()) for b in range(self.k)]
        self._right_sets = [frozenset(mul[b, :].tolist()) for b in range(self.k)]
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._units = self._unit_table()
        self._masks = monoid.penrose if monoid.star is not None else None

    def _unit_table(self) -> list:
        mul, one = self.M.mul, self.M.identity
        out = [None] * self.k
        for x in range(self.k):
            ys = np.flatnonzero((mul[x, :] == one) & (mul[:, x] == one))
            out[x] = int(ys[0]) if len(ys) else None
        return out

    def id(self, x) -> int:
        return self._index[x]

    def el(self, i):
        return None if i is None else self.elements[int(i)]

    def leq(self, a, b, relation: str) -> bool:
        i, j = self.id(a), self.id(b)
        if relation == "L":
            return i in self._left_sets[j]
        if relation == "R":
            return i in self._right_sets[j]
        return i in self._left_sets[j] and i in self._right_sets[j]

    def left_factors(self, target, m) -> list:
        """Every ``x`` with ``x m = target``."""
        hits = np.flatnonzero(self.M.mul[:, self.id(m)] == self.id(target))
        return [self.elements[i] for i in hits]

    def right_factors(self, target, m) -> list:
        """Every ``y`` with ``m y = target``."""
        hits = np.flatnonzero(self.M.mul[self.id(m), :] == self.id(target))
        return [self.elements[i] for i in hits]

    def along(self, a, d, side: str = "two-sided"):
        left, right, both = self.M.along
        table = {"left": left, "right": right, "two-sided": both}[side]
        v = int(table[self.id(a), self.id(d)])
        return None if v < 0 else self.elements[v]

    def along_solutions(self, a, d, side: str) -> list:
        tag = {"left": "left-along", "right": "right-along", "two-sided": "along"}[side]
        return [self.elements[i] for i in
                _solutions(self.M, tag, self.id(a), self.id(d))]

    def _first(self, a, mask: int):
        hits = np.flatnonzero((self._masks[self.id(a)] & mask) == mask)
        return self.elements[int(hits[0])] if len(hits) else None

    def mp(self, a):
        return self._first(a, MP_MASK)

    def group(self, a):
        mul, i = self.M.mul, self.id(a)
        xs = np.arange(self.k)
        ax, xa = mul[i, xs], mul[xs, i]
        hits = np.flatnonzero((mul[ax, i] == i) & (mul[xa, xs] == xs) & (ax == xa))
        return self.elements[int(hits[0])] if len(hits) else None

    def inners(self, d) -> list:
        mul, i = self.M.mul, self.id(d)
        hits = np.flatnonzero(mul[mul[i, :], i] == i)
        return [self.elements[j] for j in hits]

    def unit(self, x):
        return self.el(self._units[self.id(x)])

    def gmp(self, a, side: str) -> bool:
        """``Sa = Sa^2 = Saa*a`` (left) or the right-ideal version, as set equalities."""
        mul, st = self.M.mul, self.M.star
        i = self.id(a)
        a2 = int(mul[i, i])
        aa = int(mul[mul[i, st[i]], i])
        sets = self._left_sets if side == "left" else self._right_sets
        return sets[i] == sets[a2] == sets[aa]

    def exists_bounded(self, a, m) -> bool:
        """Some ``b`` with ``b m = a`` and ``b <=_L a``."""
        return any(self.leq(b, a, "L") for b in self.left_factors(a, m))

    def exists_bounded_right(self, a, m) -> bool:
        """Some ``c`` with ``m c = a`` and ``c <=_R a``."""
        return any(self.leq(c, a, "R") for c in self.right_factors(a, m))


@lru_cache(maxsize=1 << 16)
def _solutions(M, tag, a, d):
    return exhaustive_solutions(M, tag, a, d, allow_large=True).solutions


# -- rank-based oracle for random matrices ------------------------------------


def _rank_rows(rows, domain: Domain, ncols: int) -> int:
    _, _, pivots = row_reduce(rows, domain, ncols)
    return len(pivots)


def _rows(m: SquareMatrix) -> list:
    return [list(r) for r in m.rows]


def _cols(m: SquareMatrix) -> list:
    return [list(r) for r in m.transpose().rows]


def row_space_leq(a: SquareMatrix, b: SquareMatrix) -> bool:
    """Row space of ``a`` inside that of ``b``: the stacked rank does not grow."""
    n, dom = a.n, a.domain
    return _rank_rows(_rows(b) + _rows(a), dom, n) == _rank_rows(_rows(b), dom, n)


def col_space_leq(a: SquareMatrix, b: SquareMatrix) -> bool:
    n, dom = a.n, a.domain
    return _rank_rows(_cols(b) + _cols(a), dom, n) == _rank_rows(_cols(b), dom, n)


def plain_rank(a: SquareMatrix) -> int:
    return _rank_rows(_rows(a), a.domain, a.n)


def leibniz_det(a: SquareMatrix):
    """Determinant by the permutation expansion (n <= 6 in practice)."""
    dom, n = a.domain, a.n
    total = dom.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = dom.one
        for i, j in enumerate(perm):
            term = dom.mul(term, a.rows[i][j])
            if not term:
                break
        if term:
            total = dom.sub(total, term) if inversions % 2 else dom.add(total, term)
    return total


def _rect_mul(domain, x, y):
    return [[domain.dot(row, col) for col in zip(*y)] for row in x]


def _rect_star(domain, x):
    return [[domain.conj(v) for v in col] for col in zip(*x)]


def _rect_inverse(domain, x):
    r = len(x)
    if r == 0:
        return []
    R, T, pivots = row_reduce(x, domain, r)
    return None if len(pivots) < r else [list(row) for row in T]


def full_rank_factorization(a: SquareMatrix):
    """``a = F G`` with ``F`` (n x r) the pivot columns of ``a`` and ``G`` (r x n)
    the nonzero rows of its reduced echelon form."""
    dom, n = a.domain, a.n
    R, _, pivots = row_reduce(_rows(a), dom, n)
    F = [[a.rows[i][j] for j in pivots] for i in range(n)]
    G = [list(R[i]) for i in range(len(pivots))]
    return F, G


def frf_pseudoinverse(a: SquareMatrix) -> Optional[SquareMatrix]:
    """``G*(GG*)^{-1}(F*F)^{-1}F*``; ``None`` if a Gram factor is singular
    (possible over GF(p), where it means there is no MP inverse)."""
    dom, n = a.domain, a.n
    F, G = full_rank_factorization(a)
    if not G:
        return SquareMatrix.zeros(dom, n)
    Fs, Gs = _rect_star(dom, F), _rect_star(dom, G)
    left = _rect_inverse(dom, _rect_mul(dom, G, Gs))
    right = _rect_inverse(dom, _rect_mul(dom, Fs, F))
    if left is None or right is None:
        return None
    out = _rect_mul(dom, _rect_mul(dom, _rect_mul(dom, Gs, left), right), Fs)
    return SquareMatrix(dom, tuple(tuple(r) for r in out))


class RankOracle:
    """Answers for matrices over a field by rank arithmetic alone."""

    def leq(self, a, b, relation: str) -> bool:
        if relation == "L":
            return row_space_leq(a, b)
        if relation == "R":
            return col_space_leq(a, b)
        return row_space_leq(a, b) and col_space_leq(a, b)

    def _exists(self, a, d, side: str) -> bool:
        dad = d @ a @ d
        if side == "left":
            return row_space_leq(d, dad)
        if side == "right":
            return col_space_leq(d, dad)
        return row_space_leq(d, dad) and col_space_leq(d, dad)

    def along(self, a, d, side: str = "two-sided"):
        """Existence by rank; the value (unique when two-sided) by the Green route."""
        if not self._exists(a, d, side):
            return None
        if side == "two-sided":
            return along_by_green(a, d).b
        return one_sided_along(a, d, side).b

    def mp(self, a):
        return frf_pseudoinverse(a)

    def group(self, a):
        return self.along(a, a)

    def inners(self, d) -> list:
        return [inner_inverse(d)]

    def unit(self, x):
        if not leibniz_det(x):
            return None
        return try_invert(x)

    def gmp(self, a, side: str) -> bool:
        # over a field both sides reduce to rank(a) = rank(a^2) = rank(aa*a)
        r = plain_rank(a)
        return plain_rank(a @ a) == r and plain_rank(a @ a.star() @ a) == r

    def exists_bounded(self, a, m) -> bool:
        return row_space_leq(a, a @ m)

    def exists_bounded_right(self, a, m) -> bool:
        return col_space_leq(a, m @ a)

    left_factors = right_factors = None
