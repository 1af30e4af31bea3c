"""Exact square matrices over Q(i) or GF(p), row reduction and Green's preorders.

Everything here is exact; there is no tolerance anywhere. Row reduction uses a
fixed elimination order (leftmost pivot column, topmost usable row, pivot
scaled to one, eliminate above and below) so every witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence

from .scalars import QI, Domain

_CACHE = 1 << 16


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable n x n matrix; entries are stored as a tuple of row tuples."""

    domain: Domain
    rows: tuple

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]], domain: Domain = QI) -> "SquareMatrix":
        coerced = tuple(tuple(domain.coerce(v) for v in row) for row in rows)
        n = len(coerced)
        if any(len(row) != n for row in coerced):
            raise ShapeError(f"matrix is not square: {[len(r) for r in coerced]} columns for {n} rows")
        return cls(domain, coerced)

    @classmethod
    def identity(cls, domain: Domain, n: int) -> "SquareMatrix":
        z, o = domain.zero, domain.one
        return cls(domain, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, domain: Domain, n: int) -> "SquareMatrix":
        return cls(domain, tuple((domain.zero,) * n for _ in range(n)))

    @classmethod
    def leading_ones(cls, domain: Domain, n: int, r: int) -> "SquareMatrix":
        """E_r: the first ``r`` diagonal entries are one, everything else zero."""
        z, o = domain.zero, domain.one
        return cls(domain, tuple(tuple(o if i == j and i < r else z for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "SquareMatrix") -> None:
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if other.domain != self.domain or other.n != self.n:
            raise ShapeError(
                f"incompatible operands: {self.domain.name} {self.n}x{self.n} "
                f"vs {other.domain.name} {other.n}x{other.n}"
            )

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        dot = self.domain.dot
        cols = tuple(zip(*other.rows))
        return SquareMatrix(self.domain, tuple(tuple(dot(row, col) for col in cols) for row in self.rows))

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        add = self.domain.add
        return SquareMatrix(
            self.domain, tuple(tuple(map(add, r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        sub = self.domain.sub
        return SquareMatrix(
            self.domain, tuple(tuple(map(sub, r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "SquareMatrix":
        neg = self.domain.neg
        return SquareMatrix(self.domain, tuple(tuple(map(neg, r)) for r in self.rows))

    def scale(self, c) -> "SquareMatrix":
        c = self.domain.coerce(c)
        mul = self.domain.mul
        return SquareMatrix(self.domain, tuple(tuple(mul(c, x) for x in r) for r in self.rows))

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(self.domain, tuple(zip(*self.rows)))

    def star(self) -> "SquareMatrix":
        """Conjugate transpose (plain transpose over GF(p))."""
        conj = self.domain.conj
        return SquareMatrix(self.domain, tuple(tuple(map(conj, col)) for col in zip(*self.rows)))

    def one(self) -> "SquareMatrix":
        return SquareMatrix.identity(self.domain, self.n)

    def zero(self) -> "SquareMatrix":
        return SquareMatrix.zeros(self.domain, self.n)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def green_leq(self, other: "SquareMatrix", relation: str) -> "GreenWitness":
        return green_leq(self, other, relation)

    def inner_inverse(self) -> "SquareMatrix":
        return inner_inverse(self)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def entry_strings(self) -> list:
        fmt = self.domain.format
        return [[fmt(x) for x in r] for r in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.entry_strings()) + "]"

    def __repr__(self) -> str:
        return f"SquareMatrix({self.domain.name}, {self})"


@dataclass(frozen=True)
class RrefResult:
    R: SquareMatrix
    T: SquareMatrix
    rank: int
    pivots: tuple


@dataclass(frozen=True)
class RankNormalForm:
    """``M = P @ E_r @ Q`` with P, Q invertible."""

    P: SquareMatrix
    Pinv: SquareMatrix
    Q: SquareMatrix
    Qinv: SquareMatrix
    r: int

    def E(self) -> SquareMatrix:
        return SquareMatrix.leading_ones(self.P.domain, self.P.n, self.r)


@dataclass(frozen=True)
class GreenWitness:
    """Outcome of a Green preorder query ``a <= b``.

    For ``L`` the witness ``x`` satisfies ``a = x b``; for ``R`` the witness
    ``y`` satisfies ``a = b y``; ``H`` carries both.
    """

    relation: str
    holds: bool
    x: Any = None
    y: Any = None

    def verify(self, a, b) -> bool:
        if not self.holds:
            return True
        ok = True
        if self.relation in ("L", "H"):
            ok = ok and self.x is not None and self.x @ b == a
        if self.relation in ("R", "H"):
            ok = ok and self.y is not None and b @ self.y == a
        return ok


def row_reduce(rows: Sequence[Sequence[Any]], domain: Domain, ncols: int | None = None):
    """Gauss-Jordan on a (possibly rectangular) list of rows.

    Returns ``(R, T, pivots)`` as lists with ``T @ rows == R``; ``T`` is square
    of size ``len(rows)``.
    """
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if m else 0
    zero, one = domain.zero, domain.one
    sub, mul, inv = domain.sub, domain.mul, domain.inv
    R = [list(r) for r in rows]
    T = [[one if i == j else zero for j in range(m)] for i in range(m)]
    pivots = []
    row = 0
    for col in range(ncols):
        if row == m:
            break
        pr = next((i for i in range(row, m) if R[i][col]), None)
        if pr is None:
            continue
        if pr != row:
            R[row], R[pr] = R[pr], R[row]
            T[row], T[pr] = T[pr], T[row]
        piv = R[row][col]
        if piv != one:
            s = inv(piv)
            R[row] = [mul(s, x) for x in R[row]]
            T[row] = [mul(s, x) for x in T[row]]
        prow, trow = R[row], T[row]
        for i in range(m):
            if i == row:
                continue
            f = R[i][col]
            if not f:
                continue
            R[i] = [sub(x, mul(f, y)) for x, y in zip(R[i], prow)]
            T[i] = [sub(x, mul(f, y)) for x, y in zip(T[i], trow)]
        pivots.append(col)
        row += 1
    return R, T, pivots


def _mat(domain: Domain, rows) -> SquareMatrix:
    return SquareMatrix(domain, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=_CACHE)
def rref(M: SquareMatrix) -> RrefResult:
    R, T, pivots = row_reduce(M.rows, M.domain)
    return RrefResult(_mat(M.domain, R), _mat(M.domain, T), len(pivots), tuple(pivots))


def rank(M: SquareMatrix) -> int:
    return rref(M).rank


@lru_cache(maxsize=_CACHE)
def try_invert(M: SquareMatrix) -> Optional[SquareMatrix]:
    """Two-sided inverse, or ``None`` when rank(M) < n.

    For square matrices over a field a one-sided inverse is automatically
    two-sided, so this is also the left- and right-invertibility test.
    """
    res = rref(M)
    return res.T if res.rank == M.n else None


def _solve_left(a: SquareMatrix, b: SquareMatrix) -> Optional[SquareMatrix]:
    """Canonical ``x`` with ``x @ b == a``, or None when row(a) is not in row(b)."""
    if a == b:
        return b.one()
    res = rref(b)
    dom = a.domain
    n = a.n
    R = res.R.rows
    sub, mul = dom.sub, dom.mul
    coeffs = []
    for arow in a.rows:
        c = [arow[p] for p in res.pivots]
        resid = list(arow)
        for cj, rrow in zip(c, R):
            if cj:
                resid = [sub(x, mul(cj, y)) for x, y in zip(resid, rrow)]
        if any(resid):
            return None
        coeffs.append(c + [dom.zero] * (n - res.rank))
    return _mat(dom, coeffs) @ res.T


@lru_cache(maxsize=_CACHE)
def green_leq(a: SquareMatrix, b: SquareMatrix, relation: str) -> GreenWitness:
    """Decide ``a <=_L b`` (row spaces), ``a <=_R b`` (column spaces) or both."""
    a._check(b)
    if relation not in ("L", "R", "H"):
        raise ValueError(f"unknown Green relation {relation!r}")
    x = y = None
    if relation in ("L", "H"):
        x = _solve_left(a, b)
        if x is None:
            return GreenWitness(relation, False)
    if relation in ("R", "H"):
        yt = _solve_left(a.transpose(), b.transpose())
        if yt is None:
            return GreenWitness(relation, False)
        y = yt.transpose()
    return GreenWitness(relation, True, x, y)


@lru_cache(maxsize=_CACHE)
def rank_normal_form(M: SquareMatrix) -> RankNormalForm:
    res = rref(M)
    dom, n, r = M.domain, M.n, res.rank
    non_pivots = [j for j in range(n) if j not in res.pivots]
    q_rows = [res.R.rows[i] for i in range(r)]
    for j in non_pivots:
        q_rows.append(tuple(dom.one if k == j else dom.zero for k in range(n)))
    Q = _mat(dom, q_rows)
    Qinv = try_invert(Q)
    P = try_invert(res.T)
    return RankNormalForm(P=P, Pinv=res.T, Q=Q, Qinv=Qinv, r=r)


@lru_cache(maxsize=_CACHE)
def inner_inverse(M: SquareMatrix) -> SquareMatrix:
    """Canonical inner inverse ``Qinv @ E_r @ Pinv``; always satisfies ``M g M = M``."""
    f = rank_normal_form(M)
    return f.Qinv @ f.E() @ f.Pinv


def inner_inverse_family(M: SquareMatrix, s: SquareMatrix, t: SquareMatrix) -> SquareMatrix:
    """``g + (1 - g M) s + t (1 - M g)`` around the canonical inner inverse ``g``."""
    M._check(s)
    M._check(t)
    g = inner_inverse(M)
    one = M.one()
    return g + (one - g @ M) @ s + t @ (one - M @ g)


def scalar_ratio(a: SquareMatrix, b: SquareMatrix):
    """The nonzero scalar ``c`` with ``b == c a``, or None."""
    if a.is_zero():
        return None
    i, j = next((i, j) for i, row in enumerate(a.rows) for j, x in enumerate(row) if x)
    dom = a.domain
    c = dom.mul(b.rows[i][j], dom.inv(a.rows[i][j]))
    if not c or a.scale(c) != b:
        return None
    return c


def is_idempotent(e: SquareMatrix) -> bool:
    return e @ e == e


def random_matrix(rng, domain: Domain, n: int, density: float = 0.3, bound: int = 9) -> SquareMatrix:
    """Random matrix from a ``numpy.random.Generator``.

    Over Q(i) each part is ``num/den`` with ``num, den`` uniform in
    ``[-bound, bound]`` (den != 0) and is zero with probability ``density``.
    Over GF(p) entries are uniform residues.
    """
    from fractions import Fraction

    from .scalars import GaussianRational, PrimeField

    if isinstance(domain, PrimeField):
        vals = rng.integers(0, domain.p, size=(n, n))
        return _mat(domain, [[int(v) for v in row] for row in vals])

    def part():
        if rng.random() < density:
            return Fraction(0)
        num = int(rng.integers(-bound, bound + 1))
        den = int(rng.integers(1, bound + 1)) * (1 if rng.random() < 0.5 else -1)
        return Fraction(num, den)

    return _mat(domain, [[GaussianRational(part(), part()) for _ in range(n)] for _ in range(n)])


def random_rank_matrix(rng, domain: Domain, n: int, density: float = 0.3) -> SquareMatrix:
    """Random matrix whose rank is itself random: full with probability 1/2,
    otherwise ``A E_r B`` for a uniform ``r < n``."""
    if rng.random() < 0.5:
        return random_matrix(rng, domain, n, density)
    r = int(rng.integers(0, n))
    A = random_matrix(rng, domain, n, density)
    B = random_matrix(rng, domain, n, density)
    return A @ SquareMatrix.leading_ones(domain, n, r) @ B
