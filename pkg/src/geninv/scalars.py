"""Exact ground arithmetics: Gaussian rationals Q(i) and prime fields GF(p).

Matrices never call arithmetic operators on their entries directly; they go
through a domain object so that GF(p) entries can stay plain ``int`` residues
(fast) while Q(i) entries are :class:`GaussianRational` values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any


class ScalarParseError(ValueError):
    pass


class GaussianRational:
    """Exact ``re + im*i`` with both parts stored as reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational._raw(self.re / norm, -self.im / norm)

    def __repr__(self) -> str:
        return f"GaussianRational({format_fraction(self.re)!r}, {format_fraction(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return format_fraction(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{format_fraction(self.re)}{sign}{format_fraction(abs(self.im))} i"


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RAT = r"\d+(?:/\d+)?"
_QI_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?"
    rf"(?:(?P<isign>[+-])?(?P<im>{_RAT})?\s*i)?$"
)


def _parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``a/b``, ``-a/b``, ``a/b+c/d i``, ``a/b-c/d i``, ``c/d i``."""
    compact = re.sub(r"\s+", "", str(text))
    m = _QI_RE.match(compact)
    if not compact or m is None or (m.group("re") is None and "i" not in compact):
        raise ScalarParseError(f"not a Gaussian rational: {text!r}")
    re_part = _parse_fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if compact.endswith("i"):
        if m.group("re") is not None and m.group("isign") is None:
            if m.group("im") is not None:
                raise ScalarParseError(f"missing sign before imaginary part: {text!r}")
            # pure imaginary such as "3/4 i": the real group swallowed it
            return GaussianRational._raw(Fraction(0), re_part)
        im_part = _parse_fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_part = -im_part
    return GaussianRational._raw(re_part, im_part)


class Domain:
    """Scalar domain interface shared by :class:`QiField` and :class:`PrimeField`."""

    name: str
    zero: Any
    one: Any

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def conj(self, x):
        raise NotImplementedError

    def dot(self, xs, ys):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def describe(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class QiField(Domain):
    """Gaussian rationals with complex conjugation as involution."""

    name = "Qi"

    @property
    def zero(self) -> GaussianRational:
        return _QI_ZERO

    @property
    def one(self) -> GaussianRational:
        return _QI_ONE

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return x.inverse()

    def conj(self, x):
        return x.conjugate() if x.im else x

    def dot(self, xs, ys):
        re = Fraction(0)
        im = Fraction(0)
        for x, y in zip(xs, ys):
            if not (x and y):
                continue
            if x.im or y.im:
                re += x.re * y.re - x.im * y.im
                im += x.re * y.im + x.im * y.re
            else:
                re += x.re * y.re
        return GaussianRational._raw(re, im)

    def coerce(self, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return parse_gaussian(value)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        if isinstance(value, float):
            raise TypeError("floating-point values are not exact")
        return GaussianRational(value)

    def parse(self, text: str) -> GaussianRational:
        return parse_gaussian(text)

    def describe(self) -> dict:
        return {"ring": "Qi"}


_QI_ZERO = GaussianRational(0)
_QI_ONE = GaussianRational(1)

QI = QiField()


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField(Domain):
    """GF(p) with residues stored as ``int`` in ``[0, p)``; involution is trivial."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"GF(p) requires a prime modulus, got {self.p!r}")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def conj(self, x):
        return x

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def coerce(self, value) -> int:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return (value.numerator * self.inv(value.denominator % self.p)) % self.p
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        return value % self.p

    def parse(self, text: str) -> int:
        text = str(text).strip()
        if not re.fullmatch(r"\d+", text):
            raise ScalarParseError(f"not a decimal residue: {text!r}")
        value = int(text)
        if value >= self.p:
            raise ScalarParseError(f"residue {value} not in [0, {self.p})")
        return value

    def describe(self) -> dict:
        return {"ring": "GF", "p": self.p}


def GF(p: int) -> PrimeField:
    return PrimeField(p)
