"""Exact coefficient fields: the rationals and prime fields F_p."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldError(ArithmeticError):
    """Raised on division by zero or mixing incompatible fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """An exact field of characteristic ``p`` (``p == 0`` means the rationals).

    Coefficients of rational polynomials are ``int`` or ``Fraction``; prime
    field coefficients are ints in ``range(p)``.
    """

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        if p > 2**31:
            raise ValueError("prime fields are limited to p <= 2**31")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @property
    def tag(self) -> str:
        return "q" if self.p == 0 else f"f{self.p}"

    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p == 0:
            if isinstance(value, Fraction):
                return value.numerator if value.denominator == 1 else value
            if isinstance(value, int):
                return value
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise FieldError(f"denominator {value.denominator} vanishes in {self}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        if self.p == 0:
            return Fraction(1, 1) / a if isinstance(a, Fraction) else Fraction(1, a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero")
        if self.p == 0:
            q = Fraction(a) / b
            return q.numerator if q.denominator == 1 else q
        return a * pow(b, -1, self.p) % self.p

    def from_int(self, n: int):
        return n % self.p if self.p else n


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def parse_field(tag: str) -> Field:
    """``'q'`` -> QQ, ``'f5'`` -> GF(5)."""
    tag = tag.strip().lower()
    if tag in ("q", "qq", "0"):
        return QQ
    if tag.startswith("f") and tag[1:].isdigit():
        return GF(int(tag[1:]))
    raise ValueError(f"unknown field {tag!r}; expected 'q' or 'f<p>'")
