"""Sparse polynomials over the variable grid x_i^(j), 1 <= i <= n, 1 <= j <= m.

Exponents are stored as flat tuples in row-major layout, so the entry for
x_i^(j) sits at index ``(i - 1) * m + (j - 1)``. That layout is already the
rank order of :attr:`MonomialOrder.A`, which makes lex comparison under
order A a plain tuple comparison.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter
from typing import Iterable, Mapping

from .fields import QQ, Field, FieldError
from . import kernels


class DimensionError(ValueError):
    """Operands live in rings with different (n, m) or different fields."""


class MonomialOrder(enum.Enum):
    """Lexicographic orders on the grid.

    A ranks variables by (i, j): x_1^(1) > x_1^(2) > ... > x_1^(m) > x_2^(1) > ...
    B ranks variables by (j, i): x_1^(1) > x_2^(1) > ... > x_n^(1) > x_1^(2) > ...
    """

    A = "a"
    B = "b"

    def key(self, n: int, m: int):
        """Function mapping a flat exponent tuple to its rank-ordered tuple."""
        return _order_key(self, n, m)

    @classmethod
    def parse(cls, tag: str) -> "MonomialOrder":
        return cls(tag.strip().lower())


def _identity(t):
    return t


@lru_cache(maxsize=None)
def _order_key(order: MonomialOrder, n: int, m: int):
    if order is MonomialOrder.A or m == 1 or n == 1:
        return _identity
    perm = [i * m + j for j in range(m) for i in range(n)]
    getter = itemgetter(*perm)
    return getter


def rank_of(order: MonomialOrder, i: int, j: int, n: int, m: int) -> int:
    """Position of x_i^(j) in descending variable rank (0 = largest)."""
    if order is MonomialOrder.A:
        return (i - 1) * m + (j - 1)
    return (j - 1) * n + (i - 1)


class Monomial:
    """Exponent grid e(i, j) over an n x m variable grid."""

    __slots__ = ("exps", "n", "m")

    def __init__(self, exps: Iterable[int], n: int, m: int = 1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != n * m:
            raise DimensionError(f"expected {n * m} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        self.exps = exps
        self.n = n
        self.m = m

    @classmethod
    def _raw(cls, exps: tuple, n: int, m: int) -> "Monomial":
        obj = object.__new__(cls)
        obj.exps = exps
        obj.n = n
        obj.m = m
        return obj

    @classmethod
    def one(cls, n: int, m: int = 1) -> "Monomial":
        return cls._raw((0,) * (n * m), n, m)

    @classmethod
    def var(cls, i: int, j: int, n: int, m: int = 1) -> "Monomial":
        if not (1 <= i <= n and 1 <= j <= m):
            raise DimensionError(f"x{i}_{j} is outside the {n}x{m} grid")
        exps = [0] * (n * m)
        exps[(i - 1) * m + (j - 1)] = 1
        return cls._raw(tuple(exps), n, m)

    @classmethod
    def from_grid(cls, grid: Iterable[Iterable[int]]) -> "Monomial":
        rows = [tuple(r) for r in grid]
        n, m = len(rows), len(rows[0])
        if any(len(r) != m for r in rows):
            raise DimensionError("ragged exponent grid")
        return cls([e for r in rows for e in r], n, m)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.n, self.m)

    def exponent(self, i: int, j: int = 1) -> int:
        return self.exps[(i - 1) * self.m + (j - 1)]

    def grid(self) -> list[list[int]]:
        m = self.m
        return [list(self.exps[r * m:(r + 1) * m]) for r in range(self.n)]

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def copy_degree(self, j: int) -> int:
        return sum(self.exps[j - 1::self.m])

    def _check(self, other: "Monomial"):
        if (self.n, self.m) != (other.n, other.m):
            raise DimensionError(f"dims {self.dims} != {other.dims}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial._raw(kernels.mono_mul(self.exps, other.exps), self.n, self.m)

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return kernels.divides(self.exps, other.exps)

    def __eq__(self, other):
        return (isinstance(other, Monomial) and self.exps == other.exps
                and self.n == other.n and self.m == other.m)

    def __hash__(self):
        return hash((self.exps, self.n, self.m))

    def __repr__(self):
        return f"Monomial({format_monomial(self.exps, self.n, self.m)!r})"

    def __str__(self):
        return format_monomial(self.exps, self.n, self.m)


def compare(a: Monomial, b: Monomial, order: MonomialOrder = MonomialOrder.A) -> int:
    """-1, 0 or 1 as a is less than, equal to, or greater than b."""
    a._check(b)
    key = order.key(a.n, a.m)
    ka, kb = key(a.exps), key(b.exps)
    return (ka > kb) - (ka < kb)


class Polynomial:
    """Immutable sparse polynomial: flat exponent tuple -> nonzero coefficient."""

    __slots__ = ("terms", "n", "m", "field", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), n: int = 1, m: int = 1,
                 field: Field = QQ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        size = n * m
        for mono, c in items:
            if isinstance(mono, Monomial):
                if mono.dims != (n, m):
                    raise DimensionError(f"monomial dims {mono.dims} != {(n, m)}")
                mono = mono.exps
            else:
                mono = tuple(mono)
                if len(mono) != size:
                    raise DimensionError(f"expected {size} exponents, got {len(mono)}")
            c = field(c) + clean.get(mono, 0)
            if field.p:
                c %= field.p
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms = clean
        self.n = n
        self.m = m
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, n: int, m: int, field: Field) -> "Polynomial":
        obj = object.__new__(cls)
        obj.terms = terms
        obj.n = n
        obj.m = m
        obj.field = field
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int, m: int = 1, field: Field = QQ) -> "Polynomial":
        return cls._raw({}, n, m, field)

    @classmethod
    def constant(cls, c, n: int, m: int = 1, field: Field = QQ) -> "Polynomial":
        return cls({(0,) * (n * m): c}, n, m, field)

    @classmethod
    def var(cls, i: int, j: int, n: int, m: int = 1, field: Field = QQ) -> "Polynomial":
        return cls._raw({Monomial.var(i, j, n, m).exps: 1}, n, m, field)

    @classmethod
    def from_monomial(cls, mono: Monomial, c=1, field: Field = QQ) -> "Polynomial":
        return cls({mono.exps: c}, mono.n, mono.m, field)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.n, self.m)

    def _check(self, other: "Polynomial"):
        if (self.n, self.m) != (other.n, other.m):
            raise DimensionError(f"dims {self.dims} != {other.dims}")
        if self.field != other.field:
            raise DimensionError(f"field {self.field} != {other.field}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def monomials(self) -> list[Monomial]:
        return [Monomial._raw(e, self.n, self.m) for e in self.terms]

    def coefficient(self, mono: Monomial | tuple):
        exps = mono.exps if isinstance(mono, Monomial) else tuple(mono)
        return self.terms.get(exps, 0)

    def sorted_terms(self, order: MonomialOrder = MonomialOrder.A) -> list[tuple[tuple, object]]:
        """Terms in descending order."""
        key = order.key(self.n, self.m)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lead(self, order: MonomialOrder = MonomialOrder.A) -> tuple[Monomial, object]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        key = order.key(self.n, self.m)
        exps = max(self.terms, key=key)
        return Monomial._raw(exps, self.n, self.m), self.terms[exps]

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.n, self.m, self.field)
        self._check(other)
        p = self.field.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.n, self.m, self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p:
            return Polynomial._raw({e: (-c) % p for e, c in self.terms.items()},
                                   self.n, self.m, self.field)
        return Polynomial._raw({e: -c for e, c in self.terms.items()},
                               self.n, self.m, self.field)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.n, self.m, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.n, self.m, self.field)
        p = self.field.p
        if p:
            out = {e: v * c % p for e, v in self.terms.items()}
        else:
            out = {e: v * c for e, v in self.terms.items()}
        return Polynomial._raw(out, self.n, self.m, self.field)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        out: dict = {}
        mul = kernels.mono_mul
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mul(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if p:
                    v %= p
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(out, self.n, self.m, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.n, self.m, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order: MonomialOrder = MonomialOrder.A) -> "Polynomial":
        _, lc = self.lead(order)
        return self.scale(self.field.inv(lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.terms == other.terms and self.n == other.n
                    and self.m == other.m and self.field == other.field)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * (self.n * self.m): self.field(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.terms.items()), self.n, self.m, self.field))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self.n}, m={self.m}, field={self.field})"

    def __str__(self):
        return format_polynomial(self)


def lead_monomial(f: Polynomial, order: MonomialOrder = MonomialOrder.A):
    """(LeadM(f), leading coefficient); raises ValueError on the zero polynomial."""
    return f.lead(order)


# text syntax

def _var_name(i: int, j: int, m: int) -> str:
    return f"x{i}" if m == 1 else f"x{i}_{j}"


def format_monomial(exps: tuple, n: int, m: int) -> str:
    parts = []
    for idx, e in enumerate(exps):
        if e:
            i, j = divmod(idx, m)
            name = _var_name(i + 1, j + 1, m)
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial, order: MonomialOrder = MonomialOrder.A) -> str:
    if not f.terms:
        return "0"
    out = []
    for exps, c in f.sorted_terms(order):
        if f.field.p and c > f.field.p // 2:
            c = c - f.field.p
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(exps, f.n, f.m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<i>\d+)(?:_(?P<j>\d+))?)|(?P<num>\d+(?:/\d+)?)"
                    r"|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list:
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = mt.end()
        if mt.group("var"):
            j = mt.group("j")
            toks.append(("var", int(mt.group("i")), None if j is None else int(j)))
        elif mt.group("num"):
            toks.append(("num", Fraction(mt.group("num"))))
        else:
            toks.append(("op", mt.group("op")))
    return toks


def parse_polynomial(text: str, n: int | None = None, m: int | None = None,
                     field: Field = QQ) -> Polynomial:
    """Parse e.g. ``"3*x1_1^2*x2_2 - 1/2*x3_1"``.

    Missing dims are inferred from the largest indices; ``x{i}`` is read as
    ``x{i}_1`` when m = 1.
    """
    toks = _tokenize(text)
    vars_seen = [t for t in toks if t[0] == "var"]
    bare = any(t[2] is None for t in vars_seen)
    if m is None:
        m = max((t[2] for t in vars_seen if t[2] is not None), default=1)
    if bare and m != 1:
        raise ParseError("bare x{i} is only accepted when m = 1")
    if n is None:
        n = max((t[1] for t in vars_seen), default=1)
    for t in vars_seen:
        j = 1 if t[2] is None else t[2]
        if not (1 <= t[1] <= n and 1 <= j <= m):
            raise DimensionError(f"variable x{t[1]}_{j} outside the {n}x{m} grid")
    parser = _Parser(toks, n, m, field)
    result = parser.expr()
    if parser.pos != len(toks):
        raise ParseError(f"trailing tokens after position {parser.pos}")
    return result


class _Parser:
    def __init__(self, toks, n, m, field):
        self.toks, self.pos = toks, 0
        self.n, self.m, self.field = n, m, field

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok == ("op", "-") or tok == ("op", "+"):
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term().scale(sign)
        while (tok := self.peek()) in (("op", "+"), ("op", "-")):
            self.take()
            t = self.term()
            acc = acc + t if tok[1] == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif tok is not None and (tok[0] in ("var", "num") or tok == ("op", "(")):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num" or tok[1].denominator != 1:
                raise ParseError("exponent must be a non-negative integer")
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok[0] == "num":
            return Polynomial.constant(tok[1], self.n, self.m, self.field)
        if tok[0] == "var":
            j = 1 if tok[2] is None else tok[2]
            return Polynomial.var(tok[1], j, self.n, self.m, self.field)
        if tok == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("expected ')'")
            return inner
        raise ParseError(f"unexpected token {tok!r}")


__all__ = [
    "DimensionError", "FieldError", "MonomialOrder", "Monomial", "Polynomial",
    "ParseError", "compare", "lead_monomial", "parse_polynomial",
    "format_monomial", "format_polynomial", "rank_of",
]
