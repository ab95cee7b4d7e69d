"""Polarization of polynomials in k[V] into k[V^m].

Substituting x_i -> sum_j x_i^(j) t_j and collecting the coefficient of
t_1^k_1 ... t_m^k_m gives Pol_k(f). Nothing here builds the t-variables:
each term x^a is expanded by distributing its a_i factors of x_i across
the m copies, i.e. by enumerating the n x m matrices with row sums a and
column sums k.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator

from . import kernels
from .fields import Field, FieldError
from .polyring import DimensionError, Monomial, MonomialOrder, Polynomial


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` naturals summing to ``total``, in ascending lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def multi_indices(m: int, weight: int) -> list[tuple[int, ...]]:
    return list(compositions(weight, m))


@lru_cache(maxsize=None)
def multinomial(parts: tuple[int, ...]) -> int:
    out = factorial(sum(parts))
    for b in parts:
        out //= factorial(b)
    return out


def _bounded_compositions(total: int, caps: list[int], j: int = 0):
    """Compositions of ``total`` into len(caps) parts with part j <= caps[j]."""
    m = len(caps)
    if j == m - 1:
        if total <= caps[j]:
            yield (total,)
        return
    rest = sum(caps[j + 1:])
    for b in range(min(total, caps[j]), max(0, total - rest) - 1, -1):
        for tail in _bounded_compositions(total - b, caps, j + 1):
            yield (b,) + tail


def _transport_matrices(a: tuple[int, ...], k: tuple[int, ...]):
    """Rows b_i (each a composition of a_i) whose column sums equal k."""
    n = len(a)

    def rec(i, caps):
        if i == n:
            if not any(caps):
                yield ()
            return
        for row in _bounded_compositions(a[i], caps):
            new_caps = [c - b for c, b in zip(caps, row)]
            for rest in rec(i + 1, new_caps):
                yield (row,) + rest

    yield from rec(0, list(k))


def _check_source(f: Polynomial):
    if f.m != 1:
        raise DimensionError("polarization takes a polynomial in k[V] (m = 1)")


def pol_k(f: Polynomial, k) -> Polynomial:
    """Pol_k(f), the coefficient of t^k in f(sum_j x^(j) t_j)."""
    _check_source(f)
    k = tuple(int(x) for x in k)
    if not k or any(x < 0 for x in k):
        raise ValueError("multi-index must be a nonempty tuple of naturals")
    n, m = f.n, len(k)
    p = f.field.p
    weight = sum(k)
    out: dict = {}
    for a, c in f.terms.items():
        if sum(a) != weight:
            continue
        for rows in _transport_matrices(a, k):
            coeff = c
            for row in rows:
                coeff *= multinomial(row)
            if p:
                coeff %= p
            if not coeff:
                continue
            exps = tuple(e for row in rows for e in row)
            v = out.get(exps, 0) + coeff
            if p:
                v %= p
            if v:
                out[exps] = v
            else:
                del out[exps]
    return Polynomial._raw(out, n, m, f.field)


@dataclass(frozen=True)
class PolarizedFamily:
    source: Polynomial
    m: int
    pols: dict

    def __getitem__(self, k) -> Polynomial:
        k = tuple(k)
        if k in self.pols:
            return self.pols[k]
        return Polynomial.zero(self.source.n, self.m, self.source.field)

    def members(self) -> list[Polynomial]:
        """Pol(f): the nonzero polarizations, in descending multi-index order."""
        return [self.pols[k] for k in sorted(self.pols, reverse=True)]

    def __len__(self):
        return len(self.pols)


def polarize_full(f: Polynomial, m: int) -> PolarizedFamily:
    """Every nonzero Pol_k(f) at once, keyed by k."""
    _check_source(f)
    if m < 1:
        raise ValueError("m must be positive")
    n, p = f.n, f.field.p
    acc: dict[tuple, dict] = {}
    for a, c in f.terms.items():
        row_choices = [list(compositions(ai, m)) for ai in a]

        def rec(i, rows):
            if i == n:
                yield rows
                return
            for row in row_choices[i]:
                yield from rec(i + 1, rows + (row,))

        for rows in rec(0, ()):
            coeff = c
            for row in rows:
                coeff *= multinomial(row)
            if p:
                coeff %= p
            if not coeff:
                continue
            k = tuple(sum(row[j] for row in rows) for j in range(m))
            exps = tuple(e for row in rows for e in row)
            bucket = acc.setdefault(k, {})
            v = bucket.get(exps, 0) + coeff
            if p:
                v %= p
            if v:
                bucket[exps] = v
            else:
                del bucket[exps]
    pols = {k: Polynomial._raw(t, n, m, f.field) for k, t in acc.items() if t}
    return PolarizedFamily(f, m, pols)


def polarizations(f: Polynomial, m: int) -> list[Polynomial]:
    """Pol(f) as a list."""
    return polarize_full(f, m).members()


def _lead_exponents_by_column(a: tuple, k: tuple) -> tuple:
    n, m = len(a), len(k)
    b = [[0] * m for _ in range(n)]
    for j in range(m):
        for i in range(n):
            col_left = k[j] - sum(b[l][j] for l in range(i))
            row_left = a[i] - sum(b[i][l] for l in range(j))
            b[i][j] = min(col_left, row_left)
    return tuple(e for row in b for e in row)


def fast_lead(M: Monomial, k, order: MonomialOrder = MonomialOrder.A,
              field: Field | None = None, fill: str = "row") -> tuple[Monomial, object]:
    """Leading monomial and coefficient of Pol_k(M) without expanding it.

    The exponent of x_i^(j) is min(k_j - sum_{l<i} b_{l,j}, a_i - sum_{l<j} b_{i,l});
    the coefficient is prod_i a_i! / (b_{i,1}! ... b_{i,m}!). The same grid
    is the lead under both orders. ``fill`` selects row-major ("row") or
    column-major ("column") evaluation; both give the same grid.

    Over GF(p) the call is refused unless every a_i < p, since otherwise
    the coefficient may vanish.
    """
    if M.m != 1:
        raise DimensionError("fast_lead takes a monomial of k[V] (m = 1)")
    if not isinstance(order, MonomialOrder):
        raise TypeError("order must be a MonomialOrder")
    k = tuple(int(x) for x in k)
    a = M.exps
    if sum(k) != sum(a):
        raise ValueError(f"|k| = {sum(k)} differs from deg M = {sum(a)}; Pol_k(M) = 0")
    p = field.p if field is not None else 0
    if p and any(ai >= p for ai in a):
        raise FieldError(f"exponent >= {p}: the leading coefficient may vanish in GF({p})")
    if fill == "row":
        b = kernels.lead_exponents(a, k)
    elif fill == "column":
        b = _lead_exponents_by_column(a, k)
    else:
        raise ValueError(f"unknown fill order {fill!r}")
    m = len(k)
    coeff = 1
    for i in range(len(a)):
        coeff *= multinomial(tuple(b[i * m:(i + 1) * m]))
    if p:
        coeff %= p
    return Monomial._raw(tuple(b), M.n, m), coeff


def theorem_family(n: int, m: int) -> set[Monomial]:
    """{prod_j (x_i^(j))^k_j : 1 <= i <= n, |k| = i}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    out = set()
    for i in range(1, n + 1):
        for k in compositions(i, m):
            exps = [0] * (n * m)
            exps[(i - 1) * m:i * m] = k
            out.add(Monomial._raw(tuple(exps), n, m))
    return out


def theorem_family_size(n: int, m: int) -> int:
    from math import comb
    return sum(comb(i + m - 1, m - 1) for i in range(1, n + 1))


__all__ = [
    "PolarizedFamily", "pol_k", "polarize_full", "polarizations", "fast_lead",
    "theorem_family", "theorem_family_size", "multi_indices", "compositions",
    "multinomial",
]
