"""Exact rank by fraction-free (Bareiss) elimination."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix; every intermediate division is exact."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    nrows = len(M)
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = M[i]
            q = row[c]
            if q:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - q * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    M = [[v % p for v in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    ncols, nrows, r = len(M[0]), len(M), 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        pr = [v * inv % p for v in M[r]]
        M[r] = pr
        for i in range(r + 1, nrows):
            q = M[i][c]
            if q:
                M[i] = [(a - q * b) % p for a, b in zip(M[i], pr)]
        r += 1
        if r == nrows:
            break
    return r


def exact_rank(rows: Sequence[Sequence], p: int = 0) -> int:
    """Rank over QQ (p = 0) or GF(p) of a dense matrix of ints/Fractions."""
    if p:
        return rank_mod_p(_integer_rows_mod(rows, p), p)
    return bareiss_rank(_integer_rows(rows))


def _integer_rows_mod(rows, p):
    out = []
    for row in rows:
        vals = []
        for v in row:
            if isinstance(v, Fraction):
                vals.append(v.numerator * pow(v.denominator, -1, p) % p)
            else:
                vals.append(v % p)
        out.append(vals)
    return out


def sparse_rows_to_dense(rows: Sequence[dict]) -> list[list]:
    cols = sorted({k for r in rows for k in r})
    index = {k: t for t, k in enumerate(cols)}
    dense = []
    for r in rows:
        vec = [0] * len(cols)
        for k, v in r.items():
            vec[index[k]] = v
        dense.append(vec)
    return dense


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
