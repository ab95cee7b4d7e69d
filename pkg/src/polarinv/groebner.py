"""Buchberger's algorithm, normal forms, lead ideals and staircases.

Working basis elements are monic. Over QQ coefficients are exact
rationals, kept as ints whenever the denominator is 1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .fields import Field
from .linalg import exact_rank, sparse_rows_to_dense
from .polyring import DimensionError, Monomial, MonomialOrder, Polynomial

log = logging.getLogger(__name__)

DEFAULT_PAIR_CAP = 10**6


class ResourceCapExceeded(RuntimeError):
    pass


class _Work:
    """Internal basis element: term dict plus cached lead data."""

    __slots__ = ("terms", "lead", "lc", "degree")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lead = max(terms, key=key)
        self.lc = terms[self.lead]
        self.degree = sum(self.lead)


def _clean(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _normalise(terms: dict, key, p: int) -> _Work:
    """Monic copy of a nonzero term dict."""
    w = _Work(terms, key)
    if w.lc != 1:
        if p:
            inv = pow(w.lc, -1, p)
            w.terms = {e: v * inv % p for e, v in terms.items()}
        else:
            lc = w.lc
            w.terms = {e: _clean(Fraction(v) / lc) for e, v in terms.items()}
        w.lc = 1
    return w


def _reduce(f: dict, basis: Sequence[_Work], key, p: int, full: bool = True) -> dict:
    """Remainder of ``f`` modulo the monic ``basis`` (full reduction by default)."""
    leads = [b.lead for b in basis]
    find = kernels.find_divisor
    axpy = kernels.axpy_shift
    mdiv = kernels.mono_div
    r: dict = {}
    f = dict(f)
    while f:
        lt = max(f, key=key)
        idx = find(lt, leads)
        if idx < 0:
            if not full:
                r.update(f)
                break
            r[lt] = f.pop(lt)
            continue
        g = basis[idx]
        f = axpy(f, 1, f[lt], mdiv(lt, g.lead), g.terms, p)
        if not p:
            for e, v in f.items():
                if type(v) is Fraction and v.denominator == 1:
                    f[e] = v.numerator
    return r


def _check_inputs(polys: Sequence[Polynomial]):
    if not polys:
        raise ValueError("need at least one polynomial")
    first = polys[0]
    for q in polys[1:]:
        if q.dims != first.dims or q.field != first.field:
            raise DimensionError("generators must share dims and field")
    return first.n, first.m, first.field


def normal_form(f: Polynomial, B: Sequence[Polynomial],
                order: MonomialOrder = MonomialOrder.A) -> Polynomial:
    """Remainder of multivariate division of f by B (full reduction)."""
    B = [b for b in B]
    if not B or any(b.is_zero() for b in B):
        raise ValueError("divisors must be a nonempty list of nonzero polynomials")
    n, m, fld = _check_inputs([f] + B)
    key = order.key(n, m)
    work = [_normalise(b.terms, key, fld.p) for b in B]
    if f.is_zero():
        return f
    return Polynomial._raw(_reduce(f.terms, work, key, fld.p), n, m, fld)


@dataclass
class GroebnerBasis:
    basis: list[Polynomial]
    order: MonomialOrder
    reduced: bool
    n: int
    m: int
    field: Field
    truncated_at: int | None = None
    stats: dict = dc_field(default_factory=dict, compare=False)

    def leads(self) -> list[Monomial]:
        return [g.lead(self.order)[0] for g in self.basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.basis:
            return f
        return normal_form(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


def _spoly(g1: _Work, g2: _Work, lcm_exps: tuple, p: int) -> dict:
    u1 = kernels.mono_div(lcm_exps, g1.lead)
    u2 = kernels.mono_div(lcm_exps, g2.lead)
    left = kernels.axpy_shift({}, 1, -1, u1, g1.terms, p)
    return kernels.axpy_shift(left, 1, 1, u2, g2.terms, p)


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = MonomialOrder.A,
               pair_cap: int = DEFAULT_PAIR_CAP, degree_cap: int | None = None,
               basis_cap: int = 100_000) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are selected by the normal strategy: smallest lcm degree first
    for homogeneous input, smallest lcm in the order otherwise (degree-first
    selection makes lex computations on inhomogeneous input explode). They are
    filtered with Buchberger's coprime and
    chain criteria. With ``degree_cap`` set, pairs whose lcm exceeds the cap
    are dropped: for homogeneous input the result is then a basis in every
    degree up to the cap.
    """
    gens = [g for g in gens]
    n, m, fld = _check_inputs(gens)
    p = fld.p
    key = order.key(n, m)
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return GroebnerBasis([], order, True, n, m, fld, degree_cap)

    # seed with inputs in ascending (degree, lead) order, reducing as we go
    seeds = [_normalise(g.terms, key, p) for g in nonzero]
    seeds.sort(key=lambda w: (w.degree, key(w.lead)))
    G: list[_Work] = []
    for w in seeds:
        r = _reduce(w.terms, G, key, p)
        if r:
            G.append(_normalise(r, key, p))

    if all(g.is_homogeneous() for g in nonzero):
        def select(kv):
            return sum(kv[1]), key(kv[1]), kv[0]
    else:
        def select(kv):
            return key(kv[1]), kv[0]

    lcm_ = kernels.mono_lcm
    mul = kernels.mono_mul
    divides = kernels.divides
    pairs: dict[tuple[int, int], tuple] = {}

    def add_pairs(new: int):
        for i in range(new):
            L = lcm_(G[i].lead, G[new].lead)
            pairs[(i, new)] = L

    for t in range(1, len(G)):
        add_pairs(t)

    processed = 0
    skipped = 0
    while pairs:
        (i, j), L = min(pairs.items(), key=select)
        del pairs[(i, j)]
        if degree_cap is not None and sum(L) > degree_cap:
            skipped += 1
            continue
        if mul(G[i].lead, G[j].lead) == L:
            continue
        chain = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if divides(G[k].lead, L) \
                    and (min(i, k), max(i, k)) not in pairs \
                    and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        processed += 1
        if processed > pair_cap:
            raise ResourceCapExceeded(f"more than {pair_cap} S-pairs reduced")
        s = _spoly(G[i], G[j], L, p)
        if not s:
            continue
        r = _reduce(s, G, key, p)
        if r:
            G.append(_normalise(r, key, p))
            if len(G) > basis_cap:
                raise ResourceCapExceeded(f"basis grew past {basis_cap} elements")
            add_pairs(len(G) - 1)

    reduced = _interreduce(G, key, p)
    basis = [_monic(w, n, m, fld) for w in reduced]
    log.debug("buchberger: %d pairs reduced, basis size %d", processed, len(basis))
    return GroebnerBasis(basis, order, True, n, m, fld,
                         degree_cap if skipped else None,
                         {"pairs_reduced": processed, "pairs_skipped_by_cap": skipped})


def _interreduce(G: list[_Work], key, p: int) -> list[_Work]:
    # minimal basis: drop elements whose lead is divisible by another lead
    G = sorted(G, key=lambda w: key(w.lead))
    minimal: list[_Work] = []
    for w in G:
        if any(kernels.divides(v.lead, w.lead) for v in minimal):
            continue
        minimal.append(w)
    out = []
    for t, w in enumerate(minimal):
        others = minimal[:t] + minimal[t + 1:]
        tail = dict(w.terms)
        lead_c = tail.pop(w.lead)
        # w.lead is irreducible by the others, so it stays the lead
        r = _reduce(tail, others, key, p)
        r[w.lead] = lead_c
        out.append(_normalise(r, key, p))
    out.sort(key=lambda w: key(w.lead), reverse=True)
    return out


def _monic(w: _Work, n: int, m: int, fld: Field) -> Polynomial:
    return Polynomial._raw(dict(w.terms), n, m, fld)


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: MonomialOrder = MonomialOrder.A) -> Polynomial:
    """lc(g) * (L / lm(f)) * f - lc(f) * (L / lm(g)) * g with L = lcm of the leads."""
    n, m, fld = _check_inputs([f, g])
    (lf, cf), (lg, cg) = f.lead(order), g.lead(order)
    L = kernels.mono_lcm(lf.exps, lg.exps)
    uf = Polynomial._raw({kernels.mono_div(L, lf.exps): cg}, n, m, fld)
    ug = Polynomial._raw({kernels.mono_div(L, lg.exps): cf}, n, m, fld)
    return uf * f - ug * g


def is_groebner(polys: Sequence[Polynomial], order: MonomialOrder = MonomialOrder.A):
    """Buchberger's criterion: ``(True, None)`` or ``(False, (i, j, remainder))``.

    The witness is the first pair, in index order, whose S-polynomial has a
    nonzero normal form.
    """
    polys = [q for q in polys if not q.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            (li, _), (lj, _) = polys[i].lead(order), polys[j].lead(order)
            if kernels.mono_mul(li.exps, lj.exps) == kernels.mono_lcm(li.exps, lj.exps):
                continue
            r = normal_form(s_polynomial(polys[i], polys[j], order), polys, order)
            if not r.is_zero():
                return False, (i, j, r)
    return True, None


def ideal_membership(f: Polynomial, GB: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    if not GB.basis:
        return False
    if GB.truncated_at is not None and f.is_homogeneous() and f.degree > GB.truncated_at:
        raise ValueError("basis truncated below the degree of f")
    return GB.normal_form(f).is_zero()


# monomial ideals

@dataclass(frozen=True)
class LeadIdeal:
    generators: tuple[Monomial, ...]
    n: int
    m: int

    def contains(self, mono: Monomial) -> bool:
        return kernels.find_divisor(mono.exps, [g.exps for g in self.generators]) >= 0

    def __len__(self):
        return len(self.generators)


def minimize_monomials(monos: Iterable[tuple]) -> list[tuple]:
    uniq = sorted(set(monos), key=lambda e: (sum(e), e))
    keep: list[tuple] = []
    for e in uniq:
        if kernels.find_divisor(e, keep) < 0:
            keep.append(e)
    return keep


def lead_ideal(source, order: MonomialOrder | None = None) -> LeadIdeal:
    """Minimal monomial generators of the lead-term ideal.

    ``source`` is a :class:`GroebnerBasis`, or an iterable of monomials or
    polynomials (polynomials contribute their leading monomial).
    """
    if isinstance(source, GroebnerBasis):
        order = source.order
        items = source.basis
    else:
        items = list(source)
    order = order or MonomialOrder.A
    exps, dims = [], None
    for it in items:
        mono = it.lead(order)[0] if isinstance(it, Polynomial) else it
        exps.append(mono.exps)
        dims = mono.dims
    if dims is None:
        raise ValueError("empty generating set")
    n, m = dims
    gens = minimize_monomials(exps)
    key = order.key(n, m)
    gens.sort(key=key, reverse=True)
    return LeadIdeal(tuple(Monomial._raw(e, n, m) for e in gens), n, m)


@dataclass(frozen=True)
class Staircase:
    standard: tuple[Monomial, ...]
    top_degree: int | None
    finite: bool

    @property
    def size(self) -> int:
        return len(self.standard)

    def hilbert_function(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.standard:
            out[s.degree] = out.get(s.degree, 0) + 1
        return dict(sorted(out.items()))


def staircase(L: LeadIdeal, dims: tuple[int, int] | None = None,
              cap: int = 2_000_000) -> Staircase:
    """Standard monomials of a monomial ideal, when there are finitely many."""
    n, m = dims or (L.n, L.m)
    size = n * m
    gens = [g.exps for g in L.generators]
    bounds = []
    for t in range(size):
        pure = [g[t] for g in gens if g[t] > 0 and sum(g) == g[t]]
        if not pure:
            return Staircase((), None, False)
        bounds.append(min(pure))

    found: list[tuple] = []
    cur = [0] * size
    find = kernels.find_divisor

    def walk(t: int):
        if t == size:
            found.append(tuple(cur))
            if len(found) > cap:
                raise ResourceCapExceeded(f"more than {cap} standard monomials")
            return
        for e in range(bounds[t]):
            cur[t] = e
            if e and find(tuple(cur), gens) >= 0:
                break
            walk(t + 1)
        cur[t] = 0

    walk(0)
    found.sort(key=lambda e: (sum(e), e))
    monos = tuple(Monomial._raw(e, n, m) for e in found)
    return Staircase(monos, max(sum(e) for e in found), True)


def minimal_generator_degrees(gens: Sequence[Polynomial],
                              order: MonomialOrder = MonomialOrder.A) -> dict[int, int]:
    """Number of minimal generators needed in each degree, for homogeneous gens.

    In degree d this is the rank of the degree-d generators modulo the
    ideal generated in degrees below d. Degrees needing none are omitted, so
    the largest key is the maximal degree of a minimal generating set.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return {}
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("minimal_generator_degrees needs homogeneous generators")
    by_deg: dict[int, list[Polynomial]] = {}
    for g in gens:
        by_deg.setdefault(g.degree, []).append(g)
    out: dict[int, int] = {}
    lower: list[Polynomial] = []
    p = gens[0].field.p
    for d in sorted(by_deg):
        if lower:
            GB = buchberger(lower, order, degree_cap=d)
            residues = [GB.normal_form(g) for g in by_deg[d]]
        else:
            residues = by_deg[d]
        rows = [r.terms for r in residues if not r.is_zero()]
        rank = exact_rank(sparse_rows_to_dense(rows), p) if rows else 0
        if rank:
            out[d] = rank
        lower.extend(by_deg[d])
    return out


__all__ = [
    "GroebnerBasis", "LeadIdeal", "Staircase", "ResourceCapExceeded",
    "normal_form", "buchberger", "lead_ideal", "staircase", "ideal_membership",
    "minimal_generator_degrees", "minimize_monomials", "s_polynomial", "is_groebner",
]
