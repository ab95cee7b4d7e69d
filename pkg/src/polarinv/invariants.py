"""Invariants of permutation groups acting diagonally on k[V^m].

Degree-d invariants are spanned by orbit sums of degree-d monomials, and
coordinates of an invariant are read off at one representative monomial
per orbit (the largest under order A).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from itertools import permutations
from math import comb
from typing import Iterable

from .fields import QQ, Field, FieldError
from .groebner import minimal_generator_degrees
from .linalg import exact_rank
from .permaction import PermutationGroup, act, orbit_exps
from .polarize import compositions, polarizations
from .polyring import DimensionError, Monomial, Polynomial

DEFAULT_TERM_CAP = 200_000


class Strategy(str, enum.Enum):
    GOEBEL_POLARIZED = "goebel"
    NOETHER_REYNOLDS = "noether"


class CapExceeded(RuntimeError):
    pass


def _check_group(f_or_n: int, G: PermutationGroup):
    if G.n != f_or_n:
        raise DimensionError(f"group acts on {G.n} points, ring has n = {f_or_n}")


def transfer(f: Polynomial, G: PermutationGroup) -> Polynomial:
    """Sum of sigma.f over all sigma in G."""
    _check_group(f.n, G)
    p = f.field.p
    out: dict = {}
    for sigma in G.elements:
        for e, c in act(sigma, f).terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                del out[e]
    return Polynomial._raw(out, f.n, f.m, f.field)


def reynolds(f: Polynomial, G: PermutationGroup) -> Polynomial:
    """Average of f over G; needs |G| invertible in the coefficient field."""
    order = f.field.from_int(G.order)
    if order == 0:
        raise FieldError(f"|G| = {G.order} is zero in {f.field}")
    return transfer(f, G).scale(f.field.inv(order))


def orbit_sum(M: Monomial, G: PermutationGroup, field: Field = QQ) -> Polynomial:
    _check_group(M.n, G)
    return Polynomial._raw({e: 1 for e in orbit_exps(M.exps, G, M.m)}, M.n, M.m, field)


def is_invariant(f: Polynomial, G: PermutationGroup) -> bool:
    gens = G.generators or G.elements
    return all(act(s, f) == f for s in gens)


def monomials_of_degree(n: int, m: int, d: int) -> list[tuple]:
    return list(compositions(d, n * m))


def orbit_representatives(G: PermutationGroup, n: int, m: int, d: int) -> list[tuple]:
    """One exponent tuple per G-orbit on degree-d monomials (the largest), sorted descending."""
    seen: set = set()
    reps = []
    for e in monomials_of_degree(n, m, d):
        if e in seen:
            continue
        orb = orbit_exps(e, G, m)
        seen |= orb
        reps.append(max(orb))
    reps.sort(reverse=True)
    return reps


@dataclass
class InvariantBasis:
    degree: int
    basis: list[Polynomial]
    representatives: list[tuple]

    def __len__(self):
        return len(self.basis)


def invariant_basis(G: PermutationGroup, n: int, m: int, d: int,
                    field: Field = QQ) -> InvariantBasis:
    _check_group(n, G)
    reps = orbit_representatives(G, n, m, d)
    basis = [Polynomial._raw({e: 1 for e in orbit_exps(r, G, m)}, n, m, field) for r in reps]
    return InvariantBasis(d, basis, reps)


@dataclass
class HilbertIdealGens:
    gens: list[Polynomial]
    strategy: Strategy
    group: PermutationGroup
    n: int
    m: int

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def degrees(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.gens:
            out[g.degree] = out.get(g.degree, 0) + 1
        return dict(sorted(out.items()))


def special_shapes(n: int) -> list[tuple[int, ...]]:
    """Decreasing exponent shapes with last entry 0 and consecutive gaps <= 1, positive degree."""
    shapes = []
    for mask in range(1, 2 ** (n - 1)) if n > 1 else []:
        gaps = [(mask >> t) & 1 for t in range(n - 1)]
        lam = [sum(gaps[i:]) for i in range(n - 1)] + [0]
        shapes.append(tuple(lam))
    shapes.sort(key=lambda s: (sum(s), s))
    return shapes


def _sort_gens(gens: Iterable[Polynomial]) -> list[Polynomial]:
    return sorted(gens, key=lambda g: (g.degree, [tuple(-x for x in e) for e, _ in g.sorted_terms()]))


def goebel_generators(G: PermutationGroup, n: int | None = None,
                      field: Field = QQ) -> HilbertIdealGens:
    """Orbit sums of special monomials plus x_1 x_2 ... x_n; these generate k[V]^G."""
    n = G.n if n is None else n
    _check_group(n, G)
    seen: set = set()
    gens = []
    for shape in special_shapes(n):
        for e in sorted(set(permutations(shape)), reverse=True):
            if e in seen:
                continue
            orb = orbit_exps(e, G, 1)
            seen |= orb
            gens.append(Polynomial._raw({x: 1 for x in orb}, n, 1, field))
    gens.append(Polynomial._raw({(1,) * n: 1}, n, 1, field))
    return HilbertIdealGens(_sort_gens(gens), Strategy.GOEBEL_POLARIZED, G, n, 1)


def noether_generators(G: PermutationGroup, n: int | None = None, m: int = 1,
                       field: Field = QQ, term_cap: int = DEFAULT_TERM_CAP) -> HilbertIdealGens:
    """Orbit sums of all monomials of degree 1..|G| in the nm variables."""
    n = G.n if n is None else n
    _check_group(n, G)
    if field.p and G.order % field.p == 0:
        raise FieldError(f"characteristic {field.p} divides |G| = {G.order}")
    total = comb(n * m + G.order, G.order) - 1
    if total > term_cap:
        raise CapExceeded(f"{total} monomials of degree <= {G.order} exceed cap {term_cap}")
    gens = []
    for d in range(1, G.order + 1):
        gens.extend(invariant_basis(G, n, m, d, field).basis)
    return HilbertIdealGens(gens, Strategy.NOETHER_REYNOLDS, G, n, m)


def polarized_generators(G: PermutationGroup, n: int | None = None, m: int = 1,
                         field: Field = QQ) -> HilbertIdealGens:
    """Union of Pol(f) over the Goebel generators f.

    These are invariants of k[V^m], and for S_n they generate the Hilbert
    ideal of V^m. For other groups they can generate a smaller ideal: for
    C_3 and m = 2 the invariant x1_1*x2_2 + x1_2*x3_1 + x2_1*x3_2 is missed.
    Cross-check against :func:`noether_generators` before relying on them.
    """
    if field.p:
        raise FieldError("polarized generators are only valid in characteristic 0")
    n = G.n if n is None else n
    base = goebel_generators(G, n, field)
    out, seen = [], set()
    for f in base.gens:
        for q in polarizations(f, m):
            if q not in seen:
                seen.add(q)
                out.append(q)
    return HilbertIdealGens(_sort_gens(out), Strategy.GOEBEL_POLARIZED, G, n, m)


def hilbert_ideal_generators(G: PermutationGroup, m: int = 1,
                             strategy: Strategy | str = Strategy.NOETHER_REYNOLDS,
                             field: Field = QQ) -> HilbertIdealGens:
    strategy = Strategy(strategy)
    if strategy is Strategy.GOEBEL_POLARIZED:
        return polarized_generators(G, G.n, m, field)
    return noether_generators(G, G.n, m, field)


@dataclass
class BetaReport:
    beta: int
    new_generators: dict[int, int]
    invariant_dims: dict[int, int]
    ideal_generation_degree: int
    bound: int
    bound_satisfied: bool = dc_field(init=False)

    def __post_init__(self):
        self.bound_satisfied = self.beta <= self.bound


def _coordinates(f: Polynomial, reps: list[tuple]) -> list:
    return [f.terms.get(r, 0) for r in reps]


def beta_exact(G: PermutationGroup, n: int | None = None, m: int = 1,
               hard_cap: int | None = None, field: Field = QQ,
               ideal_gens: HilbertIdealGens | None = None) -> BetaReport:
    """Largest degree of a minimal homogeneous generator of k[V^m]^G.

    Degrees above the generation degree D of the Hilbert ideal need no new
    generators, so only d = 1..D are examined. In degree d the number of new
    generators is dim k[V^m]^G_d minus the rank of all products of
    lower-degree invariants.
    """
    if field.p:
        raise FieldError("beta_exact works in characteristic 0 only")
    n = G.n if n is None else n
    _check_group(n, G)
    bound = comb(n, 2) + 1
    if hard_cap is None:
        hard_cap = max(bound, G.order)
    if hard_cap < bound:
        raise ValueError(f"hard_cap {hard_cap} below C(n,2)+1 = {bound}")
    if ideal_gens is None:
        ideal_gens = noether_generators(G, n, m, field)
    degrees = minimal_generator_degrees(ideal_gens.gens)
    D = max(degrees) if degrees else 0
    if D > hard_cap:
        raise CapExceeded(f"Hilbert ideal needs generators up to degree {D} > cap {hard_cap}")

    bases: dict[int, InvariantBasis] = {}
    new: dict[int, int] = {}
    dims: dict[int, int] = {}
    for d in range(1, D + 1):
        bases[d] = invariant_basis(G, n, m, d, field)
        reps = bases[d].representatives
        rows = []
        for a in range(1, d // 2 + 1):
            left, right = bases[a].basis, bases[d - a].basis
            for s, f in enumerate(left):
                start = s if a == d - a else 0
                for g in right[start:]:
                    rows.append(_coordinates(f * g, reps))
        rank = exact_rank(rows) if rows else 0
        dims[d] = len(reps)
        new[d] = len(reps) - rank
    beta = max((d for d, c in new.items() if c > 0), default=0)
    return BetaReport(beta, new, dims, D, bound)


__all__ = [
    "Strategy", "CapExceeded", "transfer", "reynolds", "orbit_sum", "is_invariant",
    "InvariantBasis", "invariant_basis", "HilbertIdealGens", "special_shapes",
    "goebel_generators", "noether_generators", "polarized_generators",
    "hilbert_ideal_generators", "BetaReport", "beta_exact", "orbit_representatives",
    "monomials_of_degree",
]
