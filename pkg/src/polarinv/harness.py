"""Experiment drivers that check the degree bounds on concrete groups.

Every ``cmd_*`` function returns an :class:`ExperimentReport`; the CLI only
formats them.
"""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from math import comb, factorial

from .fields import QQ, Field
from .groebner import (buchberger, ideal_membership, is_groebner, lead_ideal,
                       minimal_generator_degrees, staircase)
from .invariants import Strategy, beta_exact, goebel_generators, hilbert_ideal_generators
from .permaction import DEFAULT_GROUP_CAP, PermutationGroup, parse_group, symmetric_group
from .polarize import compositions, fast_lead, pol_k, polarizations, theorem_family
from .polyring import Monomial, MonomialOrder, Polynomial, format_polynomial

MAX_SNLEAD_N = 5
CLI_GROUP_CAP = 5040


@dataclass
class ExperimentReport:
    case: str
    inputs: dict
    lead_ideal: list[str] | None = None
    top_degree: int | None = None
    beta: int | None = None
    degrees: dict | None = None
    bounds: dict = field(default_factory=dict)
    passed: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "case": self.case,
            "inputs": self.inputs,
            "lead_ideal": self.lead_ideal,
            "top_degree": self.top_degree,
            "beta": self.beta,
            "degrees": None if self.degrees is None
            else {str(k): v for k, v in sorted(self.degrees.items())},
            "bounds": self.bounds,
            "pass": self.passed,
            "details": self.details,
        }
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)


@contextmanager
def _timed(report: ExperimentReport, label: str):
    t0 = time.perf_counter()
    try:
        yield
    finally:
        report.timings[label] = time.perf_counter() - t0


def _group_label(G: PermutationGroup) -> str:
    return G.name or f"G(n={G.n},|G|={G.order})"


def _resolve_group(spec: str | PermutationGroup, cap: int = CLI_GROUP_CAP) -> PermutationGroup:
    if isinstance(spec, PermutationGroup):
        return spec
    return parse_group(spec, cap=cap)


def cmd_snlead(n: int, max_n: int = MAX_SNLEAD_N) -> ExperimentReport:
    """Reduced GB of I(S_n, V): lead ideal (x_1, x_2^2, ..., x_n^n), top degree C(n, 2)."""
    if not 2 <= n <= max_n:
        raise ValueError(f"n must lie in 2..{max_n}")
    rep = ExperimentReport(f"snlead/S{n}", {"n": n, "group": f"S{n}", "m": 1})
    G = symmetric_group(n)
    with _timed(rep, "generators"):
        gens = goebel_generators(G)
    with _timed(rep, "buchberger"):
        GB = buchberger(gens.gens)
    L = lead_ideal(GB)
    st = staircase(L)
    expected = [Monomial.var(i, 1, n, 1) for i in range(1, n + 1)]
    expected = sorted((tuple(i * e for e in mono.exps) for i, mono in enumerate(expected, 1)),
                      reverse=True)
    rep.lead_ideal = [str(g) for g in L.generators]
    rep.top_degree = st.top_degree
    rep.bounds = {"C(n,2)": comb(n, 2), "n!": factorial(n)}
    rep.passed = {
        "lead_ideal_is_staircase_powers": [g.exps for g in L.generators] == expected,
        "top_degree_equals_C(n,2)": st.finite and st.top_degree == comb(n, 2),
        "standard_monomials_equal_n!": st.size == factorial(n),
    }
    rep.details = {"gb_size": len(GB), "standard_monomials": st.size,
                   "generator_count": len(gens)}
    return rep


def _monomials_below(n: int, d: int, bound: int | None):
    for e in compositions(d, n):
        if bound is None or all(x < bound for x in e):
            yield Monomial._raw(e, n, 1)


def cmd_lemma_sweep(n: int, m: int, max_deg: int, fld: Field = QQ,
                    orders=(MonomialOrder.A, MonomialOrder.B)) -> ExperimentReport:
    """Compare the recursive lead against expansion and check strict monotonicity.

    Over GF(p) only monomials with every exponent below p are swept.
    """
    rep = ExperimentReport(
        f"lemma-sweep/n{n}/m{m}/d{max_deg}/{fld.tag}",
        {"n": n, "m": m, "max_deg": max_deg, "field": fld.tag,
         "orders": [o.value for o in orders]})
    bound = fld.p or None
    mismatches, violations = [], []
    checks = pairs = 0
    with _timed(rep, "sweep"):
        for order in orders:
            key = order.key(n, m)
            for d in range(0, max_deg + 1):
                monos = sorted(_monomials_below(n, d, bound), key=lambda M: M.exps)
                if not monos:
                    continue
                for k in compositions(d, m):
                    leads = {}
                    for M in monos:
                        mono, coeff = fast_lead(M, k, order, fld)
                        expanded = pol_k(Polynomial({M.exps: 1}, n, 1, fld), k)
                        checks += 1
                        if expanded.is_zero():
                            mismatches.append((order.value, str(M), k, "expansion is zero"))
                            continue
                        lm, lc = expanded.lead(order)
                        if lm != mono or lc != coeff:
                            mismatches.append((order.value, str(M), k, str(lm)))
                        leads[M.exps] = key(mono.exps)
                    # m = 1 monomials: both orders reduce to plain lex on exps
                    for lo in range(len(monos)):
                        for hi in range(lo + 1, len(monos)):
                            pairs += 1
                            small, big = monos[lo], monos[hi]
                            if not leads[small.exps] < leads[big.exps]:
                                violations.append((order.value, str(small), str(big), k))
    rep.passed = {"oracle_equivalence": not mismatches, "strict_monotonicity": not violations}
    rep.details = {
        "lead_checks": checks, "pairs_checked": pairs,
        "mismatches": len(mismatches), "violations": len(violations),
        "first_mismatch": [str(x) for x in mismatches[0]] if mismatches else None,
        "first_violation": [str(x) for x in violations[0]] if violations else None,
    }
    return rep


def cmd_modular_search(n: int, m: int, max_deg: int, fld: Field,
                       orders=(MonomialOrder.A, MonomialOrder.B)) -> ExperimentReport:
    """Look for monotonicity failures over GF(p) once exponents reach p.

    Leads come from the expansion alone. Pairs where either polarization
    vanishes are counted separately; nothing is asserted.
    """
    if not fld.p:
        raise ValueError("the search only makes sense over a prime field")
    rep = ExperimentReport(
        f"modular-search/n{n}/m{m}/d{max_deg}/{fld.tag}",
        {"n": n, "m": m, "max_deg": max_deg, "field": fld.tag,
         "orders": [o.value for o in orders]})
    found, vanishing, pairs = [], 0, 0
    with _timed(rep, "sweep"):
        for order in orders:
            key = order.key(n, m)
            for d in range(1, max_deg + 1):
                monos = sorted(_monomials_below(n, d, None), key=lambda M: M.exps)
                for k in compositions(d, m):
                    leads = {}
                    for M in monos:
                        q = pol_k(Polynomial({M.exps: 1}, n, 1, fld), k)
                        leads[M.exps] = None if q.is_zero() else key(q.lead(order)[0].exps)
                    for lo in range(len(monos)):
                        for hi in range(lo + 1, len(monos)):
                            a, b = leads[monos[lo].exps], leads[monos[hi].exps]
                            if any(e >= fld.p for e in monos[hi].exps + monos[lo].exps):
                                pairs += 1
                                if a is None or b is None:
                                    vanishing += 1
                                elif not a < b:
                                    found.append((order.value, str(monos[lo]), str(monos[hi]), k))
    rep.passed = {}
    rep.details = {"pairs_with_high_exponent": pairs, "vanishing_polarizations": vanishing,
                   "counterexamples": len(found),
                   "examples": [[str(x) for x in f] for f in found[:5]]}
    return rep


def cmd_bound_check(group: str | PermutationGroup, m: int,
                    strategy: Strategy | str = Strategy.NOETHER_REYNOLDS,
                    cross_check: bool = False) -> ExperimentReport:
    """All degree-bound claims for I(G, V^m) on one group."""
    G = _resolve_group(group)
    n = G.n
    strategy = Strategy(strategy)
    bound_top, bound_beta = comb(n, 2), comb(n, 2) + 1
    rep = ExperimentReport(
        f"bound-check/{_group_label(G)}/m{m}/{strategy.value}",
        {"group": _group_label(G), "n": n, "m": m, "order": G.order,
         "strategy": strategy.value, "cross_check": cross_check})
    rep.bounds = {"C(n,2)": bound_top, "C(n,2)+1": bound_beta}
    with _timed(rep, "generators"):
        hig = hilbert_ideal_generators(G, m, strategy)
    with _timed(rep, "buchberger"):
        GB = buchberger(hig.gens)
    L = lead_ideal(GB)
    st = staircase(L)
    rep.lead_ideal = [str(g) for g in L.generators]
    rep.top_degree = st.top_degree
    family = sorted(theorem_family(n, m), key=lambda M: M.exps, reverse=True)
    missing = [str(M) for M in family if not L.contains(M)]
    with _timed(rep, "generator_degrees"):
        rep.degrees = minimal_generator_degrees(hig.gens)
    gen_deg = max(rep.degrees) if rep.degrees else 0
    with _timed(rep, "beta"):
        beta = beta_exact(G, n, m, ideal_gens=hig)
    rep.beta = beta.beta
    with _timed(rep, "containment"):
        contain = _containment_checks(G, m, GB, L)
    rep.passed = {
        "theorem_family_in_lead_ideal": not missing,
        "top_degree_le_C(n,2)": st.finite and st.top_degree <= bound_top,
        "generation_degree_le_C(n,2)+1": gen_deg <= bound_beta,
        "beta_le_C(n,2)+1": beta.beta <= bound_beta,
        "polarizations_in_hilbert_ideal": contain["membership_failures"] == 0,
        "polarized_leads_in_lead_ideal": contain["lead_failures"] == 0,
    }
    rep.details = {
        "gb_size": len(GB), "generator_count": len(hig),
        "standard_monomials": st.size, "generation_degree": gen_deg,
        "beta_new_generators": {str(k): v for k, v in beta.new_generators.items()},
        "invariant_dims": {str(k): v for k, v in beta.invariant_dims.items()},
        "theorem_family_size": len(family), "theorem_family_missing": missing,
        **contain,
    }
    if cross_check:
        other = Strategy.NOETHER_REYNOLDS if strategy is Strategy.GOEBEL_POLARIZED \
            else Strategy.GOEBEL_POLARIZED
        with _timed(rep, "cross_check"):
            alt = hilbert_ideal_generators(G, m, other)
            res = compare_generating_sets(hig.gens, alt.gens, GB)
        rep.passed["strategies_generate_same_ideal"] = res["failures"] == 0
        rep.details["cross_check"] = {"strategy": other.value, **res}
    return rep


def compare_generating_sets(gens_a, gens_b, gb_a=None) -> dict:
    """Mutual membership: each set reduces to 0 against the other's GB."""
    gb_a = gb_a or buchberger(gens_a)
    gb_b = buchberger(gens_b)
    a_in_b = sum(1 for g in gens_a if not ideal_membership(g, gb_b))
    b_in_a = sum(1 for g in gens_b if not ideal_membership(g, gb_a))
    return {"a_not_in_b": a_in_b, "b_not_in_a": b_in_a, "failures": a_in_b + b_in_a,
            "same_reduced_basis": gb_a.basis == gb_b.basis}


def _containment_checks(G: PermutationGroup, m: int, GB_m, L_m) -> dict:
    """Polarizations of Hilbert-ideal elements of I(G, V) against I(G, V^m).

    Sources are the Goebel generators and the reduced GB of I(G, V).
    """
    base = goebel_generators(G)
    gb1 = buchberger(base.gens)
    sources = list(base.gens) + [g for g in gb1.basis if g not in set(base.gens)]
    membership_failures = lead_failures = checked = 0
    for f in sources:
        for q in polarizations(f, m):
            checked += 1
            if not ideal_membership(q, GB_m):
                membership_failures += 1
        lm, _ = f.lead(MonomialOrder.A)
        for k in compositions(lm.degree, m):
            mono, _ = fast_lead(lm, k)
            if not L_m.contains(mono):
                lead_failures += 1
    return {"polarizations_checked": checked, "membership_failures": membership_failures,
            "lead_failures": lead_failures, "sources": len(sources)}


def cmd_polarized_gb_test(group: str | PermutationGroup, m: int) -> ExperimentReport:
    """Is the polarization of the reduced GB of I(G, V) a GB of what it generates?"""
    G = _resolve_group(group)
    n = G.n
    rep = ExperimentReport(f"gb-polarize-test/{_group_label(G)}/m{m}",
                           {"group": _group_label(G), "n": n, "m": m})
    with _timed(rep, "base_gb"):
        gb1 = buchberger(goebel_generators(G).gens)
    polarized: list[Polynomial] = []
    for g in gb1.basis:
        for q in polarizations(g, m):
            if q not in polarized:
                polarized.append(q)
    with _timed(rep, "criterion"):
        is_gb, witness = is_groebner(polarized)
    with _timed(rep, "hilbert_gb"):
        GB_m = buchberger(hilbert_ideal_generators(G, m).gens)
    L_true = lead_ideal(GB_m)
    L_pol = lead_ideal(polarized)
    st = staircase(L_true)
    rep.lead_ideal = [str(g) for g in L_true.generators]
    rep.top_degree = st.top_degree
    in_ideal = all(ideal_membership(q, GB_m) for q in polarized)
    rep.passed = {"polarized_gb_in_hilbert_ideal": in_ideal}
    rep.details = {
        "base_gb": [format_polynomial(g) for g in gb1.basis],
        "polarized_size": len(polarized),
        "polarized_is_groebner": is_gb,
        "polarized_leads_span_lead_ideal": [g.exps for g in L_pol.generators]
        == [g.exps for g in L_true.generators],
        "polarized_lead_ideal": [str(g) for g in L_pol.generators],
        "witness": None if witness is None else {
            "f": format_polynomial(polarized[witness[0]]),
            "g": format_polynomial(polarized[witness[1]]),
            "s_poly_normal_form": format_polynomial(witness[2]),
        },
    }
    return rep


def cmd_polarize(poly: Polynomial, m: int, k=None) -> ExperimentReport:
    rep = ExperimentReport(f"polarize/m{m}", {"poly": format_polynomial(poly), "m": m,
                                              "k": None if k is None else list(k)})
    if k is not None:
        out = {",".join(map(str, k)): format_polynomial(pol_k(poly, k))}
    else:
        from .polarize import polarize_full
        fam = polarize_full(poly, m)
        out = {",".join(map(str, kk)): format_polynomial(fam.pols[kk])
               for kk in sorted(fam.pols, reverse=True)}
    rep.details = {"polarizations": out}
    return rep


def cmd_gb(polys: list[Polynomial], order: MonomialOrder = MonomialOrder.A) -> ExperimentReport:
    n, m = polys[0].dims
    rep = ExperimentReport(f"gb/{order.value}", {
        "n": n, "m": m, "order": order.value, "gens": [format_polynomial(p) for p in polys]})
    with _timed(rep, "buchberger"):
        GB = buchberger(polys, order)
    L = lead_ideal(GB)
    st = staircase(L)
    rep.lead_ideal = [str(g) for g in L.generators]
    rep.top_degree = st.top_degree if st.finite else None
    rep.details = {"basis": [format_polynomial(g, order) for g in GB.basis],
                   "finite_quotient": st.finite,
                   "quotient_dimension": st.size if st.finite else None}
    return rep


__all__ = [
    "ExperimentReport", "cmd_snlead", "cmd_lemma_sweep", "cmd_modular_search", "cmd_bound_check",
    "cmd_polarized_gb_test", "cmd_polarize", "cmd_gb", "compare_generating_sets",
    "DEFAULT_GROUP_CAP",
]
