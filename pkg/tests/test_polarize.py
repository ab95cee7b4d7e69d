from math import comb

import pytest
import sympy

from polarinv.fields import GF, QQ, FieldError
from polarinv.polarize import (compositions, fast_lead, pol_k, polarizations,
                               theorem_family, theorem_family_size)
from polarinv.polyring import DimensionError, Monomial, MonomialOrder, parse_polynomial

A, B = MonomialOrder.A, MonomialOrder.B


def P(text, n, m=1, field=QQ):
    return parse_polynomial(text, n, m, field)


def sympy_pol(f, k):
    """Coefficient of t^k after x_i -> sum_j x_i_j t_j, expanded by sympy."""
    m = len(k)
    ts = sympy.symbols(" ".join(f"t{j}" for j in range(1, m + 1)), seq=True)
    sub = {sympy.Symbol(f"x{i}"): sum(sympy.Symbol(f"x{i}_{j + 1}") * ts[j] for j in range(m))
           for i in range(1, f.n + 1)}
    expr = sympy.sympify(str(f).replace("^", "**")).subs(sub, simultaneous=True)
    poly = sympy.Poly(sympy.expand(expr), *ts)
    return sympy.expand(poly.coeff_monomial(tuple(k)))


def as_sympy(q):
    return sympy.expand(sympy.sympify(str(q).replace("^", "**")))


def test_pol_examples():
    assert pol_k(P("x2^2", 2), (1, 1)) == P("2*x2_1*x2_2", 2, 2)
    assert pol_k(P("x1^2*x2", 2), (2, 1)) == P("x1_1^2*x2_2 + 2*x1_1*x1_2*x2_1", 2, 2)
    assert pol_k(P("x1^2", 2), (1, 0)).is_zero()


@pytest.mark.parametrize("text", ["x1^2*x2", "x1*x2*x3 + 2*x3^3", "x1^3 - 1/2*x2^2*x3"])
@pytest.mark.parametrize("m", [2, 3])
def test_pol_against_sympy(text, m):
    f = P(text, 3)
    for d in range(1, 4):
        for k in compositions(d, m):
            assert as_sympy(pol_k(f, k)) == sympy_pol(f, k)


def test_polarization_requires_single_copy():
    with pytest.raises(DimensionError):
        pol_k(P("x1_1", 1, 2), (1,))


def test_coefficient_sum_identity():
    # all t_j = 1 and all copies equal: sum over k of Pol_k(M)(1,...,1) = m^deg M
    M = P("x1^2*x2*x3^2", 3)
    for m in (1, 2, 3):
        total = sum(sum(q.terms.values()) for q in polarizations(M, m))
        assert total == m ** 5


def test_fast_lead_examples():
    M = Monomial((2, 1), 2, 1)
    mono, c = fast_lead(M, (1, 2))
    assert str(mono) == "x1_1*x1_2*x2_2" and c == 2
    mono, c = fast_lead(M, (3, 0))
    assert str(mono) == "x1_1^2*x2_1" and c == 1


def test_fast_lead_errors():
    M = Monomial((2, 1), 2, 1)
    with pytest.raises(ValueError):
        fast_lead(M, (1, 1))
    with pytest.raises(FieldError):
        fast_lead(Monomial((5, 0), 2, 1), (3, 2), field=GF(5))
    with pytest.raises(DimensionError):
        fast_lead(Monomial((1, 0), 1, 2), (1,))


@pytest.mark.parametrize("order", [A, B])
def test_fast_lead_matches_expansion(order):
    for d in range(5):
        for a in compositions(d, 3):
            M = Monomial(a, 3, 1)
            for k in compositions(d, 2):
                lm, lc = pol_k(P(str(M), 3), k).lead(order)
                assert fast_lead(M, k, order) == (lm, lc)


def test_fast_lead_fill_orders():
    for a in compositions(4, 3):
        for k in compositions(4, 3):
            M = Monomial(a, 3, 1)
            assert fast_lead(M, k, fill="row") == fast_lead(M, k, fill="column")


def test_fast_lead_over_f5_below_p():
    F = GF(5)
    for a in compositions(4, 2):
        M = Monomial(a, 2, 1)
        for k in compositions(4, 2):
            mono, c = fast_lead(M, k, field=F)
            lm, lc = pol_k(parse_polynomial(str(M), 2, 1, F), k).lead()
            assert (mono, c) == (lm, lc) and c != 0


def test_high_exponent_can_vanish_mod_p():
    # Pol_(1,1)(x1^2) = 2*x1_1*x1_2 is zero over GF(2)
    assert pol_k(parse_polynomial("x1^2", 1, 1, GF(2)), (1, 1)).is_zero()


def test_theorem_family():
    fam = theorem_family(2, 2)
    assert {str(M) for M in fam} == {"x1_1", "x1_2", "x2_1^2", "x2_1*x2_2", "x2_2^2"}
    for n in (1, 2, 3, 4):
        for m in (1, 2, 3):
            assert len(theorem_family(n, m)) == theorem_family_size(n, m)
            assert theorem_family_size(n, m) == sum(comb(i + m - 1, m - 1)
                                                    for i in range(1, n + 1))
