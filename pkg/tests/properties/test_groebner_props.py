"""Reduced-basis uniqueness and normal-form idempotence."""
from hypothesis import given, strategies as st

from polarinv.groebner import buchberger, ideal_membership, normal_form
from polarinv.polyring import MonomialOrder

from tests._strategies import poly_strategy

N, M = 3, 1
gens_strategy = st.lists(poly_strategy(N, M, max_terms=3, max_exp=2), min_size=1, max_size=3) \
    .filter(lambda gs: any(not g.is_zero() for g in gs))


@given(gens_strategy, st.randoms(use_true_random=False), st.sampled_from(list(MonomialOrder)))
def test_reduced_basis_independent_of_input_order(gens, rnd, order):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert buchberger(gens, order).basis == buchberger(shuffled, order).basis


@given(gens_strategy)
def test_inputs_lie_in_their_basis(gens):
    GB = buchberger(gens)
    assert all(ideal_membership(g, GB) for g in gens)


@given(gens_strategy, poly_strategy(N, M, max_terms=5))
def test_normal_form_idempotent(gens, f):
    divisors = [g for g in gens if not g.is_zero()]
    r = normal_form(f, divisors)
    assert normal_form(r, divisors) == r


@given(gens_strategy, poly_strategy(N, M, max_terms=5))
def test_remainder_has_no_divisible_term(gens, f):
    GB = buchberger(gens)
    r = GB.normal_form(f)
    leads = GB.leads()
    assert not any(L.divides(t) for t in r.monomials() for L in leads)
    assert ideal_membership(f - r, GB)
