"""Ring axioms for exact polynomial arithmetic."""
from hypothesis import given

from polarinv.fields import GF
from polarinv.polyring import Polynomial

from tests._strategies import poly_strategy

P = poly_strategy(2, 2)
P5 = poly_strategy(2, 1, GF(5))


@given(P, P, P)
def test_associativity_and_distributivity(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(P, P)
def test_commutativity_and_inverse(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f - f).is_zero()
    assert f * Polynomial.constant(1, 2, 2) == f


@given(P5, P5, P5)
def test_prime_field_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert all(0 < c < 5 for c in (f * g).terms.values())
