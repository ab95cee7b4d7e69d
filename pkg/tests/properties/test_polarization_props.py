"""Multihomogeneity and permutation equivariance of Pol_k."""
from hypothesis import given, strategies as st

from polarinv.permaction import act, all_permutations
from polarinv.polarize import compositions, pol_k

from tests._strategies import poly_strategy

N = 3
perm = st.sampled_from(all_permutations(N))
ks = st.integers(1, 3).flatmap(
    lambda m: st.integers(0, 4).flatmap(lambda d: st.sampled_from(list(compositions(d, m)))))


@given(poly_strategy(N, 1, max_exp=2), ks)
def test_multihomogeneous(f, k):
    q = pol_k(f, k)
    for mono in q.monomials():
        assert tuple(mono.copy_degree(j) for j in range(1, len(k) + 1)) == k


@given(poly_strategy(N, 1, max_exp=2), ks, perm)
def test_equivariant(f, k, sigma):
    assert pol_k(act(sigma, f), k) == act(sigma, pol_k(f, k))
