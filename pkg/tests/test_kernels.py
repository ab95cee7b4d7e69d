from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polarinv import kernels
from polarinv import _kernels_py as pure
from polarinv.polarize import _lead_exponents_by_column, compositions

try:
    from polarinv import _kernels as compiled
except ImportError:
    compiled = None

needs_ext = pytest.mark.skipif(compiled is None, reason="compiled extension not built")

exps = st.lists(st.integers(0, 4), min_size=4, max_size=4).map(tuple)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_kernels_examples():
    assert pure.mono_mul((1, 0, 2), (0, 3, 1)) == (1, 3, 3)
    assert pure.mono_div((1, 3, 3), (0, 3, 1)) == (1, 0, 2)
    assert pure.mono_lcm((2, 0, 1), (1, 1, 1)) == (2, 1, 1)
    assert pure.divides((1, 0, 1), (2, 0, 1))
    assert not pure.divides((1, 1, 0), (2, 0, 1))
    assert pure.find_divisor((2, 2), [(3, 0), (1, 1), (0, 1)]) == 1
    assert pure.find_divisor((2, 0), [(0, 1)]) == -1


def test_axpy_shift_example():
    f = {(1, 0): 2, (0, 1): 1}
    g = {(0, 0): 1}
    # 3*f - 2*x*g = 6x + 3y - 2x
    assert pure.axpy_shift(f, 3, 2, (1, 0), g, 0) == {(1, 0): 4, (0, 1): 3}
    assert pure.axpy_shift(f, 1, 2, (1, 0), g, 0) == {(0, 1): 1}
    assert pure.axpy_shift(f, 1, 1, (0, 0), {(1, 0): 2}, 5) == {(0, 1): 1}


def test_lead_exponents_example():
    # a = (2, 1), k = (1, 2): first row takes what it can from each column
    assert pure.lead_exponents((2, 1), (1, 2)) == (1, 1, 0, 1)


@pytest.mark.parametrize("a,k", [((a0, a1, a2), k)
                                 for d in range(5) for (a0, a1, a2) in compositions(d, 3)
                                 for k in compositions(d, 2)])
def test_row_and_column_fill_agree(a, k):
    assert pure.lead_exponents(a, k) == _lead_exponents_by_column(a, k)


@needs_ext
@given(exps, exps)
def test_backends_agree_on_monomials(a, b):
    assert compiled.mono_mul(a, b) == pure.mono_mul(a, b)
    assert compiled.mono_lcm(a, b) == pure.mono_lcm(a, b)
    assert compiled.divides(a, b) == pure.divides(a, b)
    if pure.divides(b, a):
        assert compiled.mono_div(a, b) == pure.mono_div(a, b)
    leads = [b, (1, 0, 0, 0), (0, 0, 0, 2)]
    assert compiled.find_divisor(a, leads) == pure.find_divisor(a, leads)


@needs_ext
@given(st.dictionaries(exps, st.integers(-9, 9), max_size=5),
       st.dictionaries(exps, st.integers(-9, 9), max_size=5),
       st.integers(-4, 4), st.integers(-4, 4), exps, st.sampled_from([0, 5]))
def test_backends_agree_on_axpy(f, g, alpha, beta, shift, p):
    f = {e: v for e, v in f.items() if v}
    g = {e: v for e, v in g.items() if v}
    if p:
        f = {e: v % p for e, v in f.items() if v % p}
        g = {e: v % p for e, v in g.items() if v % p}
    assert compiled.axpy_shift(f, alpha, beta, shift, g, p) == \
        pure.axpy_shift(f, alpha, beta, shift, g, p)


@needs_ext
def test_backends_agree_on_rationals():
    f = {(1, 0): Fraction(1, 2)}
    g = {(0, 0): Fraction(1, 3)}
    assert compiled.axpy_shift(f, 1, Fraction(3, 2), (1, 0), g, 0) == {}


@needs_ext
@pytest.mark.parametrize("n,m,d", [(3, 2, 4), (2, 3, 5), (4, 3, 4)])
def test_backends_agree_on_lead_exponents(n, m, d):
    for a in compositions(d, n):
        for k in compositions(d, m):
            assert compiled.lead_exponents(a, k) == pure.lead_exponents(a, k)
