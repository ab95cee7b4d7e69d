"""Pure-Python kernels. ``_kernels.pyx`` mirrors every function here.

Monomials are flat exponent tuples laid out row-major over the (i, j)
grid: index ``(i - 1) * m + (j - 1)`` holds the exponent of x_i^(j).
"""


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple([x - y for x, y in zip(a, b)])


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def divides(a, b):
    """True when monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def find_divisor(mono, leads):
    """Index of the first monomial in ``leads`` dividing ``mono``, else -1."""
    for idx, lead in enumerate(leads):
        for x, y in zip(lead, mono):
            if x > y:
                break
        else:
            return idx
    return -1


def lead_exponents(a, k):
    """Exponent grid of the lex-leading monomial of Pol_k(x^a).

    Fills b[i][j] = min(k_j - sum_{l<i} b[l][j], a_i - sum_{l<j} b[i][l])
    row by row; returns the flat row-major grid.
    """
    m = len(k)
    col_left = list(k)
    out = []
    for ai in a:
        row_left = ai
        for j in range(m):
            b = col_left[j] if col_left[j] < row_left else row_left
            out.append(b)
            col_left[j] -= b
            row_left -= b
    return tuple(out)


def axpy_shift(f, alpha, beta, shift, g, p):
    """Return alpha*f - beta*(x^shift)*g as a new term dict (zeros dropped).

    ``p`` is the field characteristic; 0 means exact integer/rational.
    """
    if alpha == 1:
        out = dict(f)
    elif p:
        out = {mono: c * alpha % p for mono, c in f.items()}
    else:
        out = {mono: c * alpha for mono, c in f.items()}
    for mono, c in g.items():
        key = tuple([x + y for x, y in zip(mono, shift)])
        v = out.get(key, 0) - beta * c
        if p:
            v %= p
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out
