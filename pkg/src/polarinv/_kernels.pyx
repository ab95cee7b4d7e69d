# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_kernels_py``."""


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long>a[i] + <long>b[i] for i in range(n)])


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long>a[i] - <long>b[i] for i in range(n)])


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = a[i]
        y = b[i]
        out.append(x if x > y else y)
    return tuple(out)


def divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def find_divisor(tuple mono, list leads):
    cdef Py_ssize_t idx, i, n = len(mono), nl = len(leads)
    cdef long buf[256]
    cdef tuple lead
    cdef bint ok
    if n > 256:
        raise ValueError("too many variables for compiled kernel")
    for i in range(n):
        buf[i] = mono[i]
    for idx in range(nl):
        lead = <tuple>leads[idx]
        ok = True
        for i in range(n):
            if <long>lead[i] > buf[i]:
                ok = False
                break
        if ok:
            return idx
    return -1


def lead_exponents(tuple a, tuple k):
    cdef Py_ssize_t n = len(a), m = len(k), i, j
    cdef long col_left[256]
    cdef long row_left, b
    if m > 256:
        raise ValueError("too many copies for compiled kernel")
    for j in range(m):
        col_left[j] = k[j]
    out = []
    for i in range(n):
        row_left = a[i]
        for j in range(m):
            b = col_left[j] if col_left[j] < row_left else row_left
            out.append(b)
            col_left[j] -= b
            row_left -= b
    return tuple(out)


def axpy_shift(dict f, alpha, beta, tuple shift, dict g, long p):
    cdef dict out
    cdef tuple mono, key
    cdef Py_ssize_t i, n = len(shift)
    if alpha == 1:
        out = dict(f)
    elif p:
        out = {mono: c * alpha % p for mono, c in f.items()}
    else:
        out = {mono: c * alpha for mono, c in f.items()}
    for mono, c in g.items():
        key = tuple([<long>mono[i] + <long>shift[i] for i in range(n)])
        v = out.get(key, 0) - beta * c
        if p:
            v = v % p
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out
