# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython term-arithmetic kernel; semantics identical to _poly_py."""

BACKEND = "cython"


def terms_add(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def terms_sub(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def terms_neg(dict a):
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def terms_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


cdef inline tuple _tadd(tuple x, tuple y):
    cdef Py_ssize_t i, n = len(x)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = x[i] + y[i]
    return tuple(out)


def terms_mul(dict a, dict b):
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = _tadd(<tuple> ka, <tuple> kb)
            s = out.get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def axpy(dict acc, dict g, tuple shift, c):
    """In place: acc += c * x^shift * g, over scalar (exponent-tuple) keys."""
    for k, v in g.items():
        key = _tadd(<tuple> k, shift)
        s = acc.get(key)
        if s is None:
            acc[key] = c * v
        else:
            s = s + c * v
            if s:
                acc[key] = s
            else:
                del acc[key]


def vaxpy(dict acc, dict g, tuple shift, c):
    """In place: acc += c * x^shift * g, over (position, exponent-tuple) keys."""
    cdef tuple pk
    for pk_obj, v in g.items():
        pk = <tuple> pk_obj
        key = (pk[0], _tadd(<tuple> pk[1], shift))
        s = acc.get(key)
        if s is None:
            acc[key] = c * v
        else:
            s = s + c * v
            if s:
                acc[key] = s
            else:
                del acc[key]
