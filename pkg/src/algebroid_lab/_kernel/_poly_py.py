"""Pure-Python term-arithmetic kernel.

A sparse polynomial is a dict mapping exponent tuples to nonzero Fractions;
a sparse module element maps (position, exponent tuple) keys instead.  The
compiled twin in _poly_cy.pyx implements the same functions with identical
semantics; callers pick one via the package __init__.
"""

BACKEND = "python"


def terms_add(a, b):
    out = dict(a)
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


def terms_sub(a, b):
    out = dict(a)
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


def terms_neg(a):
    return {k: -c for k, c in a.items()}


def terms_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def terms_mul(a, b):
    # sparse convolution; exponent tuples add componentwise
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
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


def axpy(acc, g, shift, c):
    """In place: acc += c * x^shift * g, over scalar (exponent-tuple) keys."""
    for k, v in g.items():
        key = tuple(x + y for x, y in zip(k, shift))
        s = acc.get(key)
        if s is None:
            acc[key] = c * v
        else:
            s = s + c * v
            if s:
                acc[key] = s
            else:
                del acc[key]


def vaxpy(acc, g, shift, c):
    """In place: acc += c * x^shift * g, over (position, exponent-tuple) keys."""
    for (pos, k), v in g.items():
        key = (pos, tuple(x + y for x, y in zip(k, shift)))
        s = acc.get(key)
        if s is None:
            acc[key] = c * v
        else:
            s = s + c * v
            if s:
                acc[key] = s
            else:
                del acc[key]
