"""Dense univariate polynomial kernels.

Polynomials are lists of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  All functions take the coefficient
ring as first argument.
"""

from __future__ import annotations

from math import gcd

from ..errors import NotAUnitError


def trim(ring, a):
    while a and ring.is_zero(a[-1]):
        a.pop()
    return a


def add(ring, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ring.add(out[i], c)
    return trim(ring, out)


def sub(ring, a, b):
    n = max(len(a), len(b))
    z = ring.zero
    out = [ring.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]
    return trim(ring, out)


def mul(ring, a, b):
    if not a or not b:
        return []
    radd, rmul = ring.add, ring.mul
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ring.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = radd(out[i + j], rmul(x, y))
    return trim(ring, out)


def scale(ring, a, c):
    return trim(ring, [ring.mul(x, c) for x in a])


def div_exact(ring, a, b):
    """Quotient of ``a`` by ``b`` when ``b`` divides ``a`` in R[x].

    Works over any integral domain whose ``div_exact`` can divide by the
    leading coefficient of ``b`` whenever the polynomial quotient exists.
    """
    if not b:
        raise NotAUnitError('polynomial division by zero')
    if not a:
        return []
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [ring.zero] * (len(a) - db) if len(a) > db else []
    for i in range(len(a) - 1 - db, -1, -1):
        c = rem[i + db]
        if ring.is_zero(c):
            continue
        qc = ring.div_exact(c, lead)
        q[i] = qc
        for j, y in enumerate(b):
            rem[i + j] = ring.sub(rem[i + j], ring.mul(qc, y))
    if trim(ring, rem[:db] if db else []) and ring.is_exact:
        raise NotAUnitError('inexact polynomial division')
    return trim(ring, q)


def divmod_field(ring, a, b):
    if not b:
        raise NotAUnitError('polynomial division by zero')
    rem = list(a)
    db = len(b) - 1
    inv_lead = ring.inv(b[-1])
    if len(a) <= db:
        return [], trim(ring, rem)
    q = [ring.zero] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = rem[i + db]
        if ring.is_zero(c):
            continue
        qc = ring.mul(c, inv_lead)
        q[i] = qc
        for j, y in enumerate(b):
            rem[i + j] = ring.sub(rem[i + j], ring.mul(qc, y))
    return trim(ring, q), trim(ring, rem[:db])


def monic(ring, a):
    if not a:
        return a
    return scale(ring, a, ring.inv(a[-1]))


def gcd_field(ring, a, b):
    """Monic gcd over a field (Euclid)."""
    a, b = trim(ring, list(a)), trim(ring, list(b))
    while b:
        _, r = divmod_field(ring, a, b)
        a, b = b, r
    return monic(ring, a)


def from_laurent(coeffs, shift=None, step=1):
    """Pack ``{e: c}`` into a dense list in ``u = s^step`` after dividing by
    ``s^shift``; returns ``(dense, shift)``."""
    if not coeffs:
        return [], 0
    if shift is None:
        shift = min(coeffs)
    size = (max(coeffs) - shift) // step + 1
    out = [None] * size
    for e, c in coeffs.items():
        out[(e - shift) // step] = c
    return out, shift


def fill(ring, dense):
    return [ring.zero if c is None else c for c in dense]


def to_laurent(ring, dense, shift=0, step=1):
    return {shift + i * step: c for i, c in enumerate(dense) if not ring.is_zero(c)}


def exponent_step(exponents):
    """gcd of a collection of nonnegative exponents (0 if all are 0)."""
    g = 0
    for e in exponents:
        g = gcd(g, e)
    return g
