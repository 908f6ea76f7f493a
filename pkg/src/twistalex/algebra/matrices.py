"""Small dense matrices over a coefficient ring, as tuples of tuples."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotAUnitError
from .rings import QQ, Integers


def identity(ring, n):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n))


def coerce(ring, rows):
    return tuple(tuple(ring.coerce(x) for x in row) for row in rows)


def mul(ring, a, b):
    radd, rmul, z = ring.add, ring.mul, ring.zero
    bt = tuple(zip(*b))
    out = []
    for row in a:
        new = []
        for col in bt:
            acc = z
            for x, y in zip(row, col):
                acc = radd(acc, rmul(x, y))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def equal(ring, a, b):
    return all(ring.eq(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_identity(ring, a):
    return equal(ring, a, identity(ring, len(a)))


def conj_transpose(ring, a):
    return tuple(tuple(ring.conj(x) for x in col) for col in zip(*a))


def transpose(a):
    return tuple(zip(*a))


def _gauss_jordan(ring, a, rhs):
    n = len(a)
    m = [list(r) + list(s) for r, s in zip(a, rhs)]
    for k in range(n):
        if ring.is_exact:
            p = next((i for i in range(k, n) if not ring.is_zero(m[i][k])), None)
        else:
            p = max(range(k, n), key=lambda i: abs(m[i][k]))
            if ring.is_zero(m[p][k]):
                p = None
        if p is None:
            raise NotAUnitError('singular matrix')
        m[k], m[p] = m[p], m[k]
        inv = ring.inv(m[k][k])
        m[k] = [ring.mul(x, inv) for x in m[k]]
        for i in range(n):
            if i != k and not ring.is_zero(m[i][k]):
                f = m[i][k]
                m[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(m[i], m[k])]
    return tuple(tuple(r[n:]) for r in m)


def inverse(ring, a):
    if isinstance(ring, Integers):
        inv = _gauss_jordan(QQ, coerce(QQ, a), identity(QQ, len(a)))
        return tuple(tuple(ring.coerce(Fraction(x)) for x in row) for row in inv)
    return _gauss_jordan(ring, a, identity(ring, len(a)))


def det(ring, a):
    """Determinant by elimination (Bareiss over Z, Gauss over fields)."""
    n = len(a)
    if n == 0:
        return ring.one
    m = [list(r) for r in a]
    sign = 1
    if isinstance(ring, Integers):
        prev = 1
        for k in range(n - 1):
            p = next((i for i in range(k, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            if p != k:
                m[k], m[p] = m[p], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    acc = ring.one
    for k in range(n):
        if ring.is_exact:
            p = next((i for i in range(k, n) if not ring.is_zero(m[i][k])), None)
        else:
            p = max(range(k, n), key=lambda i: abs(m[i][k]))
            if ring.is_zero(m[p][k]):
                p = None
        if p is None:
            return ring.zero
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        acc = ring.mul(acc, m[k][k])
        inv = ring.inv(m[k][k])
        for i in range(k + 1, n):
            f = ring.mul(m[i][k], inv)
            if not ring.is_zero(f):
                m[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(m[i], m[k])]
    return acc if sign == 1 else ring.neg(acc)
