"""Brute-force reference implementations for the test suite.

Nothing here calls the library's arithmetic: coefficients are handled with
plain Python numbers, polynomials with plain dicts, and matrices with
nested lists or numpy, so an agreement is evidence rather than a tautology.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from twistalex.algebra.laurent import HalfLaurent
from twistalex.algebra.rings import ApproxComplex, Integers, PrimeField, Rationals

MAX_COFACTOR = 6


def _scalar_ops(ring):
    if isinstance(ring, PrimeField):
        p = ring.p
        return (lambda a, b: (a + b) % p), (lambda a, b: (a * b) % p), (lambda a: (-a) % p), 0
    if isinstance(ring, (Integers, Rationals)):
        return (lambda a, b: a + b), (lambda a, b: a * b), (lambda a: -a), 0
    if isinstance(ring, ApproxComplex):
        return (lambda a, b: a + b), (lambda a, b: a * b), (lambda a: -a), 0j
    raise TypeError(ring)


def _padd(add, a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = add(out[e], c) if e in out else c
    return out


def _pmul(add, mul, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            v = mul(c1, c2)
            out[e1 + e2] = add(out[e1 + e2], v) if e1 + e2 in out else v
    return out


def det_cofactor(M) -> HalfLaurent:
    """Laplace expansion along the first row; exact for exact rings."""
    n, m = M.shape
    if n != m:
        raise ValueError('square matrix required')
    if n > MAX_COFACTOR:
        raise ValueError(f'cofactor oracle limited to {MAX_COFACTOR}x{MAX_COFACTOR}')
    ring = M.ring
    add, mul, neg, zero = _scalar_ops(ring)
    rows = [[dict(M[i, j].coeffs) for j in range(n)] for i in range(n)]

    def expand(rs, cols):
        if not rs:
            return {0: ring.one}
        total = {}
        for pos, c in enumerate(cols):
            entry = rs[0][c]
            if not entry:
                continue
            minor = expand(rs[1:], cols[:pos] + cols[pos + 1:])
            term = _pmul(add, mul, entry, minor)
            if pos % 2:
                term = {e: neg(v) for e, v in term.items()}
            total = _padd(add, total, term)
        return total

    return HalfLaurent(ring, expand(rows, list(range(n))))


def evaluate_laurent(p: HalfLaurent, z: complex) -> complex:
    return sum(complex(c) * z ** e for e, c in p.coeffs.items())


def sample_points(count, r_lo=1.05, r_hi=1.2):
    """Points z = t^(1/2) off the unit circle (closed forms have poles on it)."""
    out = []
    for j in range(count):
        r = r_lo + (r_hi - r_lo) * j / max(count - 1, 1)
        out.append(r * cmath.exp(1j * (0.1 + 2 * math.pi * j * 0.618034)))
    return out


def eval_compare(f, g, samples=16, pole_tol=1e-12) -> float:
    """max |f(z) - g(z)| over sample points, evaluating ``f = num/den`` at t^(1/2) = z."""
    worst = 0.0
    for z in sample_points(samples):
        d = evaluate_laurent(f.den, z)
        if abs(d) < pole_tol:
            raise ZeroDivisionError(f'sample point {z} hits a pole')
        worst = max(worst, abs(evaluate_laurent(f.num, z) / d - g(z)))
    return worst


def fox_oracle(letters, j):
    """Fox derivative by the product rule, recursing on the first letter.

    Returns ``{tuple of letters (unreduced then reduced): coeff}``.
    """
    def reduce(ls):
        out = []
        for x in ls:
            if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    if not letters:
        return {}
    (g, e), rest = letters[0], letters[1:]
    head = {}
    if g == j:
        head = {(): 1} if e == 1 else {((g, -1),): -1}
    tail = fox_oracle(rest, j)
    out = dict(head)
    for w, c in tail.items():
        key = reduce(((g, e),) + w)
        out[key] = out.get(key, 0) + c
    return {w: c for w, c in out.items() if c}


def phi_numeric(P, images, t, word_letters):
    """t^alpha(w) * rho(w) with numpy matrices; ``images`` lists numpy arrays per generator."""
    n = images[0].shape[0]
    out = np.eye(n, dtype=complex)
    a = 0
    for g, e in word_letters:
        out = out @ (images[g] if e > 0 else np.linalg.inv(images[g]))
        a += e * P.alpha[g]
    return t ** a * out


def jacobian_numeric(P, images, t, k):
    """A_{Phi,k} at a complex t, via the recursive Fox oracle."""
    n = images[0].shape[0]
    cols = [j for j in range(P.m) if j != k - 1]
    A = np.zeros(((P.m - 1) * n, len(cols) * n), dtype=complex)
    for i, r in enumerate(P.relators):
        for jj, j in enumerate(cols):
            blk = np.zeros((n, n), dtype=complex)
            for w, c in fox_oracle(tuple(r.letters), j).items():
                blk += c * phi_numeric(P, images, t, w)
            A[i * n:(i + 1) * n, jj * n:(jj + 1) * n] = blk
    return A
