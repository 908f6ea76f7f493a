"""A few standard knots and representations used by the tests and demos."""

from __future__ import annotations

import cmath
import math

from .algebra.rings import CC, ZZ, ApproxComplex, PrimeField, QQ
from .freegroup import Word
from .presentation import PDCode, Presentation, wirtinger_from_pd
from .twisted import Representation

__all__ = ['unknot', 'torus_knot', 'torus_su2_rep', 'torus_closed_form', 'trefoil_pd',
           'figure_eight_pd', 'PD_CODES', 'knot_11n73', 'rep_11n73', 'dihedral_rep',
           'admissible_torus_pairs']

PD_CODES = {
    '3_1': [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)],
    '4_1': [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
    '5_1': [(1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)],
    '5_2': [(1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7), (7, 2, 8, 3)],
}


def unknot() -> Presentation:
    return Presentation(('x',), (), Word.gen(0))


def trefoil_pd() -> Presentation:
    return wirtinger_from_pd(PDCode(PD_CODES['3_1']))


def figure_eight_pd() -> Presentation:
    return wirtinger_from_pd(PDCode(PD_CODES['4_1']))


def torus_knot(p: int, q: int) -> Presentation:
    """<x, y | x^p y^-q> with meridian x^u y^v, u q + v p = 1."""
    if math.gcd(p, q) != 1 or p < 2 or q < 2:
        raise ValueError('need coprime p, q >= 2')
    # solve u q + v p = 1
    for u in range(-p, p + 1):
        if (1 - u * q) % p == 0:
            v = (1 - u * q) // p
            break
    x, y = Word.gen(0), Word.gen(1)
    return Presentation(('x', 'y'), (x ** p * y ** -q,), x ** u * y ** v)


def admissible_torus_pairs(p: int, q: int):
    return [(a, b) for a in range(1, p) for b in range(1, q) if (a - b) % 2 == 0]


def torus_su2_rep(p: int, q: int, a: int, b: int, s: float, ring: ApproxComplex = CC) -> Representation:
    """x -> diag(e^{i a pi/p}, e^{-i a pi/p}); y -> a conjugate of
    diag(e^{i b pi/q}, e^{-i b pi/q}) tilted by the angle pi*s.  Both images
    have x^p = y^q = (-1)^a, so the relator holds when a = b mod 2."""
    th, ph, sg = a * math.pi / p, b * math.pi / q, math.pi * s
    X = [[cmath.exp(1j * th), 0], [0, cmath.exp(-1j * th)]]
    Y = [[complex(math.cos(ph), math.sin(ph) * math.cos(sg)), math.sin(ph) * math.sin(sg)],
         [-math.sin(ph) * math.sin(sg), complex(math.cos(ph), -math.sin(ph) * math.cos(sg))]]
    return Representation(ring, (('x', X), ('y', Y)))


def torus_closed_form(p: int, q: int, a: int, b: int):
    """Closed-form normalized invariant of ``torus_su2_rep`` as a function of z = t^(1/2)."""
    ca, cb = 2 * math.cos(a * math.pi / p), 2 * math.cos(b * math.pi / q)
    sign = (-1) ** a

    def f(z):
        num = (z ** (p * q) - sign * z ** (-p * q)) ** 2
        return num / ((z ** (2 * p) - cb + z ** (-2 * p)) * (z ** (2 * q) - ca + z ** (-2 * q)))
    return f


_11N73 = [
    'x5 x1 x5^-1 x2^-1', 'x11 x2 x11^-1 x3^-1', 'x9 x4 x9^-1 x3^-1', 'x7 x5 x7^-1 x4^-1',
    'x1 x5 x1^-1 x6^-1', 'x8 x7 x8^-1 x6^-1', 'x5 x8 x5^-1 x7^-1', 'x10 x9 x10^-1 x8^-1',
    'x4 x10 x4^-1 x9^-1', 'x2 x10 x2^-1 x11^-1',
]


def knot_11n73() -> Presentation:
    """Wirtinger presentation of 11n73 with one crossing relator dropped."""
    return Presentation.from_strings([f'x{i}' for i in range(1, 12)], _11N73, 'x1')


def rep_11n73() -> Representation:
    """SL(2, F_2) representation of the 11n73 group."""
    A, B, C = [[1, 1], [0, 1]], [[1, 0], [1, 1]], [[0, 1], [1, 0]]
    return Representation(PrimeField(2), (('x4', B), ('x8', B), ('x7', C), ('x9', C)), A)


def dihedral_rep(P: Presentation, p: int, colours, ring=None) -> Representation:
    """Fox p-colouring ``colours`` (one per generator) as x_i -> [[-1, c_i], [0, 1]]."""
    ring = ring or PrimeField(p)
    return Representation(ring, tuple((g, [[-1, c], [0, 1]]) for g, c in zip(P.generators, colours)))
