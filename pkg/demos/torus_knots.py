"""
Torus knots and SU(2) representations
=====================================

Compare the computed invariant with the closed form on a ring of sample
points, then check duality for the same unitary representations.
"""

import cmath

import numpy as np

from twistalex import knots
from twistalex.twisted import conjugate_invariant, dagger, normalized_invariant

# sample t^(1/2) slightly off the unit circle
z = 1.1 * np.exp(2j * np.pi * (np.arange(16) + 0.25) / 16)

for p, q in [(2, 3), (2, 5), (3, 4)]:
    P = knots.torus_knot(p, q)
    for a, b in knots.admissible_torus_pairs(p, q):
        rho = knots.torus_su2_rep(p, q, a, b, 0.3)
        inv = normalized_invariant(P, rho)
        closed = knots.torus_closed_form(p, q, a, b)
        err = max(abs(inv.value.evaluate(s) - closed(s)) for s in z)

        # the dual representation gives the conjugate (n = 2, so no sign)
        dual = normalized_invariant(P, dagger(rho, P))
        ok = dual.isclose(conjugate_invariant(inv), tol=1e-9)
        print(f'T({p},{q}) a={a} b={b}: max err {err:.1e}, duality {ok}')

# one value by hand: the trefoil with the first admissible pair
rho = knots.torus_su2_rep(2, 3, 1, 1, 0.5)
print(normalized_invariant(knots.torus_knot(2, 3), rho))
print(knots.torus_closed_form(2, 3, 1, 1)(cmath.sqrt(2)))
