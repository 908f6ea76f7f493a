"""
Invariance under Tietze moves
=============================

Scramble a presentation with random moves and recompute.  The presentation
grows but the normalized invariant should not move.
"""

from twistalex import knots
from twistalex.presentation import format_presentation, random_tietze_sequence
from twistalex.twisted import normalized_invariant

P = knots.figure_eight_pd()
rho = knots.dihedral_rep(P, 5, [0, 1, 2, 3])
base = normalized_invariant(P, rho)
print('figure-eight, dihedral over F5:', base)

moves = []
Q = random_tietze_sequence(P, 40, seed=4, transcript=moves)
print(len(moves), 'moves, first few:', moves[:5])
print(f'{Q.m} generators, longest relator {max(len(r) for r in Q.relators)}')

print('after moves:', normalized_invariant(Q, rho))
print('equal:', normalized_invariant(Q, rho) == base)

# every usable column gives the same answer too
for k in range(1, Q.m + 1):
    if Q.alpha[k - 1]:
        assert normalized_invariant(Q, rho, k) == base

print(format_presentation(P))
