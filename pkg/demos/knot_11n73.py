"""
The knot 11n73 over the two-element field
=========================================

A 2-dimensional representation into GL(2, F2) tells more than the Alexander
polynomial: it shows the knot is not fibered and bounds its genus.
"""

from twistalex import knots
from twistalex.applications import (alexander_polynomial, conway_polynomial, fibered_check,
                                    free_genus_lower_bound, genus_lower_bound)
from twistalex.twisted import format_representation, normalized_invariant

K = knots.knot_11n73()
rho = knots.rep_11n73()
print(f'{K.m} generators, {len(K.relators)} relators')
print(format_representation(rho))

# the classical invariant first
print('Alexander:', alexander_polynomial(K))
print('Conway:   ', conway_polynomial(K))

# twisted by rho
inv = normalized_invariant(K, rho)
print('invariant:', inv)
print('column', inv.data.k, 'delta', inv.data.delta, 'd', inv.data.d)

deg, hdeg, ldeg, c = inv.degrees()
print(f'deg {deg}, hdeg {hdeg}, ldeg {ldeg}, leading coefficient {c}')

# a fibered knot of genus 2 would need deg = 2 * (2*2 - 1) = 6
print(fibered_check(K, rho, 2).verdict())
print('free genus >=', free_genus_lower_bound(K, rho))
print('genus >=', genus_lower_bound(K, rho))
