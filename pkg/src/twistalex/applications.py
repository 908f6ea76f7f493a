"""Consequences of the normalized invariant: Conway polynomial, a fibering
obstruction and genus lower bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra.laurent import HalfLaurent
from .algebra.ratfunc import RationalFunction
from .algebra.rings import QQ
from .errors import TwistalexError, ZeroInvariantError
from .presentation import Presentation
from .twisted import NormalizedInvariant, Representation, normalized_invariant

__all__ = ['ConwayPolynomial', 'alexander_polynomial', 'conway_polynomial',
           'FiberingReport', 'fibered_check', 'free_genus_lower_bound', 'genus_lower_bound']


def _z_power(m: int) -> HalfLaurent:
    z = HalfLaurent(QQ, {1: 1, -1: -1})
    return z ** m


@dataclass(frozen=True)
class ConwayPolynomial:
    """Integer polynomial in z, ``coeffs[i]`` the coefficient of z^i."""

    coeffs: tuple

    def __call__(self, z):
        return sum(c * z ** i for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coeff(self) -> int:
        return self.coeffs[-1]

    def to_laurent(self) -> HalfLaurent:
        """Substitute z = t^(1/2) - t^(-1/2)."""
        out = HalfLaurent.zero(QQ)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + _z_power(i).scale(QQ.coerce(c))
        return out

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = '' if i == 0 else ('z' if i == 1 else f'z^{i}')
            mag = abs(c)
            body = mono if mono and mag == 1 else (f'{mag}*{mono}' if mono else str(mag))
            parts.append((c < 0, body))
        if not parts:
            return '0'
        out = ('-' if parts[0][0] else '') + parts[0][1]
        for neg, body in parts[1:]:
            out += (' - ' if neg else ' + ') + body
        return out


def alexander_polynomial(P: Presentation) -> HalfLaurent:
    """(t^(1/2) - t^(-1/2)) times the invariant of the trivial 1-dim representation.

    This is the symmetric Alexander polynomial with f(1) = 1.
    """
    inv = normalized_invariant(P, Representation.trivial(QQ))
    if inv.is_zero():
        raise ZeroInvariantError('the invariant vanishes; H_1 is not that of a knot')
    f = inv.value * RationalFunction(_z_power(1))
    if not f.is_polynomial():
        raise TwistalexError(f'expected a Laurent polynomial, got {f}')
    f = f.as_laurent()
    if f.evaluate_exact(QQ.one) != 1:
        raise TwistalexError(f'Alexander polynomial {f} does not take the value 1 at t = 1')
    if f.top + f.bottom != 0:
        raise TwistalexError(f'Alexander polynomial {f} is not symmetric')
    return f


def conway_polynomial(P: Presentation) -> ConwayPolynomial:
    """Rewrite the symmetric Alexander polynomial in z = t^(1/2) - t^(-1/2)."""
    f = alexander_polynomial(P)
    coeffs = {}
    while not f.is_zero():
        m = f.top               # leading s-exponent equals the z-degree
        c = f.leading_coeff()
        coeffs[m] = c
        f = f - _z_power(m).scale(c)
    out = [0] * (max(coeffs, default=0) + 1)
    for m, c in coeffs.items():
        if c.denominator != 1:
            raise TwistalexError(f'non-integral Conway coefficient {c}')
        out[m] = int(c)
    return ConwayPolynomial(tuple(out))


def _invariant(P, rho, invariant):
    inv = invariant if invariant is not None else normalized_invariant(P, rho)
    if inv.is_zero():
        raise ZeroInvariantError('the invariant is zero; degree data is undefined')
    return inv


@dataclass(frozen=True)
class FiberingReport:
    genus: int
    n: int
    deg: Fraction
    hdeg: Fraction
    c: object
    eps: object
    eps_power: Fraction
    conway_c: int
    expected: int
    deg_ok: bool
    hdeg_ok: bool
    coeff_ok: bool
    # c(value) against c(nabla)^n eps^(2g-1), leaving out the formal eps power
    coeff_ok_value: bool

    @property
    def consistent(self) -> bool:
        return self.deg_ok and self.hdeg_ok and self.coeff_ok

    def verdict(self) -> str:
        if not self.deg_ok:
            return f'fibered: NO (deg {self.deg} != {self.expected})'
        if not self.hdeg_ok:
            return f'fibered: NO (2*hdeg {2 * self.hdeg} != {self.expected})'
        if not self.coeff_ok:
            return 'fibered: NO (leading coefficient mismatch)'
        return 'fibered: consistent'


def _formal_match(ring, c, eps, power, target):
    """Decide c * eps^power == target with eps^(1/2) kept formal."""
    if ring.eq(eps, ring.one):
        return ring.eq(c, target)
    if power.denominator != 1:
        return False
    return ring.eq(ring.mul(c, ring.pow(ring.coerce(eps), int(power))), target)


def fibered_check(P: Presentation, rho: Representation, genus: int,
                  invariant: NormalizedInvariant | None = None) -> FiberingReport:
    """Necessary conditions for a fibered knot of the given genus.

    Any false flag proves the knot is not fibered (or has another genus).
    """
    if genus < 1:
        raise ValueError('genus must be at least 1')
    inv = _invariant(P, rho, invariant)
    deg, hdeg, _, c = inv.degrees()
    n = inv.n
    ring = inv.ring
    expected = n * (2 * genus - 1)
    conway_c = conway_polynomial(P).leading_coeff
    target = ring.coerce(conway_c ** n)
    half = Fraction(2 * genus - 1, 2)
    return FiberingReport(
        genus=genus, n=n, deg=deg, hdeg=hdeg, c=c, eps=inv.eps, eps_power=inv.eps_power,
        conway_c=conway_c, expected=expected,
        deg_ok=deg == expected,
        hdeg_ok=2 * hdeg == expected,
        coeff_ok=_formal_match(ring, c, inv.eps, inv.eps_power - half, target),
        coeff_ok_value=_formal_match(ring, c, inv.eps, Fraction(1 - 2 * genus), target),
    )


def free_genus_lower_bound(P: Presentation, rho: Representation,
                           invariant: NormalizedInvariant | None = None) -> int:
    """Smallest g >= 0 with 2 hdeg <= n (2g - 1)."""
    inv = _invariant(P, rho, invariant)
    hdeg = inv.degrees().hdeg
    return max(0, math.ceil(hdeg / inv.n + Fraction(1, 2)))


def genus_lower_bound(P: Presentation, rho: Representation,
                      invariant: NormalizedInvariant | None = None) -> int:
    """Smallest g >= 0 with deg <= n (2g - 1)."""
    inv = _invariant(P, rho, invariant)
    deg = inv.degrees().deg
    return max(0, math.ceil((deg / inv.n + 1) / 2))
