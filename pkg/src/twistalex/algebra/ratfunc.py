"""Reduced quotients of :class:`HalfLaurent` polynomials.

Canonical form over a field: numerator and denominator are coprime, and the
denominator has lowest exponent 0 and leading coefficient 1.  Integer input
is reduced over the rationals.  Over :class:`ApproxComplex` no gcd is
cancelled (a numerically stable approximate gcd is out of reach here); the
denominator is only shifted and made monic, and equality is tested by
cross-multiplication within tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from ..errors import RingMismatchError, ZeroInvariantError
from . import dense
from .laurent import HalfLaurent
from .rings import QQ, Integers

__all__ = ['RationalFunction', 'Degrees', 'rf_reduce', 'degrees']


class Degrees(NamedTuple):
    deg: Fraction
    hdeg: Fraction
    ldeg: Fraction
    c: object


def _field_of(ring):
    return QQ if isinstance(ring, Integers) else ring


def _canonical(num: HalfLaurent, den: HalfLaurent):
    ring = num.ring
    if den.is_zero():
        raise ZeroDivisionError('zero denominator')
    if num.is_zero():
        return HalfLaurent.zero(ring), HalfLaurent.one(ring)
    n0, d0 = num.bottom, den.bottom
    ncoef = {e - n0: c for e, c in num.coeffs.items()}
    dcoef = {e - d0: c for e, c in den.coeffs.items()}
    shift = n0 - d0
    step = dense.exponent_step(list(ncoef) + list(dcoef)) or 1
    N, _ = dense.from_laurent(ncoef, 0, step)
    D, _ = dense.from_laurent(dcoef, 0, step)
    N, D = dense.fill(ring, N), dense.fill(ring, D)
    if ring.is_exact and len(D) > 1 and len(N) > 1:
        g = dense.gcd_field(ring, N, D)
        if len(g) > 1:
            N = dense.div_exact(ring, N, g)
            D = dense.div_exact(ring, D, g)
    elif not ring.is_exact and 1 < len(D) <= len(N):
        # only the case "denominator divides numerator" is detected numerically
        q, r = dense.divmod_field(ring, N, D)
        size = max(abs(c) for c in N)
        if all(abs(c) <= ring.tolerance * size for c in r):
            N, D = q, [ring.one]
    lead_inv = ring.inv(D[-1])
    N = dense.scale(ring, N, lead_inv)
    D = dense.scale(ring, D, lead_inv)
    return (HalfLaurent._raw(ring, dense.to_laurent(ring, N, shift, step)),
            HalfLaurent._raw(ring, dense.to_laurent(ring, D, 0, step)))


class RationalFunction:
    """``num / den`` in canonical form; build with :func:`rf_reduce`."""

    __slots__ = ('num', 'den')

    def __init__(self, num: HalfLaurent, den: HalfLaurent | None = None):
        if den is None:
            den = HalfLaurent.one(num.ring)
        if num.ring != den.ring:
            raise RingMismatchError(f'{num.ring} vs {den.ring}')
        field = _field_of(num.ring)
        if field is not num.ring:
            num, den = num.map_coeffs(field), den.map_coeffs(field)
        self.num, self.den = _canonical(num, den)

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def constant(cls, ring, c):
        return cls(HalfLaurent.constant(ring, c))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return len(self.den.coeffs) == 1

    def as_laurent(self) -> HalfLaurent:
        if not self.is_polynomial():
            raise ValueError(f'{self} is not a Laurent polynomial')
        return self.num

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, HalfLaurent):
            return RationalFunction(other.map_coeffs(self.ring))
        return RationalFunction.constant(self.ring, other)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('division by the zero rational function')
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def scale(self, c):
        return RationalFunction(self.num.scale(c), self.den)

    def shift(self, e2: int):
        """Multiply by ``t^(e2/2)``."""
        return RationalFunction(self.num.shift(e2), self.den)

    def conjugate(self):
        return RationalFunction(self.num.conjugate(), self.den.conjugate())

    def evaluate(self, z):
        """Value at ``t^(1/2) = z`` (complex)."""
        d = self.den.evaluate(z)
        if d == 0:
            raise ZeroDivisionError(f'pole at t^(1/2) = {z}')
        return self.num.evaluate(z) / d

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = self._coerce(other)
            except (TypeError, RingMismatchError):
                return NotImplemented
        if other.ring != self.ring:
            return False
        if self.ring.is_exact:
            return self.num == other.num and self.den == other.den
        return self.isclose(other, self.ring.tolerance)

    def __hash__(self):
        return hash((self.num, self.den))

    def isclose(self, other, tol=1e-9):
        """Cross-multiplied coefficients agree to ``tol`` (relative to their size)."""
        a = self.num * other.den
        b = other.num * self.den
        keys = set(a.coeffs) | set(b.coeffs)
        scale = max([1.0] + [abs(complex(c)) for c in a.coeffs.values()]
                    + [abs(complex(c)) for c in b.coeffs.values()])
        zero = self.ring.zero
        return all(abs(complex(a.coeffs.get(e, zero)) - complex(b.coeffs.get(e, zero))) <= tol * scale
                   for e in keys)

    # -- text -------------------------------------------------------------------

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        # balance the denominator around t^0 for display
        centre = (self.den.top + self.den.bottom) // 2
        num, den = self.num.shift(-centre), self.den.shift(-centre)
        ns = str(num)
        if len(num.coeffs) > 1:
            ns = f'({ns})'
        return f'{ns}/({den})'

    def __repr__(self):
        return f'RationalFunction({self.ring}, {str(self)!r})'


def rf_reduce(num: HalfLaurent, den: HalfLaurent) -> RationalFunction:
    return RationalFunction(num, den)


def degrees(f: RationalFunction) -> Degrees:
    """``deg``, ``hdeg``, ``ldeg`` and the leading-coefficient ratio ``c``."""
    if f.is_zero():
        raise ZeroInvariantError('degrees of the zero function are undefined')
    p, q = f.num, f.den
    c = f.ring.div_exact(p.leading_coeff(), q.leading_coeff())
    return Degrees(p.span() - q.span(), p.hdeg() - q.hdeg(), p.ldeg() - q.ldeg(), c)
