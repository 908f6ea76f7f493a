"""Laurent polynomials in t^(1/2) over a coefficient ring.

Exponents are stored doubled: the key ``e`` stands for ``t^(e/2)``.  In other
words a :class:`HalfLaurent` is an ordinary Laurent polynomial in
``s = t^(1/2)``, and the integer-exponent subring is the set of polynomials
whose keys are all even.

The module-level ``_l*`` helpers work on bare ``{exponent: coeff}`` dicts and
are shared with the matrix code, where wrapping every entry in an object
would dominate the running time.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import RingMismatchError
from .rings import CoeffRing

__all__ = ['HalfLaurent', 'hl_add', 'hl_mul', 'hl_conjugate', 'format_exponent']


def _ladd(ring, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        if e in out:
            v = ring.add(out[e], c)
            if ring.is_zero(v):
                del out[e]
            else:
                out[e] = v
        else:
            out[e] = c
    return out


def _lneg(ring, a):
    return {e: ring.neg(c) for e, c in a.items()}


def _lsub(ring, a, b):
    return _ladd(ring, a, _lneg(ring, b))


def _lmul(ring, a, b):
    if not a or not b:
        return {}
    add, mul = ring.add, ring.mul
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e in out:
                out[e] = add(out[e], mul(c1, c2))
            else:
                out[e] = mul(c1, c2)
    return {e: c for e, c in out.items() if not ring.is_zero(c)}


def _lscale(ring, a, c, shift=0):
    """``c * s^shift * a``."""
    out = {}
    for e, v in a.items():
        w = ring.mul(v, c)
        if not ring.is_zero(w):
            out[e + shift] = w
    return out


def _lclean(ring, a):
    return {e: c for e, c in a.items() if not ring.is_zero(c)}


def _is_negative(ring, c):
    if ring.name in ('Z', 'Q'):
        return c < 0
    if not ring.is_exact:
        return abs(c.imag) <= ring.tolerance and c.real < 0
    return False


def format_exponent(e2: int) -> str:
    """Render ``t^(e2/2)`` the way the text formats expect."""
    if e2 == 0:
        return ''
    if e2 % 2 == 0:
        k = e2 // 2
        return 't' if k == 1 else f't^{k}'
    return f't^({e2}/2)'


class HalfLaurent:
    """Immutable Laurent polynomial in ``t^(1/2)``.

    >>> from twistalex.algebra.rings import ZZ
    >>> s = HalfLaurent.monomial(ZZ, 1, 1)      # t^(1/2)
    >>> str((s - s.inverse_monomial()) ** 2)
    't - 2 + t^-1'
    """

    __slots__ = ('ring', 'coeffs', '_hash')

    def __init__(self, ring: CoeffRing, coeffs=None):
        self.ring = ring
        if coeffs:
            self.coeffs = _lclean(ring, {int(e): c for e, c in coeffs.items()})
        else:
            self.coeffs = {}
        self._hash = None

    @classmethod
    def _raw(cls, ring, coeffs):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring):
        return cls._raw(ring, {0: ring.one})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {0: ring.coerce(c)})

    @classmethod
    def monomial(cls, ring, c, e2: int):
        """``c * t^(e2/2)``."""
        return cls(ring, {e2: ring.coerce(c)})

    @classmethod
    def from_int_exponents(cls, ring, terms):
        """Build from ``{k: c}`` meaning ``sum c t^k`` with integer ``k``."""
        return cls(ring, {2 * k: ring.coerce(c) for k, c in terms.items()})

    # -- predicates and degree data -------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        return len(self.coeffs) == 1

    def is_unit(self):
        """Units of R[t^(+-1/2)] are the monomials with unit coefficient."""
        if len(self.coeffs) != 1:
            return False
        (c,) = self.coeffs.values()
        return self.ring.is_unit(c)

    def has_integer_exponents(self):
        return all(e % 2 == 0 for e in self.coeffs)

    @property
    def top(self) -> int:
        """Highest doubled exponent."""
        return max(self.coeffs)

    @property
    def bottom(self) -> int:
        return min(self.coeffs)

    def hdeg(self) -> Fraction:
        return Fraction(self.top, 2)

    def ldeg(self) -> Fraction:
        return Fraction(self.bottom, 2)

    def span(self) -> Fraction:
        return Fraction(self.top - self.bottom, 2)

    def leading_coeff(self):
        return self.coeffs[self.top]

    def trailing_coeff(self):
        return self.coeffs[self.bottom]

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, HalfLaurent):
            return HalfLaurent.constant(self.ring, other)
        if other.ring != self.ring:
            raise RingMismatchError(f'{self.ring} vs {other.ring}')
        return other

    def __add__(self, other):
        other = self._check(other)
        return HalfLaurent._raw(self.ring, _ladd(self.ring, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent._raw(self.ring, _lneg(self.ring, self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return HalfLaurent._raw(self.ring, _lsub(self.ring, self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        return HalfLaurent._raw(self.ring, _lmul(self.ring, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = HalfLaurent.one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse_monomial(self):
        if not self.is_unit():
            raise ZeroDivisionError(f'{self} is not a unit monomial')
        ((e, c),) = self.coeffs.items()
        return HalfLaurent._raw(self.ring, {-e: self.ring.inv(c)})

    def scale(self, c):
        return HalfLaurent._raw(self.ring, _lscale(self.ring, self.coeffs, c))

    def shift(self, e2: int):
        """Multiply by ``t^(e2/2)``."""
        return HalfLaurent._raw(self.ring, {e + e2: c for e, c in self.coeffs.items()})

    def conjugate(self):
        """``t -> t^-1`` together with the coefficient involution."""
        conj = self.ring.conj
        return HalfLaurent._raw(self.ring, {-e: conj(c) for e, c in self.coeffs.items()})

    def map_coeffs(self, ring, f=None):
        """Move into ``ring``, applying ``f`` (default ``ring.coerce``)."""
        f = f or ring.coerce
        return HalfLaurent(ring, {e: f(c) for e, c in self.coeffs.items()})

    def evaluate(self, z):
        """Value at ``t^(1/2) = z``."""
        return sum(complex(c) * z ** e for e, c in self.coeffs.items()) if self.coeffs else 0

    def evaluate_exact(self, x):
        """Value at ``t^(1/2) = x`` inside the coefficient ring (x must be a unit if
        negative exponents are present)."""
        ring = self.ring
        total = ring.zero
        for e, c in self.coeffs.items():
            total = ring.add(total, ring.mul(c, ring.pow(x, e)))
        return total

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HalfLaurent):
            if isinstance(other, (int, Fraction, complex, float)):
                other = HalfLaurent.constant(self.ring, other)
            else:
                return NotImplemented
        if other.ring != self.ring:
            return False
        if self.ring.is_exact:
            return self.coeffs == other.coeffs
        return not _lsub(self.ring, self.coeffs, other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.coeffs.items())))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- text ------------------------------------------------------------------

    def terms(self):
        """``(doubled exponent, coeff)`` pairs, highest exponent first."""
        return sorted(self.coeffs.items(), reverse=True)

    def __str__(self):
        if not self.coeffs:
            return '0'
        ring = self.ring
        parts = []
        for e, c in self.terms():
            neg = _is_negative(ring, c)
            mag = ring.neg(c) if neg else c
            mono = format_exponent(e)
            if mono and ring.eq(mag, ring.one):
                body = mono
            elif mono:
                body = f'{ring.format(mag)}*{mono}'
            else:
                body = ring.format(mag)
            parts.append((neg, body))
        out = ('-' if parts[0][0] else '') + parts[0][1]
        for neg, body in parts[1:]:
            out += (' - ' if neg else ' + ') + body
        return out

    def __repr__(self):
        return f'HalfLaurent({self.ring}, {str(self)!r})'


def hl_add(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    return a + b


def hl_mul(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    return a * b


def hl_conjugate(a: HalfLaurent) -> HalfLaurent:
    return a.conjugate()
