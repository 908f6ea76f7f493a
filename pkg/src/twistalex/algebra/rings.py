"""Coefficient rings.

A ring is a small immutable descriptor object; its elements are plain Python
values (``int``, :class:`fractions.Fraction`, residues as ``int``, or
``complex``).  Keeping elements native keeps the inner loops of the
polynomial code cheap, and the descriptor carries everything that differs
between rings (zero test, inversion, involution, parsing, printing).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAUnitError, ParseError

__all__ = [
    'CoeffRing', 'Integers', 'Rationals', 'PrimeField', 'ApproxComplex',
    'ZZ', 'QQ', 'CC', 'ring_from_name',
]

DEFAULT_TOLERANCE = 1e-9

_INT_RE = re.compile(r'^[+-]?\d+$')
_FRAC_RE = re.compile(r'^([+-]?\d+)\s*/\s*(\d+)$')
_MOD_RE = re.compile(r'^([+-]?\d+)\s+mod\s+(\d+)$')


class CoeffRing:
    """Interface shared by the four coefficient rings."""

    name = '?'
    is_exact = True
    is_field = False

    zero = 0
    one = 1

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def is_unit(self, a):
        return not self.is_zero(a)

    def inv(self, a):
        raise NotImplementedError

    def div_exact(self, a, b):
        """``a / b`` assuming the quotient exists in the ring."""
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def conj(self, a):
        return a

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Integers(CoeffRing):
    name = 'Z'

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise NotAUnitError(f'{x} is not an integer')
            return x.numerator
        if isinstance(x, int):
            return x
        raise TypeError(f'cannot coerce {x!r} into Z')

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv(self, a):
        if a == 1 or a == -1:
            return a
        raise NotAUnitError(f'{a} is not a unit in Z')

    def div_exact(self, a, b):
        if b == 0:
            raise NotAUnitError('division by zero')
        q, r = divmod(a, b)
        if r:
            raise NotAUnitError(f'{b} does not divide {a} in Z')
        return q

    def parse(self, text):
        text = text.strip()
        if _INT_RE.match(text):
            return int(text)
        raise ParseError(f'not an integer literal: {text!r}')


@dataclass(frozen=True)
class Rationals(CoeffRing):
    name = 'Q'
    is_field = True

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f'cannot coerce {x!r} into Q')

    def inv(self, a):
        if a == 0:
            raise NotAUnitError('division by zero in Q')
        return 1 / Fraction(a)

    def parse(self, text):
        text = text.strip()
        if _INT_RE.match(text):
            return Fraction(int(text))
        m = _FRAC_RE.match(text)
        if m:
            if int(m.group(2)) == 0:
                raise ParseError(f'zero denominator in {text!r}')
            return Fraction(int(m.group(1)), int(m.group(2)))
        raise ParseError(f'not a rational literal: {text!r}')


@dataclass(frozen=True)
class PrimeField(CoeffRing):
    """Residues mod ``p``, stored as ints in ``range(p)``."""

    p: int = 2
    is_field = True

    def __post_init__(self):
        p = self.p
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f'{p} is not prime')

    @property
    def name(self):
        return f'F{self.p}'

    def coerce(self, x):
        if isinstance(x, Fraction):
            return self.div_exact(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f'cannot coerce {x!r} into F{self.p}')

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise NotAUnitError(f'division by zero in F{self.p}')
        return pow(a, -1, self.p)

    def parse(self, text):
        text = text.strip()
        m = _MOD_RE.match(text)
        if m:
            if int(m.group(2)) != self.p:
                raise ParseError(f'residue {text!r} is not mod {self.p}')
            return int(m.group(1)) % self.p
        if _INT_RE.match(text):
            return int(text) % self.p
        m = _FRAC_RE.match(text)
        if m:
            den = int(m.group(2)) % self.p
            if den == 0:
                raise ParseError(f'denominator of {text!r} vanishes mod {self.p}')
            return self.div_exact(int(m.group(1)) % self.p, den)
        raise ParseError(f'not an F{self.p} literal: {text!r}')


@dataclass(frozen=True)
class ApproxComplex(CoeffRing):
    """Floating point complex numbers; ``|z| <= tolerance`` counts as zero."""

    tolerance: float = DEFAULT_TOLERANCE
    name = 'C'
    is_exact = False
    is_field = True
    zero = 0j
    one = 1 + 0j

    def coerce(self, x):
        return complex(x)

    def is_zero(self, a):
        return abs(a) <= self.tolerance

    def inv(self, a):
        if abs(a) <= self.tolerance:
            raise NotAUnitError('division by (numerical) zero')
        return 1 / a

    def conj(self, a):
        return a.conjugate()

    def parse(self, text):
        text = text.strip().replace(' ', '')
        m = _FRAC_RE.match(text)
        if m:
            return complex(int(m.group(1)) / int(m.group(2)))
        try:
            return complex(text.replace('i', 'j'))
        except ValueError:
            raise ParseError(f'not a complex literal: {text!r}') from None

    def format(self, a, digits=12):
        a = complex(a)
        re_, im = a.real, a.imag
        if abs(im) <= self.tolerance:
            return f'{re_:.{digits}g}'
        if abs(re_) <= self.tolerance:
            return f'{im:.{digits}g}i'
        return f'({re_:.{digits}g}{im:+.{digits}g}i)'


ZZ = Integers()
QQ = Rationals()
CC = ApproxComplex()


def ring_from_name(name: str) -> CoeffRing:
    """Parse ``Z``, ``Q``, ``F<p>`` (also ``F_p``, ``GF(p)``) or ``C``."""
    key = name.strip()
    if key in ('Z', 'ZZ'):
        return ZZ
    if key in ('Q', 'QQ'):
        return QQ
    if key in ('C', 'CC'):
        return CC
    m = re.match(r'^(?:F_?|GF\(?)(\d+)\)?$', key)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f'unknown ring {name!r} (expected Z, Q, F<p> or C)')
