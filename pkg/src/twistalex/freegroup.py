"""Free-group words, the integral group ring and Fox derivatives.

Generators are referred to by index; names only matter for parsing and
printing, which take the generator name list explicitly.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = ['Word', 'GroupRingElement', 'fox_derivative', 'word_multiply',
           'word_inverse', 'ring_add', 'ring_multiply', 'parse_word', 'format_word']


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple:
    stack = []
    for g, e in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class Word:
    """A freely reduced word; letters are ``(generator index, +1 | -1)``."""

    __slots__ = ('letters', '_hash')

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        checked = []
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f'letter exponent must be +1 or -1, got {e}')
            checked.append((int(g), e))
        self.letters = _reduce(checked)
        self._hash = None

    @classmethod
    def _raw(cls, letters):
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def identity(cls):
        return cls._raw(())

    @classmethod
    def gen(cls, i: int, power: int = 1):
        e = 1 if power > 0 else -1
        return cls._raw(((i, e),) * abs(power))

    def __mul__(self, other: 'Word') -> 'Word':
        a, b = self.letters, other.letters
        i = 0
        # cancel across the seam only; both halves are already reduced
        while i < len(a) and i < len(b) and a[-1 - i][0] == b[i][0] and a[-1 - i][1] == -b[i][1]:
            i += 1
        return Word._raw(a[:len(a) - i] + b[i:])

    def inverse(self) -> 'Word':
        return Word._raw(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> 'Word':
        base = self if k >= 0 else self.inverse()
        out = Word.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, i: int) -> int:
        return sum(e for g, e in self.letters if g == i)

    def exponent_sums(self, m: int) -> list[int]:
        out = [0] * m
        for g, e in self.letters:
            out[g] += e
        return out

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_word(self, names)

    def __repr__(self):
        return f'Word({format_word(self)!r})'


def word_multiply(a: Word, b: Word) -> Word:
    return a * b


def word_inverse(w: Word) -> Word:
    return w.inverse()


class GroupRingElement:
    """Finite integer combination of words; zero coefficients are never stored."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in dict(terms).items():
                if c:
                    self.terms[w] = c

    @classmethod
    def _raw(cls, terms):
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({Word.identity(): 1})

    @classmethod
    def from_word(cls, w: Word, c: int = 1):
        return cls._raw({w: c} if c else {})

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, Word):
            return GroupRingElement.from_word(other)
        if isinstance(other, int):
            return GroupRingElement.from_word(Word.identity(), other)
        raise TypeError(f'cannot use {other!r} as a group ring element')

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return GroupRingElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return GroupRingElement._raw(out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def augmentation(self) -> int:
        """Image under the map sending every group element to 1."""
        return sum(self.terms.values())

    def format(self, names=None) -> str:
        if not self.terms:
            return '0'
        parts = []
        for w, c in sorted(self.terms.items()):
            body = format_word(w, names)
            if body == '1':
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f'-{body}')
            else:
                parts.append(f'{c}*{body}')
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return f'GroupRingElement({self.format()!r})'


def ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def ring_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def fox_derivative(w: Word, j: int) -> GroupRingElement:
    """Fox free derivative of ``w`` with respect to generator ``j``.

    Determined by d(x_j)/dx_j = 1, d(x_i)/dx_j = 0 for i != j and the
    product rule d(uv) = du + u dv; in closed form, each letter x_j
    contributes its prefix and each letter x_j^-1 contributes minus its prefix
    followed by x_j^-1.
    """
    out = {}
    prefix = []
    for g, e in w.letters:
        if g == j:
            if e == 1:
                key, c = Word._raw(tuple(prefix)), 1
            else:
                key, c = Word._raw(tuple(prefix) + ((g, e),)), -1
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        prefix.append((g, e))
    return GroupRingElement._raw(out)


# -- text -----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<pow>\^\s*(?:\(\s*[+-]?\s*\d+\s*\)|[+-]?\s*\d+))"
                       r"|(?P<prime>')|(?P<open>\()|(?P<close>\))|(?P<sep>[*.])|(?P<one>1(?![0-9])))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f'unexpected character {text[pos:].strip()[:1]!r} at column {pos + 1}')
        kind = m.lastgroup
        if kind is None:
            break
        value = m.group(kind)
        if kind == 'pow':
            value = int(re.sub(r'[\s^()]', '', value))
        tokens.append((kind, value, pos))
        pos = m.end()
    return tokens


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse ``y x y^-1 z'`` style input.

    Generators are identifiers separated by whitespace, ``*`` or ``.``;
    ``^k`` raises the preceding factor (a generator or parenthesised word)
    to an integer power and a trailing ``'`` inverts it.  ``1`` is the
    identity.
    """
    index = {n: i for i, n in enumerate(names)}
    tokens = _tokenize(text)
    pos = 0

    def parse_seq(depth):
        nonlocal pos
        acc = Word.identity()
        while pos < len(tokens):
            kind, value, col = tokens[pos]
            if kind == 'close':
                if depth == 0:
                    raise ParseError(f'unbalanced ")" at column {col + 1}')
                return acc
            if kind == 'sep':
                pos += 1
                continue
            if kind == 'name':
                if value not in index:
                    raise ParseError(f'unknown generator {value!r}')
                factor = Word.gen(index[value])
                pos += 1
            elif kind == 'one':
                factor = Word.identity()
                pos += 1
            elif kind == 'open':
                pos += 1
                factor = parse_seq(depth + 1)
                if pos >= len(tokens) or tokens[pos][0] != 'close':
                    raise ParseError(f'unclosed "(" at column {col + 1}')
                pos += 1
            else:
                raise ParseError(f'unexpected {tokens[pos][1]!r} at column {col + 1}')
            while pos < len(tokens) and tokens[pos][0] in ('pow', 'prime'):
                if tokens[pos][0] == 'pow':
                    factor = factor ** tokens[pos][1]
                else:
                    factor = factor.inverse()
                pos += 1
            acc = acc * factor
        if depth:
            raise ParseError('unclosed "("')
        return acc

    return parse_seq(0)


def format_word(w: Word, names: Sequence[str] | None = None) -> str:
    """Inverse of :func:`parse_word`, collapsing runs into powers."""
    if not w.letters:
        return '1'
    names = names or [f'x{i + 1}' for i in range(max(w.generators()) + 1)]
    out = []
    run_g, run = None, 0
    for g, e in list(w.letters) + [(None, 0)]:
        if g == run_g and (e > 0) == (run > 0):
            run += e
            continue
        if run_g is not None:
            out.append(names[run_g] if run == 1 else f'{names[run_g]}^{run}')
        run_g, run = g, e
    return ' '.join(out)
