"""Knot group presentations.

A :class:`Presentation` has deficiency one, a designated meridian word and
the abelianization ``alpha`` (exponent of ``t`` per generator), which is
always recomputed from the integer Smith normal form of the exponent-sum
matrix.

Indices: relators are addressed by 0-based list position in the Tietze
moves; generator columns ``k`` used by the twisted invariants are 1-based,
matching the usual ``x_1, ..., x_m`` labels.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import AbelianizationError, ParseError, PresentationError
from .freegroup import Word, format_word, parse_word

__all__ = [
    'Presentation', 'PDCode', 'smith_normal_form', 'abelianize',
    'wirtinger_from_pd', 'parse_pd', 'parse_presentation', 'format_presentation',
    'tietze_Ia', 'tietze_Ib', 'tietze_Ic', 'tietze_II', 'random_tietze_sequence',
    'load_presentation',
]

_NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


# -- Smith normal form -------------------------------------------------------------

def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None):
    """Return ``(D, U, V)`` with ``U A V = D`` diagonal, ``d_1 | d_2 | ...``,
    all diagonal entries nonnegative and ``U``, ``V`` unimodular."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        changed = True
            if changed:
                nz = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                nz += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(nz)
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def _alpha_vector(m: int, relators: Sequence[Word], meridian: Word) -> tuple[int, ...]:
    R = [r.exponent_sums(m) for r in relators]
    D, _, V = smith_normal_form(R, ncols=m)
    diag = [D[i][i] for i in range(min(len(R), m))]
    if len(R) != m - 1 or any(d != 1 for d in diag):
        invariants = [d for d in diag if d != 1]
        free = m - sum(1 for d in diag if d)
        raise AbelianizationError(
            f'abelianization is not infinite cyclic (free rank {free}, torsion {invariants})')
    a = [V[i][m - 1] for i in range(m)]
    mu = sum(e * a[g] for g, e in meridian.letters)
    if mu == -1:
        a = [-x for x in a]
    elif mu != 1:
        raise AbelianizationError(f'meridian maps to t^{mu}, not a generator of H_1')
    return tuple(a)


# -- presentations ---------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple
    meridian: Word
    alpha: tuple | None = None
    # generator index -> word in earlier generators, added by Tietze II
    definitions: tuple = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(self.relators)
        object.__setattr__(self, 'generators', gens)
        object.__setattr__(self, 'relators', rels)
        object.__setattr__(self, 'definitions', tuple(self.definitions))
        if len(set(gens)) != len(gens):
            raise PresentationError(f'duplicate generator names in {gens}')
        for name in gens:
            if not _NAME_RE.match(name):
                raise PresentationError(f'invalid generator name {name!r}')
        m = len(gens)
        if m == 0:
            raise PresentationError('a presentation needs at least one generator')
        if len(rels) != m - 1:
            raise PresentationError(f'deficiency must be 1: {m} generators, {len(rels)} relators')
        for w in rels + (self.meridian,):
            if any(g < 0 or g >= m for g in w.generators()):
                raise PresentationError(f'word {w} uses an unknown generator index')
        alpha = _alpha_vector(m, rels, self.meridian)
        if self.alpha is not None and tuple(self.alpha) != alpha:
            raise AbelianizationError(f'declared alpha {tuple(self.alpha)} differs from computed {alpha}')
        object.__setattr__(self, 'alpha', alpha)

    @classmethod
    def from_strings(cls, generators, relators, meridian=None):
        gens = list(generators.split()) if isinstance(generators, str) else list(generators)
        rels = [parse_word(r, gens) for r in relators]
        mer = parse_word(meridian, gens) if meridian is not None else Word.gen(0)
        return cls(tuple(gens), tuple(rels), mer)

    @property
    def m(self) -> int:
        return len(self.generators)

    def alpha_of(self, w: Word) -> int:
        return sum(e * self.alpha[g] for g, e in w.letters)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def fresh_name(self, base='y') -> str:
        i = 0
        while f'{base}{i}' in self.generators:
            i += 1
        return f'{base}{i}'

    def __str__(self):
        rels = ', '.join(format_word(r, self.generators) for r in self.relators)
        return f'<{" ".join(self.generators)} | {rels}>'


def abelianize(P: Presentation) -> dict:
    """``{generator name: exponent of t}``."""
    return dict(zip(P.generators, P.alpha))


# -- Tietze moves -------------------------------------------------------------------

def _check_rel(P, i):
    if not 0 <= i < len(P.relators):
        raise PresentationError(f'relator index {i} out of range (have {len(P.relators)})')


def _replace(P, i, w):
    rels = list(P.relators)
    rels[i] = w
    return Presentation(P.generators, tuple(rels), P.meridian, definitions=P.definitions)


def tietze_Ia(P: Presentation, i: int) -> Presentation:
    """Replace relator ``i`` by its inverse."""
    _check_rel(P, i)
    return _replace(P, i, P.relators[i].inverse())


def tietze_Ib(P: Presentation, i: int, w: Word) -> Presentation:
    """Replace relator ``i`` by the conjugate ``w r_i w^-1``."""
    _check_rel(P, i)
    if any(g >= P.m for g in w.generators()):
        raise PresentationError('conjugating word uses an unknown generator')
    return _replace(P, i, w * P.relators[i] * w.inverse())


def tietze_Ic(P: Presentation, i: int, j: int) -> Presentation:
    """Replace relator ``i`` by ``r_i r_j`` (``j != i``)."""
    _check_rel(P, i)
    _check_rel(P, j)
    if i == j:
        raise PresentationError('Tietze Ic needs two different relators')
    return _replace(P, i, P.relators[i] * P.relators[j])


def tietze_II(P: Presentation, w: Word, name: str | None = None) -> Presentation:
    """Add a generator ``name`` together with the relator ``name * w^-1``."""
    name = name or P.fresh_name()
    if name in P.generators:
        raise PresentationError(f'generator name {name!r} already in use')
    if any(g >= P.m for g in w.generators()):
        raise PresentationError('defining word uses an unknown generator')
    y = Word.gen(P.m)
    return Presentation(P.generators + (name,), P.relators + (y * w.inverse(),),
                        P.meridian, definitions=P.definitions + ((P.m, w),))


_MAX_RELATOR = 160


def _random_word(rng, m, max_len=3):
    return Word([(rng.randrange(m), rng.choice((1, -1))) for _ in range(rng.randint(1, max_len))])


def random_tietze_sequence(P: Presentation, steps: int, seed, transcript: list | None = None):
    """Apply ``steps`` pseudo-random strong Tietze moves (deterministic in ``seed``).

    Products of relators (Ic) are skipped in favour of an inversion once they
    would exceed a fixed length, so the presentation stays a manageable size.
    """
    if steps < 0:
        raise ValueError('steps must be nonnegative')
    rng = random.Random(seed)
    for _ in range(steps):
        n_rel = len(P.relators)
        kind = rng.choices(('Ia', 'Ib', 'Ic', 'II'), weights=(2, 3, 3, 2))[0]
        if n_rel == 0 or (kind == 'Ic' and n_rel < 2):
            kind = 'II'
        if kind == 'Ia':
            i = rng.randrange(n_rel)
            P, note = tietze_Ia(P, i), f'Ia(r{i})'
        elif kind == 'Ib':
            i = rng.randrange(n_rel)
            w = _random_word(rng, P.m)
            P, note = tietze_Ib(P, i, w), f'Ib(r{i}, {format_word(w, P.generators)})'
        elif kind == 'Ic':
            i = rng.randrange(n_rel)
            j = rng.choice([x for x in range(n_rel) if x != i])
            if len(P.relators[i]) + len(P.relators[j]) > _MAX_RELATOR:
                P, note = tietze_Ia(P, i), f'Ia(r{i})'
            else:
                P, note = tietze_Ic(P, i, j), f'Ic(r{i}, r{j})'
        else:
            w = _random_word(rng, P.m)
            name = P.fresh_name()
            note = f'II({name} = {format_word(w, P.generators)})'
            P = tietze_II(P, w, name)
        if transcript is not None:
            transcript.append(note)
    return P


# -- PD codes --------------------------------------------------------------------------

@dataclass(frozen=True)
class PDCode:
    """Crossings ``(i, j, k, l)``: under-strand enters on ``i`` and leaves on
    ``k``; ``j`` and ``l`` are the over-strand.  ``signs`` holds +1/-1, or None
    to infer the sign from consecutive integer labels."""

    crossings: tuple
    signs: tuple = None

    def __post_init__(self):
        xs = tuple(tuple(c) for c in self.crossings)
        object.__setattr__(self, 'crossings', xs)
        signs = tuple(self.signs) if self.signs is not None else (None,) * len(xs)
        if len(signs) != len(xs):
            raise PresentationError('one sign per crossing expected')
        object.__setattr__(self, 'signs', signs)
        counts = {}
        for c in xs:
            if len(c) != 4:
                raise PresentationError(f'crossing {c} does not have 4 labels')
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted((str(a) for a, n in counts.items() if n != 2))
        if bad:
            raise PresentationError(f'labels must appear exactly twice; offending: {", ".join(bad)}')

    def crossing_sign(self, idx: int) -> int:
        s = self.signs[idx]
        if s is not None:
            return s
        i, j, k, l = self.crossings[idx]
        n = 2 * len(self.crossings)
        try:
            j, l = int(j), int(l)
        except (TypeError, ValueError):
            raise PresentationError(f'crossing {idx + 1}: no sign given and labels are not integers') from None
        if (j - l) % n == 1:
            return 1
        if (l - j) % n == 1:
            return -1
        raise PresentationError(f'crossing {idx + 1}: cannot infer the sign from labels {j}, {l}')


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def wirtinger_from_pd(pd: PDCode) -> Presentation:
    """One generator per arc, one conjugation relator per crossing, the last
    relator dropped; the meridian is the first generator."""
    if not pd.crossings:
        return Presentation(('x1',), (), Word.gen(0))
    comps = _UnionFind()
    arcs = _UnionFind()
    for i, j, k, l in pd.crossings:
        comps.union(i, k)
        comps.union(j, l)
        arcs.union(j, l)
    if len({comps.find(a) for c in pd.crossings for a in c}) != 1:
        raise PresentationError('PD code describes more than one component')
    order = {}
    for c in pd.crossings:
        for a in c:
            order.setdefault(arcs.find(a), len(order))
    if len(order) != len(pd.crossings):
        raise PresentationError(f'{len(order)} arcs for {len(pd.crossings)} crossings; '
                                'not a knot diagram')
    gens = tuple(f'x{i + 1}' for i in range(len(order)))
    rels = []
    for idx, (i, j, k, l) in enumerate(pd.crossings):
        o, a, b = (Word.gen(order[arcs.find(x)]) for x in (j, i, k))
        if pd.crossing_sign(idx) > 0:
            rels.append(o * a * o.inverse() * b.inverse())
        else:
            rels.append(o.inverse() * a * o * b.inverse())
    return Presentation(gens, tuple(rels[:-1]), Word.gen(0))


# -- text formats -------------------------------------------------------------------

def _strip(line):
    return line.split('#', 1)[0].strip()


def parse_pd(text: str, source=None) -> PDCode:
    """One crossing per line: ``X a b c d [+|-]``."""
    crossings, signs = [], []
    for no, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.replace(',', ' ').replace('[', ' ').replace(']', ' ').split()
        if parts[0] != 'X' or len(parts) not in (5, 6):
            raise ParseError('expected "X a b c d [+|-]"', no, source)
        labels = [int(p) if re.match(r'^-?\d+$', p) else p for p in parts[1:5]]
        sign = None
        if len(parts) == 6:
            if parts[5] not in ('+', '-'):
                raise ParseError(f'crossing sign must be + or -, got {parts[5]!r}', no, source)
            sign = 1 if parts[5] == '+' else -1
        crossings.append(tuple(labels))
        signs.append(sign)
    try:
        return PDCode(tuple(crossings), tuple(signs))
    except PresentationError as exc:
        raise ParseError(str(exc), None, source) from None


def parse_presentation(text: str, source=None) -> Presentation:
    """Parse ``gens:`` / ``meridian:`` headers followed by one relator per line.

    An optional ``alpha:`` line lists the expected exponents; it is checked
    against the computed abelianization.  A file whose first content line
    starts with ``X`` is read as a PD code instead.
    """
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, s) for no, s in lines if s]
    if lines and re.match(r'^X[\s\[]', lines[0][1]):
        return wirtinger_from_pd(parse_pd(text, source))
    gens = meridian = alpha = None
    rel_lines = []
    for no, line in lines:
        key, _, rest = line.partition(':')
        key = key.strip().lower()
        if _ and key in ('gens', 'generators'):
            gens = rest.split()
            for g in gens:
                if not _NAME_RE.match(g):
                    raise ParseError(f'invalid generator name {g!r}', no, source)
        elif _ and key == 'meridian':
            meridian = (no, rest.strip())
        elif _ and key == 'alpha':
            try:
                alpha = (no, tuple(int(x) for x in rest.split()))
            except ValueError:
                raise ParseError('alpha must be a list of integers', no, source) from None
        elif _ and key in ('rel', 'relator'):
            rel_lines.append((no, rest.strip()))
        else:
            rel_lines.append((no, line))
    if gens is None:
        raise ParseError('missing "gens:" line', None, source)
    rels = []
    for no, line in rel_lines:
        try:
            rels.append(parse_word(line, gens))
        except ParseError as exc:
            raise ParseError(str(exc), no, source) from None
    if meridian is None:
        raise ParseError('missing "meridian:" line', None, source)
    try:
        mer = parse_word(meridian[1], gens)
    except ParseError as exc:
        raise ParseError(str(exc), meridian[0], source) from None
    try:
        return Presentation(tuple(gens), tuple(rels), mer,
                            alpha=alpha[1] if alpha else None)
    except AbelianizationError:
        raise
    except PresentationError as exc:
        raise ParseError(str(exc), None, source) from None


def format_presentation(P: Presentation) -> str:
    out = [f'gens: {" ".join(P.generators)}',
           f'meridian: {format_word(P.meridian, P.generators)}']
    out += [format_word(r, P.generators) for r in P.relators]
    return '\n'.join(out) + '\n'


def load_presentation(path) -> Presentation:
    with open(path, encoding='utf-8') as fh:
        return parse_presentation(fh.read(), source=str(path))
