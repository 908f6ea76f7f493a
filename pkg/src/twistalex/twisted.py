"""Twisted Alexander invariants from a presentation and a representation.

For a presentation <x_1..x_m | r_1..r_{m-1}> with abelianization alpha and
a representation rho into GL_n(R), Phi sends a word w to
t^alpha(w) * rho(w).  The Wada quotient for a column k is

    det A_{Phi,k} / det Phi(x_k - 1),

with A_{Phi,k} the block Fox Jacobian (Phi(dr_i/dx_j))_{j != k}.  It is
defined up to a unit monomial; the normalized invariant multiplies it by

    delta^n / (eps t^n)^d,
    eps   = det rho(meridian),
    delta = sign(alpha(x_k) * det A_{phi,k})          (phi = augmentation),
    d     = (hdeg + ldeg of det A_{alpha,k} - alpha(x_k)) / 2,

which removes the ambiguity.  The half-integral power of eps is kept
formal: :class:`NormalizedInvariant` stores ``value`` (everything except
eps^-d) and ``eps_power = -d`` separately.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import matrices
from .algebra.laurent import HalfLaurent
from .algebra.polymatrix import PolyMatrix, det, det_exact
from .algebra.ratfunc import Degrees, RationalFunction, degrees
from .algebra.rings import QQ, ZZ, CoeffRing, ring_from_name
from .errors import (BadColumnError, DegeneratePresentationError, NotAUnitError,
                     ParseError, PresentationError, VanishingDenominatorError,
                     VerificationError)
from .freegroup import GroupRingElement, Word, format_word
from .presentation import Presentation

__all__ = [
    'Representation', 'NormalizationData', 'NormalizedInvariant',
    'phi_apply', 'fox_jacobian', 'wada_invariant', 'normalization_data',
    'normalized_invariant', 'dagger', 'conjugate_invariant',
    'parse_representation', 'load_representation', 'augmented_jacobian',
    'alpha_jacobian', 'format_representation',
]


# -- representations ------------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """Generator images by name; ``default`` covers generators not listed.

    Generators introduced by Tietze II moves are mapped through their
    defining words, so a representation of the original presentation keeps
    working after such moves.
    """

    ring: CoeffRing
    images: tuple = ()
    default: tuple | None = None

    def __post_init__(self):
        imgs = self.images.items() if isinstance(self.images, dict) else self.images
        imgs = tuple(sorted((name, matrices.coerce(self.ring, m)) for name, m in imgs))
        object.__setattr__(self, 'images', imgs)
        if self.default is not None:
            object.__setattr__(self, 'default', matrices.coerce(self.ring, self.default))
        dims = {len(m) for _, m in imgs} | ({len(self.default)} if self.default else set())
        if len(dims) != 1:
            raise VerificationError(f'inconsistent or missing matrix sizes: {sorted(dims)}')
        n = dims.pop()
        for name, mat in imgs + ((('default', self.default),) if self.default else ()):
            if len(mat) != n or any(len(row) != n for row in mat):
                raise VerificationError(f'image of {name} is not {n}x{n}')
            if not self.ring.is_unit(matrices.det(self.ring, mat)):
                raise VerificationError(f'image of {name} is not invertible over {self.ring}')

    @classmethod
    def trivial(cls, ring: CoeffRing = QQ, n: int = 1):
        return cls(ring, (), matrices.identity(ring, n))

    @property
    def n(self) -> int:
        return len(self.default) if self.default else len(self.images[0][1])

    @property
    def image_map(self) -> dict:
        return dict(self.images)

    def image_of(self, P: Presentation, g: int):
        return _bind(P, self).mats[g]

    def of_word(self, P: Presentation, w: Word):
        b = _bind(P, self)
        return b.word(w)

    def verify(self, P: Presentation) -> None:
        """Raise :class:`VerificationError` naming the first relator not sent to 1."""
        _bind(P, self)

    def with_ring(self, ring: CoeffRing):
        return Representation(ring, tuple((n, [[ring.coerce(x) for x in row] for row in m])
                                          for n, m in self.images),
                              None if self.default is None else
                              [[ring.coerce(x) for x in row] for row in self.default])


class _Bound:
    """A representation resolved against one presentation's generator list."""

    def __init__(self, P: Presentation, rho: Representation):
        ring = rho.ring
        self.ring, self.n = ring, rho.n
        imgs = rho.image_map
        unknown = sorted(set(imgs) - set(P.generators))
        if unknown:
            raise VerificationError(f'images given for unknown generators: {", ".join(unknown)}')
        defs = dict(P.definitions)
        mats, invs = [], []
        for g, name in enumerate(P.generators):
            if g in defs:
                m = self._word(defs[g], mats, invs)
            elif name in imgs:
                m = imgs[name]
            elif rho.default is not None:
                m = rho.default
            else:
                raise VerificationError(f'no image for generator {name}')
            mats.append(m)
            invs.append(matrices.inverse(ring, m))
        self.mats, self.invs = mats, invs
        for i, r in enumerate(P.relators):
            if not matrices.is_identity(ring, self.word(r)):
                raise VerificationError(
                    f'relator {i + 1} ({format_word(r, P.generators)}) is not sent to the identity',
                    relator=i)

    def _word(self, w, mats, invs):
        out = matrices.identity(self.ring, self.n)
        for g, e in w.letters:
            out = matrices.mul(self.ring, out, mats[g] if e > 0 else invs[g])
        return out

    def word(self, w: Word):
        return self._word(w, self.mats, self.invs)


@lru_cache(maxsize=64)
def _bind(P: Presentation, rho: Representation) -> _Bound:
    return _Bound(P, rho)


# -- Phi and Jacobians -----------------------------------------------------------------------

def _add_block(ring, blk, mat, e2, sign):
    for u, row in enumerate(mat):
        for v, x in enumerate(row):
            if ring.is_zero(x):
                continue
            if sign < 0:
                x = ring.neg(x)
            cell = blk[u][v]
            cell[e2] = ring.add(cell[e2], x) if e2 in cell else x


@lru_cache(maxsize=64)
def _jacobian_blocks(P: Presentation, rho: Representation):
    """``rows[i][j]`` = Phi(dr_i/dx_j) as an n x n grid of Laurent dicts.

    Walks each relator once, carrying Phi of the running prefix, instead of
    expanding the Fox derivative in the group ring first.
    """
    b = _bind(P, rho)
    ring, n, m = b.ring, b.n, P.m
    ident = matrices.identity(ring, n)
    rows = []
    for r in P.relators:
        blocks = [[[{} for _ in range(n)] for _ in range(n)] for _ in range(m)]
        prefix, a = ident, 0
        for g, e in r.letters:
            if e > 0:
                _add_block(ring, blocks[g], prefix, 2 * a, 1)
                prefix = matrices.mul(ring, prefix, b.mats[g])
                a += P.alpha[g]
            else:
                prefix = matrices.mul(ring, prefix, b.invs[g])
                a -= P.alpha[g]
                _add_block(ring, blocks[g], prefix, 2 * a, -1)
        for blk in blocks:
            for row in blk:
                for v, cell in enumerate(row):
                    row[v] = {e: c for e, c in cell.items() if not ring.is_zero(c)}
        rows.append(blocks)
    return rows


def _check_k(P, k):
    if not 1 <= k <= P.m:
        raise PresentationError(f'column index k={k} out of range 1..{P.m}')


def phi_apply(e: GroupRingElement | Word, P: Presentation, rho: Representation) -> PolyMatrix:
    """Linear extension of ``w -> t^alpha(w) rho(w)``; an n x n polynomial matrix."""
    if isinstance(e, Word):
        e = GroupRingElement.from_word(e)
    b = _bind(P, rho)
    ring, n = b.ring, b.n
    out = [[{} for _ in range(n)] for _ in range(n)]
    for w, c in e.terms.items():
        if any(g >= P.m for g in w.generators()):
            raise PresentationError(f'word {w} uses a generator outside the presentation')
        mat = b.word(w)
        cr = ring.coerce(c)
        _add_block(ring, out, [[ring.mul(x, cr) for x in row] for row in mat], 2 * P.alpha_of(w), 1)
    return PolyMatrix(ring, out)


def fox_jacobian(P: Presentation, rho: Representation, k: int) -> PolyMatrix:
    """A_{Phi,k}: the (m-1)n square matrix of blocks Phi(dr_i/dx_j), j != k."""
    _check_k(P, k)
    blocks = _jacobian_blocks(P, rho)
    n = rho.n
    cols = [j for j in range(P.m) if j != k - 1]
    out = []
    for blk_row in blocks:
        for u in range(n):
            out.append([blk_row[j][u][v] for j in cols for v in range(n)])
    return PolyMatrix(rho.ring, out, cols=len(cols) * n)


def augmented_jacobian(P: Presentation, k: int) -> list:
    """A_{phi,k}: augmentation of the Fox derivatives, i.e. exponent sums."""
    _check_k(P, k)
    return [[x for j, x in enumerate(r.exponent_sums(P.m)) if j != k - 1] for r in P.relators]


def alpha_jacobian(P: Presentation, k: int) -> PolyMatrix:
    """A_{alpha,k} over Z[t, t^-1]."""
    return fox_jacobian(P, Representation.trivial(ZZ), k)


def _phi_x_minus_one(P, rho, k):
    b = _bind(P, rho)
    ring, n = b.ring, b.n
    out = [[{} for _ in range(n)] for _ in range(n)]
    _add_block(ring, out, b.mats[k - 1], 2 * P.alpha[k - 1], 1)
    _add_block(ring, out, matrices.identity(ring, n), 0, -1)
    return PolyMatrix(ring, out)


def wada_invariant(P: Presentation, rho: Representation, k: int) -> RationalFunction:
    """det A_{Phi,k} / det Phi(x_k - 1) as a reduced rational function."""
    _check_k(P, k)
    den = det(_phi_x_minus_one(P, rho, k))
    if den.is_zero():
        raise VanishingDenominatorError(f'det Phi(x_{k} - 1) vanishes for k={k}', k=k)
    return RationalFunction(det(fox_jacobian(P, rho, k)), den)


# -- normalization ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizationData:
    epsilon: object
    delta: int
    d: Fraction
    k: int


def _sign(x):
    return (x > 0) - (x < 0)


def normalization_data(P: Presentation, rho: Representation, k: int) -> NormalizationData:
    _check_k(P, k)
    a_k = P.alpha[k - 1]
    if a_k == 0:
        raise BadColumnError(f'bad column k={k}: alpha(x_{k}) = 0')
    det_phi = matrices.det(ZZ, augmented_jacobian(P, k))
    if det_phi == 0:
        raise DegeneratePresentationError(f'degenerate presentation: det A_phi,{k} = 0')
    det_alpha = det_exact(alpha_jacobian(P, k))
    if det_alpha.is_zero():
        raise DegeneratePresentationError(f'degenerate presentation: det A_alpha,{k} = 0')
    d = (det_alpha.hdeg() + det_alpha.ldeg() - a_k) / 2
    eps = matrices.det(rho.ring, _bind(P, rho).word(P.meridian))
    return NormalizationData(eps, _sign(a_k * det_phi), Fraction(d), k)


@dataclass(frozen=True, eq=False)
class NormalizedInvariant:
    """``value * eps^eps_power`` with the power of eps = det rho(meridian) kept formal.

    Equality folds the integral part of ``eps_power`` into ``value``, so two
    invariants compare equal whenever they agree as elements of the formal
    extension by eps^(1/2).
    """

    value: RationalFunction
    eps: object
    eps_power: Fraction
    n: int
    data: NormalizationData | None = field(default=None, compare=False)

    @property
    def ring(self):
        return self.value.ring

    def is_zero(self):
        return self.value.is_zero()

    def degrees(self) -> Degrees:
        return degrees(self.value)

    def canonical(self):
        """``(folded value, eps or None, fractional power in {0, 1/2})``."""
        if self.is_zero():
            return self.value, None, Fraction(0)
        q = math.floor(self.eps_power)
        r = self.eps_power - q
        ring = self.ring
        value = self.value.scale(ring.pow(ring.coerce(self.eps), q)) if q else self.value
        return value, (self.eps if r else None), r

    def __eq__(self, other):
        if not isinstance(other, NormalizedInvariant):
            return NotImplemented
        if self.n != other.n or self.ring != other.ring:
            return False
        v1, e1, r1 = self.canonical()
        v2, e2, r2 = other.canonical()
        if r1 != r2 or v1 != v2:
            return False
        return e1 is None or self.ring.eq(e1, e2)

    def __hash__(self):
        v, e, r = self.canonical()
        return hash((v, r, self.n))

    def isclose(self, other, tol=1e-9) -> bool:
        v1, e1, r1 = self.canonical()
        v2, e2, r2 = other.canonical()
        if r1 != r2 or self.n != other.n:
            return False
        if e1 is not None and abs(complex(e1) - complex(e2)) > tol:
            return False
        return v1.isclose(v2, tol)

    def format_eps(self) -> str:
        return self.ring.format(self.eps)

    def __str__(self):
        # fold whole powers of eps into the value, leaving 0 or -1/2, so equal invariants print alike
        if self.is_zero() or self.eps_power == 0 or self.ring.eq(self.eps, self.ring.one):
            return str(self.value)
        q = math.ceil(self.eps_power)
        value = self.value.scale(self.ring.pow(self.ring.coerce(self.eps), q)) if q else self.value
        if q == self.eps_power:
            return str(value)
        return f'({value}) * ({self.format_eps()})^({self.eps_power - q})'


def _zero_invariant(P, rho, eps=None):
    ring = QQ if rho.ring == ZZ else rho.ring
    return NormalizedInvariant(RationalFunction(HalfLaurent.zero(ring)),
                               ring.one if eps is None else eps, Fraction(0), rho.n)


def _choose_column(P, rho):
    for k in range(1, P.m + 1):
        if P.alpha[k - 1] == 0:
            continue
        if not det(_phi_x_minus_one(P, rho, k)).is_zero():
            return k
    return None


def normalized_invariant(P: Presentation, rho: Representation, k: int | None = None) -> NormalizedInvariant:
    """Normalized twisted Alexander invariant.

    ``P`` must be strongly Tietze equivalent to a Wirtinger presentation
    (a caller obligation; it cannot be checked here).  Without ``k`` the
    smallest admissible column is used; the result does not depend on it.
    """
    _bind(P, rho)
    if k is None:
        k = _choose_column(P, rho)
        if k is None:
            return _zero_invariant(P, rho)
    data = normalization_data(P, rho, k)
    num = det(fox_jacobian(P, rho, k))
    den = det(_phi_x_minus_one(P, rho, k))
    if den.is_zero():
        raise VanishingDenominatorError(f'det Phi(x_{k} - 1) vanishes for k={k}', k=k)
    if num.is_zero():
        return NormalizedInvariant(_zero_invariant(P, rho).value, data.epsilon, Fraction(0), rho.n, data)
    n = rho.n
    ring = rho.ring
    sign = ring.coerce(data.delta ** n)
    num = num.scale(sign).shift(-n * int(2 * data.d))
    value = RationalFunction(num, den)
    return NormalizedInvariant(value, data.epsilon, -data.d, n, data)


# -- duality -------------------------------------------------------------------------------

def dagger(rho: Representation, P: Presentation | None = None) -> Representation:
    """gamma -> rho(gamma^-1)^*, the conjugate transpose of the inverse."""
    ring = rho.ring

    def img(m):
        return matrices.conj_transpose(ring, matrices.inverse(ring, m))

    out = Representation(ring, tuple((name, img(m)) for name, m in rho.images),
                         None if rho.default is None else img(rho.default))
    if P is not None:
        out.verify(P)
    return out


def conjugate_invariant(inv: NormalizedInvariant) -> NormalizedInvariant:
    """Apply the involution t -> t^-1 (with the coefficient involution).

    The formal factor eps^p becomes conj(eps)^p, written here as
    (conj(eps)^-1)^-p so that the base is det rho^dagger(meridian).
    """
    ring = inv.ring
    eps = ring.inv(ring.conj(ring.coerce(inv.eps)))
    return NormalizedInvariant(inv.value.conjugate(), eps, -inv.eps_power, inv.n)


# -- representation files ---------------------------------------------------------------------

def _parse_matrix(text, ring, n, no, source):
    body = text.strip()
    body = re.sub(r'\]\s*,\s*\[', ';', body)
    body = body.replace('[', ' ').replace(']', ' ')
    rows = [r for r in body.split(';') if r.strip()]
    mat = []
    for r in rows:
        cells = r.split(',') if ',' in r else r.split()
        try:
            mat.append([ring.parse(c) for c in cells if c.strip()])
        except ParseError as exc:
            raise ParseError(str(exc), no, source) from None
    if n is not None and (len(mat) != n or any(len(row) != n for row in mat)):
        raise ParseError(f'expected a {n}x{n} matrix', no, source)
    return mat


def parse_representation(text: str, P: Presentation | None = None, ring: CoeffRing | None = None,
                         source=None) -> Representation:
    """Parse a representation file.

    Format::

        dim: 2
        ring: F2
        x4: [1, 0; 1, 1]
        default: [1, 1; 0, 1]

    Rows are separated by ``;`` (or written as ``[[a, b], [c, d]]``).  ``ring``
    overrides the ring named in the file.  When ``P`` is given the relators
    are checked and the first failing one is reported.
    """
    dim = file_ring = None
    images, default = [], None
    pending = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(':')
        if not sep:
            raise ParseError('expected "name: matrix"', no, source)
        key = key.strip()
        if key == 'dim':
            try:
                dim = int(rest)
            except ValueError:
                raise ParseError(f'bad dimension {rest.strip()!r}', no, source) from None
        elif key == 'ring':
            try:
                file_ring = ring_from_name(rest)
            except ParseError as exc:
                raise ParseError(str(exc), no, source) from None
        else:
            pending.append((no, key, rest))
    ring = ring or file_ring or QQ
    for no, key, rest in pending:
        mat = _parse_matrix(rest, ring, dim, no, source)
        if key == 'default':
            default = mat
        else:
            if P is not None and key not in P.generators:
                raise ParseError(f'unknown generator {key!r}', no, source)
            images.append((key, mat))
    if not images and default is None:
        default = matrices.identity(ring, dim or 1)
    try:
        rho = Representation(ring, tuple(images), default)
    except (VerificationError, NotAUnitError) as exc:
        raise VerificationError(f'{source + ": " if source else ""}{exc}') from None
    if P is not None:
        try:
            rho.verify(P)
        except VerificationError as exc:
            raise VerificationError(f'{source + ": " if source else ""}{exc}', exc.relator) from None
    return rho


def load_representation(path, P: Presentation | None = None, ring: CoeffRing | None = None):
    with open(path, encoding='utf-8') as fh:
        return parse_representation(fh.read(), P, ring, source=str(path))


def format_representation(rho: Representation) -> str:
    ring = rho.ring
    # full precision so that a written file verifies again when read back
    fmt = ring.format if ring.is_exact else (lambda x: ring.format(x, digits=17))

    def mat(m):
        return '[' + '; '.join(', '.join(fmt(x) for x in row) for row in m) + ']'

    out = [f'dim: {rho.n}', f'ring: {ring.name}']
    out += [f'{name}: {mat(m)}' for name, m in rho.images]
    if rho.default is not None:
        out.append(f'default: {mat(rho.default)}')
    return '\n'.join(out) + '\n'
