"""Matrices of :class:`HalfLaurent` entries and their determinants.

``det_exact`` works in two phases.  First, entries that are units of the
Laurent ring (a single monomial with unit coefficient) are used as pivots
for ordinary sparse Gaussian elimination; Fox Jacobians of Wirtinger-type
presentations are full of such entries, and eliminating them keeps the
dense phase small.  The remaining Schur complement is then cleared of a
common monomial per row and handed to fraction-free (Bareiss) elimination
over the polynomial ring.

``det_numeric`` is the floating point route: evaluate at roots of unity and
interpolate with an FFT.
"""

from __future__ import annotations

import numpy as np

from ..errors import RingMismatchError, TwistalexError
from . import dense
from .laurent import HalfLaurent, _lmul, _lscale, _lsub
from .rings import CoeffRing

__all__ = ['PolyMatrix', 'det_exact', 'det_numeric', 'det']


class PolyMatrix:
    """Rectangular matrix with :class:`HalfLaurent` entries (immutable)."""

    __slots__ = ('ring', 'rows', 'cols', 'entries')

    def __init__(self, ring: CoeffRing, entries, cols=None):
        self.ring = ring
        rows = []
        for row in entries:
            new = []
            for x in row:
                if isinstance(x, HalfLaurent):
                    if x.ring != ring:
                        raise RingMismatchError(f'{x.ring} vs {ring}')
                    new.append(x)
                elif isinstance(x, dict):
                    new.append(HalfLaurent(ring, x))
                else:
                    new.append(HalfLaurent.constant(ring, x))
            rows.append(tuple(new))
        self.entries = tuple(rows)
        self.rows = len(rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise TwistalexError('ragged matrix')
            self.cols = widths.pop()
        else:
            self.cols = cols if cols is not None else 0

    @classmethod
    def empty(cls, ring):
        return cls(ring, [], cols=0)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self):
        return self.rows, self.cols

    def raw(self):
        """Rows as lists of bare ``{exp: coeff}`` dicts."""
        return [[dict(x.coeffs) for x in row] for row in self.entries]

    def map(self, f, ring=None):
        ring = ring or self.ring
        return PolyMatrix(ring, [[f(x) for x in row] for row in self.entries], cols=self.cols)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return '\n'.join('[' + ', '.join(str(x) for x in row) + ']' for row in self.entries)

    def __repr__(self):
        return f'PolyMatrix({self.ring}, {self.rows}x{self.cols})'


def _parity(perm):
    """+1 for an even permutation of ``range(len(perm))``, -1 otherwise."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _unit_phase(ring, rows, n):
    """Sparse elimination on unit pivots.

    ``rows`` is a list of ``{col: laurent dict}``; it is modified in place.
    Returns ``(pivots, factor)`` where pivots is a list of (row, col) and
    factor the Laurent product of pivot values.
    """
    col_rows = {}
    for i, row in enumerate(rows):
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    active = set(range(n))
    pivots = []
    factor = {0: ring.one}
    while active:
        best, best_cost = None, None
        for r in active:
            row = rows[r]
            lr = len(row) - 1
            for c, v in row.items():
                if len(v) != 1:
                    continue
                (coef,) = v.values()
                if not ring.is_unit(coef):
                    continue
                cost = lr * (len(col_rows[c]) - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (r, c), cost
                    if cost == 0:
                        break
            if best_cost == 0:
                break
        if best is None:
            break
        r, c = best
        ((e, coef),) = rows[r][c].items()
        inv_c = ring.inv(coef)
        prow = rows[r]
        for i in list(col_rows[c]):
            if i == r:
                continue
            f = _lscale(ring, rows[i][c], inv_c, -e)
            target = rows[i]
            del target[c]
            for j, v in prow.items():
                if j == c:
                    continue
                new = _lsub(ring, target.get(j, {}), _lmul(ring, f, v))
                if new:
                    if j not in target:
                        col_rows[j].add(i)
                    target[j] = new
                elif j in target:
                    del target[j]
                    col_rows[j].discard(i)
        for j in prow:
            col_rows[j].discard(r)
        col_rows[c] = set()
        del col_rows[c]
        active.discard(r)
        pivots.append((r, c))
        factor = {k + e: ring.mul(x, coef) for k, x in factor.items()}
    return pivots, factor


def _bareiss(ring, m):
    """Determinant of a square list-of-dense-polys matrix, fraction free."""
    k_size = len(m)
    sign = 1
    prev = [ring.one]
    for k in range(k_size - 1):
        cands = [i for i in range(k, k_size) if m[i][k]]
        if not cands:
            return []
        p = min(cands, key=lambda i: len(m[i][k]))
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        rowk = m[k]
        trivial_prev = len(prev) == 1 and prev[0] == ring.one
        for i in range(k + 1, k_size):
            rowi = m[i]
            mik = rowi[k]
            for j in range(k + 1, k_size):
                x = dense.mul(ring, rowi[j], piv)
                if mik and rowk[j]:
                    x = dense.sub(ring, x, dense.mul(ring, mik, rowk[j]))
                if not trivial_prev and x:
                    x = dense.div_exact(ring, x, prev)
                rowi[j] = x
            rowi[k] = []
        prev = piv
    last = m[k_size - 1][k_size - 1]
    return last if sign == 1 else [ring.neg(c) for c in last]


def det_exact(M: PolyMatrix) -> HalfLaurent:
    """Exact determinant over an exact integral domain."""
    ring = M.ring
    if not ring.is_exact:
        raise TwistalexError('det_exact needs an exact coefficient ring; use det_numeric')
    if M.rows != M.cols:
        raise TwistalexError(f'determinant of a non-square {M.rows}x{M.cols} matrix')
    n = M.rows
    if n == 0:
        return HalfLaurent.one(ring)
    rows = [{j: dict(x.coeffs) for j, x in enumerate(row) if x.coeffs} for row in M.entries]
    if any(not r for r in rows):
        return HalfLaurent.zero(ring)
    pivots, factor = _unit_phase(ring, rows, n)
    used_r = {r for r, _ in pivots}
    used_c = {c for _, c in pivots}
    rest_r = [i for i in range(n) if i not in used_r]
    rest_c = [j for j in range(n) if j not in used_c]
    sign = _parity([r for r, _ in pivots] + rest_r) * _parity([c for _, c in pivots] + rest_c)

    if rest_r:
        sub = [[rows[i].get(j, {}) for j in rest_c] for i in rest_r]
        if any(not any(row) for row in sub):
            return HalfLaurent.zero(ring)
        mins = [min(min(x) for x in row if x) for row in sub]
        step = dense.exponent_step(e - mn for row, mn in zip(sub, mins) for x in row for e in x) or 1
        mat = []
        for row, mn in zip(sub, mins):
            mat.append([dense.fill(ring, dense.from_laurent(x, mn, step)[0]) if x else [] for x in row])
        poly = _bareiss(ring, mat)
        if not poly:
            return HalfLaurent.zero(ring)
        rest = dense.to_laurent(ring, poly, sum(mins), step)
        factor = _lmul(ring, factor, rest)
    if sign < 0:
        factor = {e: ring.neg(c) for e, c in factor.items()}
    return HalfLaurent._raw(ring, factor)


def det_numeric(M: PolyMatrix) -> HalfLaurent:
    """Determinant by evaluation at roots of unity and FFT interpolation.

    Each row is first divided by its lowest monomial, so every entry is a
    polynomial in ``u = s^step``; the determinant then has degree at most
    ``D`` = the sum of the row spans, and ``D + 1`` samples determine it.
    """
    ring = M.ring
    if M.rows != M.cols:
        raise TwistalexError(f'determinant of a non-square {M.rows}x{M.cols} matrix')
    n = M.rows
    if n == 0:
        return HalfLaurent.one(ring)
    raw = M.raw()
    mins, spans = [], []
    for row in raw:
        exps = [e for x in row for e in x]
        if not exps:
            return HalfLaurent.zero(ring)
        mins.append(min(exps))
        spans.append(max(exps) - min(exps))
    step = dense.exponent_step(e - mn for row, mn in zip(raw, mins) for x in row for e in x) or 1
    D = sum(spans) // step
    N = D + 1
    points = np.exp(2j * np.pi * np.arange(N) / N)
    if len(np.unique(np.round(points, 12))) != N:
        raise TwistalexError('interpolation failure: duplicate sample points')
    # A[i, j, :] = coefficient vector of entry (i, j) in u
    coeffs = np.zeros((n, n, N), dtype=complex)
    for i, (row, mn) in enumerate(zip(raw, mins)):
        for j, x in enumerate(row):
            for e, c in x.items():
                coeffs[i, j, (e - mn) // step] = complex(c)
    # evaluate every entry at every sample point: sum_k c_k * w^k
    powers = points[:, None] ** np.arange(N)[None, :]          # (N, N)
    values = np.einsum('ijk,pk->pij', coeffs, powers)
    dets = np.linalg.det(values)
    poly = np.fft.fft(dets) / N
    shift = sum(mins)
    out = {}
    for k, c in enumerate(poly):
        c = complex(c)
        if not ring.is_zero(c):
            out[shift + k * step] = c
    return HalfLaurent._raw(ring, out)


def det(M: PolyMatrix) -> HalfLaurent:
    """Dispatch on the ring: exact elimination or numeric interpolation."""
    return det_exact(M) if M.ring.is_exact else det_numeric(M)
