"""Command-line front end: ``twistalex compute|report|fuzz|batch``.

Exit codes: 0 success, 1 fuzz mismatch or batch errors, 2 unreadable or
malformed input, 3 representation fails a relator, 4 degenerate input.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .algebra.rings import ring_from_name
from .applications import fibered_check, free_genus_lower_bound, genus_lower_bound
from .errors import (DegeneratePresentationError, ParseError, PresentationError,
                     TwistalexError, VerificationError, ZeroInvariantError)
from .presentation import load_presentation, random_tietze_sequence
from .twisted import NormalizedInvariant, Representation, load_representation, normalized_invariant

__all__ = ['main', 'build_parser', 'invariant_fields', 'render_record']

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_VERIFY, EXIT_DEGENERATE = 0, 1, 2, 3, 4


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (ParseError, OSError, UnicodeDecodeError)):
        return EXIT_PARSE
    if isinstance(exc, VerificationError):
        return EXIT_VERIFY
    return EXIT_DEGENERATE


def _load(pres_path, rep_path, ring_name):
    ring = ring_from_name(ring_name) if ring_name else None
    P = load_presentation(pres_path)
    if rep_path:
        rho = load_representation(rep_path, P, ring)
    else:
        rho = Representation.trivial(ring) if ring else Representation.trivial()
        rho.verify(P)
    return P, rho


def _frac(x) -> str:
    return str(x)


def invariant_fields(inv: NormalizedInvariant) -> list:
    """Ordered ``(key, text)`` pairs describing an invariant."""
    ring = inv.ring
    out = [('invariant', str(inv.value)),
           ('eps', ring.format(ring.coerce(inv.eps))),
           ('eps_power', _frac(inv.eps_power)),
           ('n', str(inv.n))]
    if inv.data is not None:
        out += [('k', str(inv.data.k)), ('delta', str(inv.data.delta)), ('d', _frac(inv.data.d))]
    if inv.is_zero():
        out += [('deg', 'undefined')]
    else:
        deg, hdeg, ldeg, c = inv.degrees()
        out += [('deg', _frac(deg)), ('hdeg', _frac(hdeg)), ('ldeg', _frac(ldeg)),
                ('c', ring.format(c))]
    return out


def render_record(fields) -> str:
    return ''.join(f'{k}: {v}\n' for k, v in fields)


def _render_text(inv: NormalizedInvariant) -> str:
    fields = dict(invariant_fields(inv))
    lines = [fields['invariant']]
    if inv.eps_power and not inv.ring.eq(inv.ring.coerce(inv.eps), inv.ring.one):
        lines.append(f'  times eps^({fields["eps_power"]}) with eps = {fields["eps"]}')
    lines.append(f'eps = {fields["eps"]}, eps power {fields["eps_power"]}, n = {fields["n"]}')
    if 'k' in fields:
        lines.append(f'column k = {fields["k"]}, delta = {fields["delta"]}, d = {fields["d"]}')
    if fields['deg'] == 'undefined':
        lines.append('degrees: undefined (zero invariant)')
    else:
        lines.append(f'deg = {fields["deg"]}, hdeg = {fields["hdeg"]}, '
                     f'ldeg = {fields["ldeg"]}, c = {fields["c"]}')
    return '\n'.join(lines) + '\n'


# -- subcommands -------------------------------------------------------------------

def cmd_compute(args, out) -> int:
    P, rho = _load(args.presentation, args.representation, args.ring)
    inv = normalized_invariant(P, rho, args.column)
    out.write(render_record(invariant_fields(inv)) if args.format == 'record' else _render_text(inv))
    return EXIT_OK


def _yes(flag):
    return 'yes' if flag else 'no'


def cmd_report(args, out) -> int:
    P, rho = _load(args.presentation, args.representation, args.ring)
    inv = normalized_invariant(P, rho)
    if inv.is_zero():
        raise ZeroInvariantError('the invariant is zero; no degree data to report')
    fields = invariant_fields(inv)
    lines = [f'{k}: {v}' for k, v in fields]
    if args.genus is None:
        lines.append('fibered: skipped (no --genus given)')
    else:
        rep = fibered_check(P, rho, args.genus, invariant=inv)
        lines += [rep.verdict(),
                  f'  expected deg = n(2g-1) = {rep.expected}',
                  f'  deg_ok: {_yes(rep.deg_ok)}',
                  f'  hdeg_ok: {_yes(rep.hdeg_ok)}',
                  f'  coeff_ok: {_yes(rep.coeff_ok)} (eps exponent g-1/2)',
                  f'  coeff_ok_value: {_yes(rep.coeff_ok_value)} (eps exponent 2g-1 on the value part)']
    lines.append(f'g_f >= {free_genus_lower_bound(P, rho, inv)}')
    lines.append(f'g >= {genus_lower_bound(P, rho, inv)}')
    out.write('\n'.join(lines) + '\n')
    return EXIT_OK


def cmd_fuzz(args, out) -> int:
    P, rho = _load(args.presentation, args.representation, args.ring)
    base = normalized_invariant(P, rho)
    transcript = []
    Q = random_tietze_sequence(P, args.steps, args.seed, transcript)
    moved = normalized_invariant(Q, rho)
    if moved == base:
        out.write(f'PASS: invariant unchanged after {args.steps} moves (seed {args.seed})\n'
                  f'{base.value}\n')
        return EXIT_OK
    out.write(f'FAIL: invariant changed after {args.steps} moves (seed {args.seed})\n'
              f'before: {base.value} (eps power {base.eps_power})\n'
              f'after:  {moved.value} (eps power {moved.eps_power})\n'
              'moves:\n' + ''.join(f'  {i + 1}. {m}\n' for i, m in enumerate(transcript)))
    return EXIT_FAIL


# -- batch ---------------------------------------------------------------------------

def _read_manifest(path: Path):
    pairs = []
    for no, raw in enumerate(path.read_text(encoding='utf-8').splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ParseError('expected "presentation [representation]"', no, str(path))
        resolved = [str((path.parent / p) if not os.path.isabs(p) else Path(p)) for p in parts]
        pairs.append((resolved[0], resolved[1] if len(resolved) > 1 else None))
    return pairs


def _sha(path):
    if path is None:
        return hashlib.sha256(b'').hexdigest()
    with open(path, 'rb') as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _pair_key(pres, rep, ring):
    h = hashlib.sha256()
    for part in (_sha(pres), _sha(rep) if rep else 'trivial', ring or '', __version__):
        h.update(part.encode())
        h.update(b'\0')
    return h.hexdigest()


def _compute_record(job):
    pres, rep, ring = job
    try:
        P, rho = _load(pres, rep, ring)
        inv = normalized_invariant(P, rho)
        return True, invariant_fields(inv)
    except (TwistalexError, OSError, UnicodeDecodeError) as exc:
        return False, str(exc)


def _write_atomic(path: Path, text: str):
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix='.tmp-', suffix='.rec')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_record(path: Path) -> dict:
    out = {}
    for line in path.read_text(encoding='utf-8').splitlines():
        key, _, value = line.partition(': ')
        out[key] = value
    return out


def cmd_batch(args, out) -> int:
    manifest = Path(args.manifest)
    pairs = _read_manifest(manifest)
    cache = Path(args.cache) if args.cache else None
    if cache:
        cache.mkdir(parents=True, exist_ok=True)
    rows = [None] * len(pairs)
    todo = {}
    for i, (pres, rep) in enumerate(pairs):
        try:
            key = _pair_key(pres, rep, args.ring)
        except OSError as exc:
            rows[i] = ('error', str(exc))
            continue
        rec = cache / f'{key}.rec' if cache else None
        if rec is not None and rec.exists():
            rows[i] = ('cache-hit', _read_record(rec).get('invariant', '?'))
        else:
            todo.setdefault(key, []).append(i)
    jobs = [(key, (pairs[idx[0]][0], pairs[idx[0]][1], args.ring)) for key, idx in todo.items()]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_compute_record, [j for _, j in jobs]))
    else:
        results = [_compute_record(j) for _, j in jobs]
    for (key, (pres, rep, ring)), (ok, payload) in zip(jobs, results):
        first, *dups = todo[key]
        if ok:
            if cache:
                header = [('presentation', pres), ('presentation_sha256', _sha(pres)),
                          ('representation', rep or 'trivial'), ('representation_sha256', _sha(rep)),
                          ('ring_override', ring or 'none'), ('key', key)]
                _write_atomic(cache / f'{key}.rec', render_record(header + payload))
            value = dict(payload)['invariant']
            rows[first] = ('computed', value)
            for i in dups:
                rows[i] = ('duplicate', value)
        else:
            for i in (first, *dups):
                rows[i] = ('error', payload)
    status_w = max([len('status')] + [len(r[0]) for r in rows])
    pres_w = max([len('presentation')] + [len(os.path.basename(p)) for p, _ in pairs])
    rep_w = max([len('representation')] + [len(os.path.basename(r or 'trivial')) for _, r in pairs])
    out.write(f'{"status":<{status_w}}  {"presentation":<{pres_w}}  {"representation":<{rep_w}}  result\n')
    for (pres, rep), (status, value) in zip(pairs, rows):
        out.write(f'{status:<{status_w}}  {os.path.basename(pres):<{pres_w}}  '
                  f'{os.path.basename(rep or "trivial"):<{rep_w}}  {value}\n')
    errors = sum(1 for s, _ in rows if s == 'error')
    out.write(f'{len(pairs)} pair{"s" * (len(pairs) != 1)}, '
              f'{errors} error{"s" * (errors != 1)}\n')
    return EXIT_FAIL if errors else EXIT_OK


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='twistalex',
                                     description='Normalized twisted Alexander invariants of knots.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    def pair(p):
        p.add_argument('presentation', help='presentation file (relators or PD code)')
        p.add_argument('representation', nargs='?', help='representation file (default: trivial, 1-dim)')
        p.add_argument('--ring', help='override the coefficient ring: Z, Q, F<p> or C')

    p = sub.add_parser('compute', help='print the normalized invariant')
    pair(p)
    p.add_argument('--column', type=int, help='force the Fox Jacobian column k (1-based)')
    p.add_argument('--format', choices=('text', 'record'), default='text')
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser('report', help='fibering obstruction and genus bounds')
    pair(p)
    p.add_argument('--genus', type=int, help='candidate genus for the fibering test')
    p.set_defaults(func=cmd_report)

    p = sub.add_parser('fuzz', help='check invariance under random Tietze moves')
    pair(p)
    p.add_argument('--steps', type=int, default=25)
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser('batch', help='compute every pair listed in a manifest')
    p.add_argument('manifest', help='one "presentation [representation]" pair per line')
    p.add_argument('--cache', help='directory of content-addressed result records')
    p.add_argument('--ring', help='override the coefficient ring for every pair')
    p.add_argument('--jobs', type=int, default=1, help='worker processes')
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (TwistalexError, OSError, UnicodeDecodeError) as exc:
        if isinstance(exc, PresentationError) and not isinstance(exc, ParseError):
            code = EXIT_DEGENERATE
        else:
            code = _exit_code(exc)
        print(f'twistalex: error: {exc}', file=sys.stderr)
        return code
    except ValueError as exc:
        print(f'twistalex: error: {exc}', file=sys.stderr)
        return EXIT_PARSE


def main_exit():
    sys.exit(main())
