import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import words
from twistalex import knots
from twistalex.errors import AbelianizationError, ParseError, PresentationError
from twistalex.freegroup import Word
from twistalex.presentation import (PDCode, Presentation, abelianize, format_presentation,
                                    parse_pd, parse_presentation, random_tietze_sequence,
                                    smith_normal_form, tietze_Ia, tietze_Ib, tietze_Ic, tietze_II,
                                    wirtinger_from_pd)

TREFOIL = Presentation.from_strings('x y', ['x^2 y^-3'], 'x y^-1')


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _det(M):
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)) if M[0][j])


@settings(max_examples=80)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_smith_normal_form(A):
    D, U, V = smith_normal_form(A)
    assert _matmul(_matmul(U, A), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(len(A), len(A[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


def test_abelianization_examples():
    assert abelianize(TREFOIL) == {'x': 3, 'y': 2}
    assert set(knots.trefoil_pd().alpha) == {1}
    assert set(knots.knot_11n73().alpha) == {1}
    assert knots.unknot().alpha == (1,)
    # mapping torus of a trefoil monodromy: fibre generators have alpha 0
    M = Presentation.from_strings('a b h', ['h a h^-1 b^-1', 'h b h^-1 b^-1 a'], 'h')
    assert M.alpha == (0, 0, 1)


def test_alpha_kills_relators_and_meridian():
    for P in (TREFOIL, knots.knot_11n73(), knots.torus_knot(3, 4), knots.figure_eight_pd()):
        assert all(P.alpha_of(r) == 0 for r in P.relators)
        assert P.alpha_of(P.meridian) == 1


def test_declared_alpha_is_checked():
    text = 'gens: x y\nmeridian: x y^-1\nalpha: 3 2\nx^2 y^-3\n'
    assert parse_presentation(text).alpha == (3, 2)
    with pytest.raises(AbelianizationError):
        parse_presentation(text.replace('alpha: 3 2', 'alpha: 2 3'))


@pytest.mark.parametrize('gens, rels, mer', [
    ('x y', ['x y x^-1 y^-1'], 'x'),        # Z^2
    ('x y', ['x^2'], 'x'),                   # torsion
    ('x y', ['x y^-1'], 'x^2'),              # meridian is not a generator of H_1
])
def test_abelianization_failures(gens, rels, mer):
    with pytest.raises(AbelianizationError):
        Presentation.from_strings(gens, rels, mer)


def test_deficiency_enforced():
    with pytest.raises(PresentationError):
        Presentation.from_strings('x y', [], 'x')
    with pytest.raises(PresentationError):
        Presentation.from_strings('x y', ['x y^-1', 'x y^-1'], 'x')


def test_tietze_examples():
    r = TREFOIL.relators[0]
    assert tietze_Ia(TREFOIL, 0).relators == (r.inverse(),)
    x = Word.gen(0)
    assert tietze_Ib(TREFOIL, 0, x).relators == (x * r * x.inverse(),)
    P = tietze_II(TREFOIL, TREFOIL.word('x y'))
    assert P.generators == ('x', 'y', 'y0')
    assert P.relators[-1] == Word.gen(2) * TREFOIL.word('x y').inverse()
    assert P.alpha == (3, 2, 5)
    Q = tietze_II(P, P.word('y0 x'))
    R = tietze_Ic(Q, 0, 1)
    assert R.relators[0] == Q.relators[0] * Q.relators[1]


def test_tietze_errors():
    with pytest.raises(PresentationError):
        tietze_Ia(TREFOIL, 1)
    P = tietze_II(TREFOIL, Word.gen(0))
    with pytest.raises(PresentationError):
        tietze_Ic(P, 0, 0)
    with pytest.raises(PresentationError):
        tietze_II(TREFOIL, Word.gen(0), name='x')
    with pytest.raises(PresentationError):
        tietze_Ib(TREFOIL, 0, Word.gen(5))


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6), st.integers(0, 30))
def test_random_tietze_keeps_invariants(seed, steps):
    P = knots.trefoil_pd()
    Q = random_tietze_sequence(P, steps, seed)
    assert len(Q.relators) == Q.m - 1
    assert Q.alpha[:P.m] == P.alpha
    assert Q.meridian == P.meridian
    assert random_tietze_sequence(P, steps, seed) == Q


def test_random_tietze_zero_steps():
    P = knots.knot_11n73()
    assert random_tietze_sequence(P, 0, 7) is P


def test_random_tietze_transcript():
    notes = []
    random_tietze_sequence(TREFOIL, 12, 1, notes)
    assert len(notes) == 12 and all(n.split('(')[0] in {'Ia', 'Ib', 'Ic', 'II'} for n in notes)


def test_wirtinger_trefoil():
    P = knots.trefoil_pd()
    assert P.m == 3 and len(P.relators) == 2
    assert P.meridian == Word.gen(0)
    assert all(len(r) == 4 for r in P.relators)


def test_wirtinger_relator_shape():
    for code in knots.PD_CODES.values():
        P = wirtinger_from_pd(PDCode(code))
        assert len(P.relators) == len(code) - 1
        for r in P.relators:
            assert len(r) == 4 and sum(r.exponent_sums(P.m)) == 0


def test_wirtinger_unknot():
    P = wirtinger_from_pd(PDCode(()))
    assert P.m == 1 and P.relators == ()
    kink = wirtinger_from_pd(PDCode([(1, 1, 2, 2)]))
    assert kink.m == 1 and kink.relators == ()


def test_pd_validation():
    with pytest.raises(PresentationError):
        PDCode([(1, 2, 3, 4)])                              # labels appear once
    hopf = [(4, 1, 3, 2), (2, 3, 1, 4)]
    with pytest.raises(PresentationError):
        wirtinger_from_pd(PDCode(hopf))                     # two components


def test_pd_explicit_signs_override():
    code = knots.PD_CODES['3_1']
    a = wirtinger_from_pd(PDCode(code))
    b = wirtinger_from_pd(PDCode(code, (1, 1, 1)))
    assert a == b


def test_parse_pd_file():
    pd = parse_pd('# trefoil\nX 1 5 2 4\nX[3,1,4,6]\nX 5 3 6 2 +\n')
    assert pd.crossings[1] == (3, 1, 4, 6) and pd.signs == (None, None, 1)
    with pytest.raises(ParseError) as err:
        parse_pd('X 1 2 3\n')
    assert err.value.line == 1
    with pytest.raises(ParseError):
        parse_pd('X 1 5 2 4 *\n')


def test_parse_presentation_pd_autodetect():
    P = parse_presentation('X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n')
    assert P == knots.trefoil_pd()


def test_parse_presentation_errors_carry_line_numbers():
    text = 'gens: x y\nmeridian: x y^-1\n\n# comment\nx^2 q^-3\n'
    with pytest.raises(ParseError) as err:
        parse_presentation(text, source='f.pres')
    assert err.value.line == 5 and 'f.pres:5:' in str(err.value)
    with pytest.raises(ParseError):
        parse_presentation('meridian: x\nx\n')
    with pytest.raises(ParseError):
        parse_presentation('gens: x y\nx^2 y^-3\n')
    with pytest.raises(ParseError) as err:
        parse_presentation('gens: x 2y\nmeridian: x\n')
    assert err.value.line == 1


def test_format_parse_roundtrip():
    for P in (TREFOIL, knots.knot_11n73(), knots.figure_eight_pd(), knots.unknot()):
        assert parse_presentation(format_presentation(P)) == P


def test_11n73_relators_as_printed():
    P = knots.knot_11n73()
    assert P.m == 11 and len(P.relators) == 10
    assert P.relators[0] == P.word('x5 x1 x5^-1 x2^-1')
    assert P.relators[-1] == P.word('x2 x10 x2^-1 x11^-1')


@given(words(2, 10))
def test_from_strings_meridian(wd):
    P = Presentation.from_strings('x y', ['x y^-1'])
    assert P.meridian == Word.gen(0)
    assert P.alpha_of(wd) == sum(e for _, e in wd.letters)
