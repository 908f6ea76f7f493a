"""Normalized twisted Alexander invariants of knots.

Start from a knot group presentation (or a PD code) and a matrix
representation; :func:`normalized_invariant` returns the invariant with the
unit ambiguity removed.

>>> from twistalex import knots, normalized_invariant, conway_polynomial
>>> str(normalized_invariant(knots.knot_11n73(), knots.rep_11n73()).value)
't^5 + t + t^-1 + t^-5'
>>> str(conway_polynomial(knots.figure_eight_pd()))
'-z^2 + 1'
"""

__version__ = '0.1.0'

from .errors import (TwistalexError, RingMismatchError, NotAUnitError, ParseError,
                     PresentationError, AbelianizationError, VerificationError,
                     DegeneratePresentationError, BadColumnError, VanishingDenominatorError,
                     ZeroInvariantError)
from .algebra import (CoeffRing, Integers, Rationals, PrimeField, ApproxComplex, ZZ, QQ, CC,
                      ring_from_name, HalfLaurent, RationalFunction, Degrees, degrees,
                      PolyMatrix, det_exact, det_numeric, det)
from .freegroup import Word, GroupRingElement, fox_derivative, parse_word, format_word
from .presentation import (Presentation, PDCode, smith_normal_form, abelianize,
                           wirtinger_from_pd, parse_pd, parse_presentation, format_presentation,
                           load_presentation, tietze_Ia, tietze_Ib, tietze_Ic, tietze_II,
                           random_tietze_sequence)
from .twisted import (Representation, NormalizationData, NormalizedInvariant, phi_apply,
                      fox_jacobian, wada_invariant, normalization_data, normalized_invariant,
                      dagger, conjugate_invariant, parse_representation, load_representation,
                      format_representation)
from .applications import (ConwayPolynomial, alexander_polynomial, conway_polynomial,
                           FiberingReport, fibered_check, free_genus_lower_bound,
                           genus_lower_bound)
from . import knots
