"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`TwistalexError`, which is itself a :class:`ValueError`, so callers
that only care about "bad input" can keep catching ``ValueError``.
"""


class TwistalexError(ValueError):
    pass


class RingMismatchError(TwistalexError):
    """Two operands live over different coefficient rings."""


class NotAUnitError(TwistalexError, ZeroDivisionError):
    """Division by an element that is not invertible in its ring."""


class ParseError(TwistalexError):
    """Malformed textual input.  ``line`` is 1-based when known."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ''
        if source is not None:
            where += f'{source}:'
        if line is not None:
            where += f'{line}:'
        super().__init__(f'{where} {message}' if where else message)


class PresentationError(TwistalexError):
    """The presentation violates a structural invariant (deficiency, indices...)."""


class AbelianizationError(PresentationError):
    """H_1 of the presented group is not infinite cyclic, or the meridian misses it."""


class VerificationError(TwistalexError):
    """A representation does not send some relator to the identity."""

    def __init__(self, message, relator=None):
        self.relator = relator
        super().__init__(message)


class DegeneratePresentationError(TwistalexError):
    """A determinant needed for the normalization vanishes."""


class BadColumnError(DegeneratePresentationError):
    """The chosen column has a generator with zero abelianization."""


class VanishingDenominatorError(DegeneratePresentationError):
    """det Phi(x_k - 1) is zero for the requested column."""

    def __init__(self, message, k=None):
        self.k = k
        super().__init__(message)


class ZeroInvariantError(TwistalexError):
    """An operation needs a nonzero invariant but got the zero object."""
