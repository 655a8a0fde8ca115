"""Exception types shared across the package."""


class QuadTileError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QuadTileError, ValueError):
    """A document or textual value could not be parsed."""


class NonPositiveRadicand(QuadTileError):
    """The radicand p must be a positive rational."""


class RationalSquareRoot(QuadTileError):
    """The radicand p is the square of a rational, so the field degenerates."""


class ContextMismatch(QuadTileError):
    """Two values with different radicands were combined."""


class DivisionByZero(QuadTileError, ZeroDivisionError):
    """Inversion or division by the zero element."""


class DegenerateShape(QuadTileError):
    """A shape or target ratio is not strictly positive."""


class RationalShape(QuadTileError):
    """The affine criterion requires an irrational shape ratio."""


class NotADissection(QuadTileError):
    """The tiling fails exact-cover verification."""


class NotAnImpossibleInstance(QuadTileError):
    """A certificate was requested for a tileable instance."""


class ConstructionFailure(QuadTileError):
    """Internal error: a reduction tiling could not be built."""


class WidthMismatch(QuadTileError):
    """Stacking requires both operands to have unit width."""


class NonPositiveScale(QuadTileError):
    """Rational scaling factors must be strictly positive."""


class ConjugateNotPositive(QuadTileError):
    """The construction requires a shape whose conjugate is positive."""


class ConjugateNotNegative(QuadTileError):
    """The construction requires a shape whose conjugate is negative."""


class NotTileable(QuadTileError):
    """Construction was requested for a NO instance."""


class InternalVerificationFailure(QuadTileError):
    """A freshly constructed tiling failed its own verification."""
