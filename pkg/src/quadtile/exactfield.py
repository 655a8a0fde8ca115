"""Exact arithmetic in Q and Q[sqrt(p)].

Values are immutable and every decision-path operation is exact: rationals
are arbitrary-precision ``fractions.Fraction`` and field elements carry
their radicand so that mixing different fields is a hard error.  Floating
point appears only in :meth:`Quad.approx`, which exists for rendering.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContextMismatch,
    DivisionByZero,
    NonPositiveRadicand,
    ParseError,
    RationalSquareRoot,
)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Rational:
    """Parse the exact textual form ``"num"`` or ``"num/den"``.

    Decimals, exponents and whitespace are rejected; only plain integers
    with an optional positive denominator are accepted.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational in num[/den] form: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(q: Rational) -> str:
    return str(q)


def rational_sign(q: Rational) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def is_rational_square(q: Rational) -> bool:
    """Exact test whether q is the square of a rational.

    With q = s/t in lowest terms this holds iff s and t are both perfect
    squares; checked with integer square roots, no floating point.
    """
    if q < 0:
        return False
    s, t = q.numerator, q.denominator
    return math.isqrt(s) ** 2 == s and math.isqrt(t) ** 2 == t


@dataclass(frozen=True)
class FieldContext:
    """The field Q[sqrt(p)] for a fixed positive non-square rational p."""

    p: Rational

    def __post_init__(self) -> None:
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if p <= 0:
            raise NonPositiveRadicand(f"radicand must be positive, got {p}")
        if is_rational_square(p):
            raise RationalSquareRoot(
                f"sqrt({p}) is rational; the instance degenerates to Q"
            )

    def quad(self, e: Rational | int | str, f: Rational | int | str = 0) -> Quad:
        if isinstance(e, str):
            e = parse_rational(e)
        if isinstance(f, str):
            f = parse_rational(f)
        return Quad(Fraction(e), Fraction(f), self)

    def zero(self) -> Quad:
        return self.quad(0, 0)

    def one(self) -> Quad:
        return self.quad(1, 0)

    def sqrt_p(self) -> Quad:
        return self.quad(0, 1)

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p})"


def validate_context(p: Rational | int) -> FieldContext:
    """Build the field context for radicand p, rejecting degenerate fields."""
    return FieldContext(Fraction(p))


@dataclass(frozen=True)
class Quad:
    """An element e + f*sqrt(p) of Q[sqrt(p)], with exact components.

    The representation is unique because sqrt(p) is irrational, so
    structural equality coincides with value equality.
    """

    e: Rational
    f: Rational
    ctx: FieldContext

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", Fraction(self.e))
        object.__setattr__(self, "f", Fraction(self.f))

    # -- context plumbing -------------------------------------------------

    def _coerce(self, other: Quad | Rational | int) -> Quad:
        if isinstance(other, Quad):
            if other.ctx.p != self.ctx.p:
                raise ContextMismatch(
                    f"cannot combine radicands {self.ctx.p} and {other.ctx.p}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Quad(Fraction(other), Fraction(0), self.ctx)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Quad | Rational | int) -> Quad:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Quad(self.e + v.e, self.f + v.f, self.ctx)

    __radd__ = __add__

    def __neg__(self) -> Quad:
        return Quad(-self.e, -self.f, self.ctx)

    def __sub__(self, other: Quad | Rational | int) -> Quad:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Quad(self.e - v.e, self.f - v.f, self.ctx)

    def __rsub__(self, other: Quad | Rational | int) -> Quad:
        return (-self) + other

    def __mul__(self, other: Quad | Rational | int) -> Quad:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        return Quad(
            self.e * v.e + p * self.f * v.f,
            self.e * v.f + self.f * v.e,
            self.ctx,
        )

    __rmul__ = __mul__

    def inv(self) -> Quad:
        """Multiplicative inverse (e - f*sqrt(p)) / (e^2 - p*f^2)."""
        if self.e == 0 and self.f == 0:
            raise DivisionByZero("inverse of zero")
        n = self.norm()
        # n == 0 for a nonzero element would make sqrt(p) rational.
        return Quad(self.e / n, -self.f / n, self.ctx)

    def __truediv__(self, other: Quad | Rational | int) -> Quad:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * v.inv()

    def __rtruediv__(self, other: Quad | Rational | int) -> Quad:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return v * self.inv()

    def conj(self) -> Quad:
        """Field conjugate e - f*sqrt(p): an involutive ring homomorphism."""
        return Quad(self.e, -self.f, self.ctx)

    def norm(self) -> Rational:
        """The rational e^2 - p*f^2 = self * conj(self); zero only at zero."""
        return self.e * self.e - self.ctx.p * self.f * self.f

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of e + f*sqrt(p), with no floating point.

        When e and f disagree in sign the answer reduces to comparing
        e^2 with p*f^2; equality there is impossible for f != 0 because
        sqrt(p) is irrational.
        """
        se = rational_sign(self.e)
        sf = rational_sign(self.f)
        if sf == 0:
            return se
        if se == 0 or se == sf:
            return sf
        d = rational_sign(self.ctx.p * self.f * self.f - self.e * self.e)
        assert d != 0, "e^2 == p*f^2 contradicts sqrt(p) irrational"
        return sf * d

    def is_positive(self) -> bool:
        return self.sign() > 0

    def is_zero(self) -> bool:
        return self.e == 0 and self.f == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _cmp_sign(self, other: Quad | Rational | int) -> int:
        v = self._coerce(other)
        if v is NotImplemented:
            raise TypeError(f"cannot compare Quad with {type(other).__name__}")
        return (self - v).sign()

    def __lt__(self, other: Quad | Rational | int) -> bool:
        return self._cmp_sign(other) < 0

    def __le__(self, other: Quad | Rational | int) -> bool:
        return self._cmp_sign(other) <= 0

    def __gt__(self, other: Quad | Rational | int) -> bool:
        return self._cmp_sign(other) > 0

    def __ge__(self, other: Quad | Rational | int) -> bool:
        return self._cmp_sign(other) >= 0

    # -- rendering only ----------------------------------------------------

    def approx(self) -> float:
        """binary64 value of e + f*sqrt(p); renderer use only, never decisions."""
        return float(self.e) + float(self.f) * math.sqrt(float(self.ctx.p))

    def __str__(self) -> str:
        return f"{self.e}{'+' if self.f >= 0 else ''}{self.f}√{self.ctx.p}"

    def __repr__(self) -> str:
        return f"Quad({self.e}, {self.f}, p={self.ctx.p})"


def quad_to_obj(u: Quad) -> dict:
    """Serialize as ``{"e": ..., "f": ...}`` with exact string rationals."""
    return {"e": format_rational(u.e), "f": format_rational(u.f)}


def quad_from_obj(ctx: FieldContext, obj: object, where: str = "value") -> Quad:
    if not isinstance(obj, dict) or set(obj) != {"e", "f"}:
        raise ParseError(f"{where}: expected an object with keys 'e' and 'f'")
    try:
        e = parse_rational(obj["e"])
        f = parse_rational(obj["f"])
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None
    return ctx.quad(e, f)
