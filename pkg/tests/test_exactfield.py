import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import iv

from conftest import P_POOL
from quadtile.errors import (
    ContextMismatch,
    DivisionByZero,
    NonPositiveRadicand,
    ParseError,
    RationalSquareRoot,
)
from quadtile.exactfield import (
    format_rational,
    is_rational_square,
    parse_rational,
    quad_from_obj,
    quad_to_obj,
    validate_context,
)

CTX = validate_context(Fraction(2))
CTX83 = validate_context(Fraction(8, 3))

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=32)
quads = st.builds(CTX.quad, rationals, rationals)
nonzero_quads = quads.filter(lambda u: not u.is_zero())


def test_parse_rational_grammar():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational("0") == 0


@pytest.mark.parametrize(
    "text", ["", "1.5", "+3", " 1", "1 ", "1/-2", "a", "1/2/3", "1/0", "--1", "0x1"]
)
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_format_round_trip():
    for q in (Fraction(3), Fraction(-3, 2), Fraction(0), Fraction(7, 1)):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def test_is_rational_square():
    assert is_rational_square(Fraction(9, 4))
    assert is_rational_square(Fraction(1))
    assert not is_rational_square(Fraction(2))
    assert not is_rational_square(Fraction(8, 3))


def test_validate_context():
    assert validate_context(Fraction(2)).p == 2
    assert validate_context(Fraction(8, 3)).p == Fraction(8, 3)
    with pytest.raises(RationalSquareRoot):
        validate_context(Fraction(9, 4))
    with pytest.raises(RationalSquareRoot):
        validate_context(Fraction(4))
    with pytest.raises(NonPositiveRadicand):
        validate_context(Fraction(-2))
    with pytest.raises(NonPositiveRadicand):
        validate_context(Fraction(0))


def test_add_examples():
    one_one = CTX.quad(1, 1)
    assert one_one + CTX.quad(1, -1) == CTX.quad(2, 0)
    assert CTX.zero() + one_one == one_one
    assert CTX.quad(3, 1) + CTX.quad(-1, 2) == CTX.quad(2, 3)


def test_mul_examples():
    assert CTX.quad(1, 1) * CTX.quad(-1, 1) == CTX.one()
    assert CTX.one() * CTX.quad(5, -2) == CTX.quad(5, -2)
    x = CTX.quad(1, 1)
    assert x * x == CTX.quad(3, 2)


def test_inv_examples():
    assert CTX.quad(1, 1).inv() == CTX.quad(-1, 1)
    assert CTX.quad(2, 0).inv() == CTX.quad(Fraction(1, 2), 0)
    assert CTX.quad(3, 1).inv() == CTX.quad(Fraction(3, 7), Fraction(-1, 7))
    with pytest.raises(DivisionByZero):
        CTX.zero().inv()


def test_conj_examples():
    assert CTX.quad(1, 1).conj() == CTX.quad(1, -1)
    u = CTX.quad(Fraction(3, 5), Fraction(-7, 2))
    assert u.conj().conj() == u
    a, b = CTX.quad(1, 1), CTX.quad(3, 1)
    assert (a * b).conj() == a.conj() * b.conj()


def test_sign_examples():
    assert CTX.quad(1, -1).sign() == -1
    assert CTX.quad(3, -2).sign() == 1
    assert CTX.zero().sign() == 0
    assert CTX.quad(0, 1).sign() == 1
    assert CTX.quad(0, -1).sign() == -1
    assert CTX.quad(-3, 2).sign() == -1


def test_comparisons():
    assert CTX.quad(1, 1) > CTX.one()
    assert CTX.quad(1, -1) < CTX.zero()
    assert CTX.quad(1, 1) >= CTX.quad(1, 1)
    assert CTX.sqrt_p() > 1


def test_approx():
    assert abs(CTX.quad(1, 1).approx() - 2.414213562373095) < 1e-12
    assert CTX.quad(2, 0).approx() == 2.0
    assert abs(CTX.sqrt_p().approx() - 1.4142135623730951) < 1e-12


def test_context_mismatch_is_an_error():
    other = validate_context(Fraction(3))
    with pytest.raises(ContextMismatch):
        CTX.quad(1, 1) + other.quad(1, 1)
    with pytest.raises(ContextMismatch):
        CTX.quad(1, 1) * other.quad(1, 1)


def test_quad_obj_round_trip():
    u = CTX83.quad(Fraction(-3, 2), Fraction(7, 5))
    assert quad_from_obj(CTX83, quad_to_obj(u), "t") == u
    with pytest.raises(ParseError):
        quad_from_obj(CTX, {"e": "1"}, "t")
    with pytest.raises(ParseError):
        quad_from_obj(CTX, {"e": "1", "f": "0.5"}, "t")
    with pytest.raises(ParseError):
        quad_from_obj(CTX, ["1", "2"], "t")


@given(quads, quads, quads)
@settings(max_examples=150)
def test_field_axioms_add_mul(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert (u * v) * w == u * (v * w)
    assert u * v == v * u
    assert u * (v + w) == u * v + u * w


@given(quads)
@settings(max_examples=150)
def test_additive_inverse(u):
    assert u + (-u) == CTX.zero()
    assert u - u == CTX.zero()


@given(nonzero_quads)
@settings(max_examples=150)
def test_multiplicative_inverse(u):
    assert u * u.inv() == CTX.one()
    assert (CTX.one() / u) * u == CTX.one()


@given(quads, quads)
@settings(max_examples=150)
def test_conj_is_ring_homomorphism(u, v):
    assert (u + v).conj() == u.conj() + v.conj()
    assert (u * v).conj() == u.conj() * v.conj()
    assert u.conj().conj() == u


@given(quads, quads)
@settings(max_examples=150)
def test_norm_is_multiplicative(u, v):
    assert (u * v).norm() == u.norm() * v.norm()


@given(quads)
@settings(max_examples=150)
def test_norm_zero_only_at_zero(u):
    # would otherwise make sqrt(p) rational
    assert (u.norm() == 0) == u.is_zero()


@given(quads, quads)
@settings(max_examples=150)
def test_components_stay_reduced(u, v):
    w = u * v + u
    for comp in (w.e, w.f):
        assert comp.denominator > 0
        assert math.gcd(abs(comp.numerator), comp.denominator) == 1


def _interval_value(e: Fraction, f: Fraction, sqrt_p):
    ie = iv.mpf(e.numerator) / iv.mpf(e.denominator)
    if_ = iv.mpf(f.numerator) / iv.mpf(f.denominator)
    return ie + if_ * sqrt_p


def test_sign_agrees_with_200bit_interval_oracle():
    """Exact sign vs 200-bit interval arithmetic on 10^5 random values,
    including near-cancellation pairs e very close to f*sqrt(p)."""
    iv.prec = 200
    rng = random.Random(20260824)
    contexts = {p: validate_context(p) for p in P_POOL}
    roots = {
        p: iv.sqrt(iv.mpf(p.numerator) / iv.mpf(p.denominator)) for p in P_POOL
    }
    for _ in range(100_000):
        p = rng.choice(P_POOL)
        ctx = contexts[p]
        mode = rng.random()
        if mode < 0.05:
            e, f = Fraction(rng.randint(-999, 999)), Fraction(0)
        elif mode < 0.10:
            e, f = Fraction(0), Fraction(rng.randint(-999, 999))
        elif mode < 0.30:
            # e within ~1e-12 of |f|*sqrt(p): stresses the cross-sign branch
            f = Fraction(rng.randint(1, 999))
            pf2 = p * f * f
            scaled = pf2.numerator * 10**24 // pf2.denominator
            e = Fraction(math.isqrt(scaled) + rng.randint(-1, 1), 10**12)
            if rng.random() < 0.5:
                e = -e
            if rng.random() < 0.5:
                f = -f
        else:
            e = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
            f = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
        u = ctx.quad(e, f)
        val = _interval_value(e, f, roots[p])
        oracle = 1 if val > 0 else (-1 if val < 0 else 0)
        assert u.sign() == oracle, (p, e, f)
