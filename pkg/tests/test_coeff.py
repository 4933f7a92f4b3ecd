from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qnc.coeff import (I, LAMBDA, ONE, Q, S, ZERO, GaussianRational, PoleError, RatFunc,
                       const, qpow, scalar_eval)

small = st.integers(-3, 3)


@st.composite
def laurent(draw, max_terms=3):
    out = ZERO
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + qpow(draw(st.integers(-4, 4))) * draw(small)
    return out


@st.composite
def scalars(draw, with_s=True):
    re, im = draw(laurent()), draw(laurent())
    num = re + im * I
    den = draw(laurent(2))
    if not den.is_zero():
        num = num / den
    if with_s and draw(st.booleans()):
        num = num + draw(laurent(2)) * S
    return num


@given(scalars(), scalars(), scalars())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(scalars())
@settings(max_examples=60, deadline=None)
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == ONE


@given(scalars(), scalars())
@settings(max_examples=60, deadline=None)
def test_conjugation_is_field_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a


@given(scalars(with_s=False), scalars(with_s=False), st.sampled_from([2, 3, Fraction(1, 2), -2]))
@settings(max_examples=60, deadline=None)
def test_eval_is_homomorphism(a, b, q0):
    try:
        ea, eb, eab = scalar_eval(a, q0), scalar_eval(b, q0), scalar_eval(a * b, q0)
    except (PoleError, ZeroDivisionError):
        return
    assert eab == ea * eb
    assert scalar_eval(a + b, q0) == ea + eb


def test_sqrt_extension():
    assert S * S == ONE + Q * Q
    assert S.has_sqrt()
    # 1 + (3/4)^2 = (5/4)^2
    assert scalar_eval(S, Fraction(3, 4), Fraction(5, 4)) == GaussianRational(Fraction(5, 4))


def test_eval_rejects_wrong_branch():
    import pytest

    with pytest.raises(ValueError):
        scalar_eval(S, Fraction(3, 4))
    with pytest.raises(ValueError):
        scalar_eval(S, Fraction(3, 4), Fraction(-5, 4))


def test_printing():
    assert str(LAMBDA) == "q - q^-1"
    assert str(ONE / (ONE + qpow(2)) * (qpow(-2) - 1)) == "(-1 + q^-2)/(q^2 + 1)"
    assert str(const(Fraction(1, 2)) * qpow(4)) == "1/2*q^4"
    assert str(I) == "i"
    assert str(S) == "s"
    assert str(I * S) == "i*s"
    assert str(ZERO) == "0"


def test_ratfunc_normalization():
    # (q^2 - 1)/(q - 1) = q + 1
    r = RatFunc.q_pow(2) - RatFunc.from_fraction(1)
    r = r / (RatFunc.q_pow(1) - RatFunc.from_fraction(1))
    assert r == RatFunc.q_pow(1) + RatFunc.from_fraction(1)


def test_pole():
    import pytest

    with pytest.raises((PoleError, ZeroDivisionError)):
        scalar_eval((Q - 1).inverse(), 1)
