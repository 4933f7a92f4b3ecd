import pytest
from hypothesis import given, settings, strategies as st

from qnc.coeff import LAMBDA, ONE, I, qpow
from qnc.ncalg import (AlgebraError, algebra, clear, clear_and_equal, format_poly, nc_conjugate,
                       overlap_check, reduce)

EU = algebra("euclid")
MI = algebra("minkowski")


def _mutated(alg):
    xx = {k: dict(v) for k, v in alg.xx.items()}
    # X- X+ -> X+ X- + lambda X3 X3 becomes ... + 2 lambda X3 X3
    xx[(2, 0)][(1, 1)] = xx[(2, 0)][(1, 1)] * 2
    return alg.with_rules(xx=xx, name="mutated")


@st.composite
def polys(draw, alg, max_terms=2, max_len=2):
    names = [n for n in alg.generator_names if n != "l^-1"]
    out = alg.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        word = draw(st.lists(st.sampled_from(names), max_size=max_len))
        c = qpow(draw(st.integers(-2, 2))) * draw(st.integers(-2, 2))
        if draw(st.booleans()):
            c = c * I
        out = out + alg.word(word, c)
    return out


def test_xminus_xplus():
    x = EU.X
    assert x[2] * x[0] == x[0] * x[2] + (x[1] * x[1]).scale(LAMBDA)
    assert str(x[2] * x[0]) == "X+*X- + (q - q^-1)*X3*X3"


def test_x0_central_mink():
    x0 = MI.gen("X0")
    for a in ("X+", "X3", "X-"):
        assert x0 * MI.gen(a) == MI.gen(a) * x0


def test_ell_exchange():
    assert EU.ell() * EU.gen("X3") == (EU.gen("X3") * EU.ell()).scale(qpow(2))
    assert EU.ell() * EU.gen("D3") == (EU.gen("D3") * EU.ell()).scale(qpow(-2))
    assert MI.ell() * MI.gen("X0") == (MI.gen("X0") * MI.ell()).scale(qpow(-1))
    assert format_poly(EU.ell() * EU.gen("X3")) == "q^2*X3*l"


@pytest.mark.parametrize("alg", [EU, MI], ids=["euclid", "minkowski"])
def test_overlaps_resolve(alg):
    amb = overlap_check(alg)
    assert amb
    assert all(a.resolved for a in amb)


def test_mutated_rule_breaks_confluence():
    assert not all(a.resolved for a in overlap_check(_mutated(EU)))


@given(polys(EU), polys(EU), polys(EU))
@settings(max_examples=30, deadline=None)
def test_associative_euclid(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys(MI, 2, 2), polys(MI, 1, 2), polys(MI, 1, 1))
@settings(max_examples=15, deadline=None)
def test_associative_mink(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys(EU), polys(EU))
@settings(max_examples=20, deadline=None)
def test_conjugation_antimultiplicative(a, b):
    lhs = nc_conjugate(a * b)
    rhs = nc_conjugate(b) * nc_conjugate(a)
    assert clear_and_equal(lhs, rhs)


@pytest.mark.parametrize("alg", [EU, MI], ids=["euclid", "minkowski"])
def test_conjugation_involution_on_generators(alg):
    for n in alg.generator_names:
        g = alg.gen(n)
        assert clear_and_equal(nc_conjugate(nc_conjugate(g)), g)


def test_clear_removes_negative_powers():
    p = EU.ell(-2) * EU.gen("X+") + EU.gen("D-")
    cleared, n = clear(p)
    assert n == 1
    assert cleared.ell_exponents() == {0}


def test_clear_and_equal_detects_difference():
    x = EU.gen("X+")
    assert clear_and_equal(x, x)
    res = clear_and_equal(x, x.scale(qpow(1)))
    assert not res
    assert not res.residue.is_zero()


def test_clear_mixed_parity_rejected():
    with pytest.raises(AlgebraError):
        clear(EU.ell(1) + EU.one())


def test_reduce_forms():
    assert reduce(EU, ["X-", "X+"]) == EU.gen("X-") * EU.gen("X+")
    assert reduce(EU, [(ONE * 2, ["X3"])]) == EU.gen("X3").scale(2)


def test_unknown_generator():
    with pytest.raises(AlgebraError):
        EU.gen("X0")
