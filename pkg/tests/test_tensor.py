from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qnc.coeff import ONE, ZERO, GaussianRational, qpow, scalar_eval
from qnc.tensor import (EUCLID, MINK, Tensor, TensorError, as_matrix, braid_12, braid_23, compose, compose6,
                        contract, einsum, from_matrix, inverse_metric, lex_order, paper_order,
                        projector_from_rhat, rhat3_table, tensor_parts)

E = tensor_parts("euclid")
M = tensor_parts("minkowski")


def _trace(t: Tensor):
    n = t.basis.dim
    acc = ZERO
    for a in range(n):
        for b in range(n):
            acc = acc + t.entries.get((a, b, a, b), ZERO)
    return acc


def _at_one(t: Tensor) -> dict:
    return {k: scalar_eval(v, 1) for k, v in t.entries.items() if not scalar_eval(v, 1).is_zero()}


@st.composite
def uull(draw, basis=EUCLID):
    n = basis.dim
    entries = {}
    for _ in range(draw(st.integers(0, 6))):
        key = tuple(draw(st.integers(0, n - 1)) for _ in range(4))
        entries[key] = qpow(draw(st.integers(-3, 3))) * draw(st.integers(-2, 2))
    return Tensor(basis, ("u", "u", "l", "l"), entries)


@given(uull(), uull(), uull())
@settings(max_examples=40, deadline=None)
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(uull(), uull(), st.sampled_from(["lex", "paper"]))
@settings(max_examples=40, deadline=None)
def test_matrix_product_matches_compose(a, b, conv):
    assert as_matrix(a, conv) @ as_matrix(b, conv) == as_matrix(compose(a, b), conv)
    assert from_matrix(as_matrix(a, conv)) == a


@given(uull())
@settings(max_examples=30, deadline=None)
def test_einsum_matches_contract(a):
    gi = E["g_inv"]
    assert einsum("ABCD,DE->ABCE", a, gi) == contract(a, gi, [(3, 0)])


def test_label_lookup():
    g = E["g"]
    assert g["+", "-"] == g[0, 2] == -qpow(1)
    assert M["eta"]["0", "0"] == -ONE


def test_rhat_is_swap_at_q_equal_one():
    # classical limit: R-hat^{AB}_{CD} -> delta^A_D delta^B_C
    swap = {(a, b, b, a): GaussianRational(Fraction(1)) for a in range(3) for b in range(3)}
    assert _at_one(E["rhat3"]) == swap


def test_projector_ranks():
    assert _trace(E["P1"]) == ONE
    assert _trace(E["P3"]) == ONE * 3
    assert _trace(E["P5"]) == ONE * 5
    assert _trace(M["PT"]) == ONE
    assert _trace(M["PS"]) == ONE * 9
    assert _trace(M["Pplus"]) == ONE * 3
    assert _trace(M["Pminus"]) == ONE * 3


def test_characteristic_equation():
    r, one = E["rhat3"], E["one3"]
    f = compose(r - one, r + one.scale(qpow(-4)), r - one.scale(qpow(-6)))
    assert f.is_zero()


def test_projector_polynomials_match_tables():
    for name in ("P1", "P3", "P5"):
        assert projector_from_rhat(rhat3_table(), name) == E[name]


def test_braid_yang_baxter_euclid():
    r = E["rhat3"]
    r12, r23 = braid_12(r), braid_23(r)
    lhs, rhs = compose6(r12, r23, r12), compose6(r23, r12, r23)
    assert lhs == rhs
    assert len(lhs.entries) <= 729


def test_inverse_metric():
    g = E["g"]
    gi = inverse_metric(g)
    prod = einsum("AB,BC->AC", gi, g)
    assert prod.entries == {(i, i): ONE for i in range(3)}


def test_paper_order_is_a_permutation():
    for basis in (EUCLID, MINK):
        assert sorted(paper_order(basis)) == sorted(lex_order(basis))


def test_rhat_csv_entry():
    m = as_matrix(E["rhat3"], "paper")
    labels = m.label_strings()
    rows = [line.split(",") for line in m.to_csv().splitlines()]
    assert rows[0] == [""] + labels
    r = labels.index("3+") + 1
    c = labels.index("+3") + 1
    assert rows[r][c] == "q^-2"


def test_bad_slots():
    with pytest.raises(TensorError):
        Tensor(EUCLID, ("x",), {})
    with pytest.raises(TensorError):
        as_matrix(E["g"])
