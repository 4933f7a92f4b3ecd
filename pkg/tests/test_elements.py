import pytest

from qnc.coeff import qpow
from qnc.elements import ElementError, avatar_of, element, element_names, lambda_grade, vector
from qnc.ncalg import AlgebraError, algebra, clear_and_equal, default_hat_coeff, nc_conjugate

EU = algebra("euclid")
MI = algebra("minkowski")


def test_names():
    eu = set(element_names("euclid"))
    assert {"Lambda", "W", "tau", "L+", "L3", "L-", "P+", "Dbar-", "M+-"} <= eu
    mi = set(element_names("minkowski"))
    assert {"Lambda", "U", "rho", "sigma", "R+", "S-", "V0+", "Dhat0", "P0"} <= mi
    assert "R0" not in mi


def test_vector_lengths():
    assert len(vector("euclid", "L")) == 3
    assert len(vector("minkowski", "P")) == 4
    assert len(vector("minkowski", "R")) == 3


def test_lambda_scales_coordinates():
    lam = EU.lambda_poly
    for x in EU.X:
        assert clear_and_equal(lam * x, (x * lam).scale(qpow(4)))
    for d in EU.D:
        assert clear_and_equal(lam * d, (d * lam).scale(qpow(-4)))


def test_grades():
    assert lambda_grade(EU.gen("X+")) == -1
    assert lambda_grade(EU.gen("D3")) == 1
    assert lambda_grade(element("euclid", "L+").value) == 0
    assert lambda_grade(element("euclid", "W").value) == 0
    with pytest.raises(AlgebraError):
        lambda_grade(EU.gen("X+") + EU.gen("D+"))


def test_avatar_reassembles():
    for name in ("L+", "W", "Dbar3", "tau"):
        e = element("euclid", name)
        assert clear_and_equal(EU.ell(e.ell_offset) * e.avatar, e.value)
        assert e.avatar.ell_exponents() <= {0}


def test_avatar_mixed_parity():
    with pytest.raises(AlgebraError):
        avatar_of(EU.ell(1) + EU.one())


def test_w_hermitean():
    w = element("euclid", "W").value
    assert clear_and_equal(nc_conjugate(w), w)


def test_hat_coeff_default():
    assert str(default_hat_coeff()) == "(-1 + q^-2)/(q^2 + 1)"
    assert MI.hat_coeff is None  # None selects the default


def test_hat_coeff_override_changes_avatars():
    copy = MI.with_rules(name="probe")
    assert copy.hat_coeff == MI.hat_coeff
    copy.hat_coeff = qpow(1)
    assert copy.conj_derivative_avatars != MI.conj_derivative_avatars


def test_unknown_element():
    with pytest.raises(ElementError):
        element("euclid", "rho")
