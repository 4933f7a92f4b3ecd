import json

import pytest
from hypothesis import given, settings, strategies as st

from qnc.coeff import ONE, qpow
from qnc.ncalg import algebra
from qnc.verify import (EXTRA_SUITES, SUITES, CatalogError, IdentityResult, SuiteReport, catalog,
                        check_identity, get_identity, list_identities)
from qnc.verify.classical import classical_defects, classical_limit_ok
from qnc.verify.formal import FormalSum, names
from qnc.verify.inventory import OUT_OF_SCOPE, anchor_found, coverage, equation, equations

results = st.builds(
    IdentityResult,
    id=st.text("EM.0123456789", min_size=1, max_size=8),
    paper_ref=st.text(max_size=12),
    status=st.sampled_from(["pass", "fail", "error"]),
    ms=st.floats(0, 1e6, allow_nan=False).map(lambda x: round(x, 3)),
    residue=st.none() | st.text(max_size=20),
    component=st.none() | st.text(max_size=8),
    note=st.none() | st.text(max_size=20),
    components_checked=st.integers(0, 50),
)


@given(st.text(max_size=10), st.lists(results, max_size=5))
def test_report_json_round_trip(suite, items):
    rep = SuiteReport(suite, items)
    back = SuiteReport.from_json(rep.to_json())
    assert back == rep
    doc = json.loads(rep.to_json())
    assert set(doc) == {"suite", "identities", "pass", "fail"}
    assert doc["pass"] + doc["fail"] == len(items)


def test_report_rejects_bad_counts():
    doc = SuiteReport("x", [IdentityResult("a", "(1.1)", "pass", 1.0)]).to_dict()
    doc["fail"] = 3
    with pytest.raises(ValueError):
        SuiteReport.from_dict(doc)


def test_catalog_ids_unique_and_suites_known():
    ids = [i.id for i in catalog()]
    assert len(ids) == len(set(ids))
    assert {i.suite for i in catalog()} <= set(SUITES) | set(EXTRA_SUITES)
    for s in SUITES:
        assert list_identities(suite=s)


def test_catalog_lookup():
    assert get_identity("E.2.9").equations == ("2.8", "2.9", "2.19")
    assert get_identity("E.2.9").paper_ref == "(2.8), (2.9), (2.19)"
    with pytest.raises(CatalogError):
        get_identity("E.99")


def test_space_filter():
    assert all(i.id.startswith("M.") for i in list_identities(space="minkowski"))


def test_inventory():
    nums = [r["number"] for r in equations()]
    assert len(nums) == len(set(nums))
    assert equation("2.9")["chapter"] == "2"
    assert set(OUT_OF_SCOPE) <= set(nums)


def test_coverage_ok():
    cov = coverage()
    assert cov.ok, (cov.missing, cov.split, cov.unknown, cov.bad_anchors)


def test_anchor_negative():
    ident = get_identity("E.2.9")
    fake = type(ident)(ident.id, ident.suite, ident.equations, r"\zeta^{17}", ident.components)
    assert anchor_found(ident)
    assert not anchor_found(fake)


def test_controls_fail():
    for ident in list_identities(suite="controls"):
        assert check_identity(ident.id).status == "fail"


def test_identity_result_fields():
    r = check_identity("E.2.9")
    assert r.passed and r.residue is None and r.components_checked > 0


@pytest.mark.parametrize("id_,status", [
    ("E.3.7.printed", "fail"),
    ("E.3.17.P", "pass"),
    ("E.3.26.printed", "fail"),
])
def test_exploratory_euclid(id_, status):
    assert check_identity(id_).status == status


def test_classical_limit():
    assert classical_limit_ok("euclid")
    assert classical_limit_ok("minkowski")
    # away from q = 1 the deformation terms are visible
    assert classical_defects(algebra("euclid"), 2)


# formal sums in g = tau^-1/2 ------------------------------------------------

gens = st.sampled_from(["L+", "L-", "X+", "X3", "X-"])


@st.composite
def formal(draw):
    out = FormalSum()
    for _ in range(draw(st.integers(0, 3))):
        out = out + FormalSum.term(draw(st.integers(-2, 2)), tuple(draw(st.lists(gens, max_size=2))),
                                   qpow(draw(st.integers(-2, 2))) * draw(st.integers(-2, 2)))
    return out


@given(formal(), formal(), formal())
@settings(max_examples=60, deadline=None)
def test_formal_product_associative(a, b, c):
    lhs, rhs = (a * b) * c, a * (b * c)
    assert lhs.terms == rhs.terms


def test_formal_exchange_rule():
    g = FormalSum.term(1, ())
    (xp,) = names("X+")
    # g X+ = q^2 X+ g
    assert (g * xp).terms == (xp * g * qpow(2)).terms


def test_formal_conjugate_reverses():
    a, b = names("X+", "X-")
    images = {"X+": b, "X-": a}
    assert (a * b).conjugate(images).terms == (a * b).terms
    with pytest.raises(ValueError):
        FormalSum.term(1, ("X+",)).conjugate(images)


def test_formal_cleared_shift():
    s = FormalSum.term(-2, ("X3",)) + FormalSum.term(0, (), ONE)
    alg = algebra("euclid")
    g = alg.ell(1)
    out = s.cleared({"X3": alg.gen("X3")}, g)
    assert out == alg.gen("X3") + alg.ell(2)
