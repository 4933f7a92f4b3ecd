"""The eleven acceptance criteria, one test each.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary (and directly when run as a script).
"""

import functools
import io
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES, suite_report
from qnc.cli import run_cli
from qnc.ncalg import algebra, clear_and_equal, nc_conjugate, overlap_check
from qnc.verify import check_identity
from qnc.verify.classical import classical_limit_ok
from qnc.verify.inventory import coverage

GOLDEN = Path(__file__).parent / "golden"


def criterion(n: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            ok = False
            try:
                fn(*a, **kw)
                ok = True
            finally:
                line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
                ACCEPTANCE_LINES.append(line)
                print(line)
        return run
    return wrap


def _all_pass(*suites):
    bad = []
    for s in suites:
        bad += [f"{r.id}: {r.component} {r.residue}" for r in suite_report(s).identities if not r.passed]
    assert not bad, bad


def _timed(suites) -> float:
    t = time.perf_counter()
    for s in suites:
        suite_report(s)
    return time.perf_counter() - t


@criterion(1, "tensor suites pass with zero residue")
def test_tensor_suites():
    elapsed = _timed(["euclid-tensor", "mink-tensor"])
    _all_pass("euclid-tensor", "mink-tensor")
    ids = {r.id for s in ("euclid-tensor", "mink-tensor") for r in suite_report(s).identities}
    assert {"E.YBE", "E.2.3", "M.4.11", "M.4.12", "M.4.13", "M.4.22", "E.A1.10", "M.A2.14"} <= ids
    assert elapsed < 10


@criterion(2, "cross-construction agreement of projectors and Minkowski R-hats")
def test_cross_construction():
    for i in ("E.2.4", "E.2.15", "E.2.20", "E.2.21", "E.2.22", "M.4.3"):
        assert check_identity(i).passed, i


@criterion(3, "PBW confluence in both presentations, mutated rule fails")
def test_confluence():
    for space in ("euclid", "minkowski"):
        assert all(a.resolved for a in overlap_check(algebra(space)))
    eu = algebra("euclid")
    xx = {k: dict(v) for k, v in eu.xx.items()}
    xx[(2, 0)][(1, 1)] = xx[(2, 0)][(1, 1)] * 2
    assert not all(a.resolved for a in overlap_check(eu.with_rules(xx=xx, name="mutated")))


@criterion(4, "Euclidean calculus suite")
def test_euclid_calculus():
    elapsed = _timed(["euclid-calculus"])
    _all_pass("euclid-calculus")
    assert elapsed < 120


@criterion(5, "Euclidean phase suite")
def test_euclid_phase():
    _all_pass("euclid-phase")


@pytest.mark.slow
@criterion(6, "Minkowski calculus suite, with the verified c(q)")
def test_mink_calculus():
    _all_pass("mink-calculus")
    r = next(r for r in suite_report("mink-calculus").identities if r.id == "M.4.29")
    assert r.note == "c(q) = (-1 + q^-2)/(q^2 + 1)"


@pytest.mark.slow
@criterion(7, "Minkowski phase suite")
def test_mink_phase():
    _all_pass("mink-phase")


@pytest.mark.slow
@criterion(8, "conjugation is an involution and respects the defining relations")
def test_conjugation():
    for space in ("euclid", "minkowski"):
        alg = algebra(space)
        for n in alg.generator_names:
            g = alg.gen(n)
            assert clear_and_equal(nc_conjugate(nc_conjugate(g)), g), n
    herm = {r.id: r for r in suite_report("euclid-phase").identities + suite_report("mink-phase").identities}
    assert herm["E.herm"].passed and herm["M.herm"].passed


@criterion(9, "classical limit of the commutation rules")
def test_classical_limit():
    assert classical_limit_ok("euclid")
    assert classical_limit_ok("minkowski")


@criterion(10, "equation inventory coverage")
def test_coverage():
    cov = coverage()
    assert cov.ok, (cov.missing, cov.split, cov.unknown, cov.bad_anchors)


@criterion(11, "CLI golden files")
def test_cli_golden():
    out = io.StringIO()
    assert run_cli(["export", "--object", "rhat3", "--format", "csv", "--convention", "paper"], out) == 0
    assert out.getvalue().encode() == (GOLDEN / "rhat3_paper.csv").read_bytes()
    out = io.StringIO()
    assert run_cli(["reduce", "--space", "euclid", "X- * X+"], out) == 0
    assert out.getvalue() == "X+*X- + (q - q^-1)*X3*X3\n"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
