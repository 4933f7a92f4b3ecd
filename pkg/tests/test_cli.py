import io
import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from qnc.cli import poly_to_dict, run_cli
from qnc.cli.parser import BinOp, EvalError, ParseError, Sym, parse_expr, reduce_text, tokenize
from qnc.coeff import I, ONE, S, qpow
from qnc.ncalg import algebra

GOLDEN = Path(__file__).parent / "golden"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@st.composite
def polys(draw, space):
    alg = algebra(space)
    names = [n for n in alg.generator_names if n != "l^-1"]
    out = alg.zero()
    for _ in range(draw(st.integers(0, 3))):
        word = draw(st.lists(st.sampled_from(names), max_size=3))
        c = qpow(draw(st.integers(-3, 3))) * draw(st.integers(-3, 3))
        c = c / (ONE + qpow(draw(st.integers(0, 2))))
        c = c + draw(st.sampled_from([0, 1, -2])) * I + draw(st.sampled_from([0, 0, 1])) * S
        k = draw(st.integers(-2, 2))
        out = out + alg.ell(k) * alg.word(word, c)
    return out


@given(polys("euclid"))
@settings(max_examples=60, deadline=None)
def test_round_trip_euclid(p):
    assert reduce_text(str(p), "euclid") == p


@given(polys("minkowski"))
@settings(max_examples=30, deadline=None)
def test_round_trip_mink(p):
    assert reduce_text(str(p), "minkowski") == p


def test_parse_product_node():
    ast = parse_expr("X- * X+", "euclid")
    assert ast == BinOp("*", Sym("X-", "generator"), Sym("X+", "generator"))


def test_reduce_xminus_xplus():
    assert str(reduce_text("X- * X+", "euclid")) == "X+*X- + (q - q^-1)*X3*X3"


def test_reduce_x0_central():
    assert str(reduce_text("X0 * X+ - X+ * X0", "minkowski")) == "0"


def test_reduce_l_x3():
    assert str(reduce_text("l * X3", "euclid")) == "q^2*X3*l"


def test_syntax_error_position():
    with pytest.raises(ParseError) as e:
        parse_expr("X- * * X+", "euclid")
    assert (e.value.line, e.value.col) == (1, 6)


def test_error_on_second_line():
    with pytest.raises(ParseError) as e:
        parse_expr("X+ *\n  X0", "euclid")
    assert (e.value.line, e.value.col) == (2, 3)


def test_juxtaposition_rejected():
    with pytest.raises(ParseError):
        parse_expr("X+ X-", "euclid")


def test_longest_match():
    toks = [t.text for t in tokenize("X+-X- + M+-", "euclid")]
    assert toks == ["X+", "-", "X-", "+", "M+-", ""]


def test_element_names_parse():
    # the scaling element commutes with the hermitean W and L
    assert reduce_text("W * Lambda - Lambda * W", "euclid").is_zero()
    assert reduce_text("L+ * Lambda - Lambda * L+", "euclid").is_zero()


def test_scalar_syntax():
    assert reduce_text("(q^2 - 1)/(q - 1)", "euclid") == algebra("euclid").scalar(qpow(1) + 1)
    assert reduce_text("s*s - q^2", "euclid") == algebra("euclid").one()


def test_division_by_generator_rejected():
    with pytest.raises(EvalError):
        reduce_text("X+ / X3", "euclid")


def test_negative_power_rules():
    alg = algebra("euclid")
    assert reduce_text("l^-1 * l", "euclid") == alg.one()
    assert reduce_text("(q*l^2)^-1", "euclid") == alg.ell(-2).scale(qpow(-1))
    with pytest.raises(EvalError):
        reduce_text("X+^-1", "euclid")


def test_cli_reduce_text_and_json():
    code, out, _ = cli("reduce", "--space", "euclid", "X- * X+")
    assert code == 0 and out.strip() == "X+*X- + (q - q^-1)*X3*X3"
    code, out, _ = cli("reduce", "--space", "euclid", "--format", "json", "l * X3")
    doc = json.loads(out)
    assert doc["normal_form"] == "q^2*X3*l"
    assert doc["terms"] == [{"coeff": "q^2", "l": 1, "x": {"3": 1}, "d": {}}]


def test_json_terms_match_text():
    p = reduce_text("tau * X+", "euclid")
    doc = poly_to_dict(p)
    assert len(doc["terms"]) == len(p.terms)


def test_cli_parse_error_exit():
    code, _, err = cli("reduce", "--space", "euclid", "X- * * X+")
    assert code == 1
    assert "line 1, column 6" in err


def test_cli_bad_flags():
    assert cli("reduce", "--space", "euclid", "--bogus", "X+")[0] == 2
    assert cli("reduce", "--space", "nowhere", "X+")[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("verify", "--suite", "no-such-suite")[0] == 2
    assert cli("export", "--object", "no-such-tensor")[0] == 2


def test_export_golden():
    code, out, _ = cli("export", "--object", "rhat3", "--format", "csv", "--convention", "paper")
    assert code == 0
    assert out.encode() == (GOLDEN / "rhat3_paper.csv").read_bytes()


def test_export_stable_and_lex():
    a = cli("export", "--object", "RI")[1]
    b = cli("export", "--object", "RI")[1]
    assert a == b
    assert a.splitlines()[0].split(",")[1:3] == ["00", "0+"]


def test_export_metric(tmp_path):
    dest = tmp_path / "g.csv"
    assert cli("export", "--object", "g", "-o", str(dest))[0] == 0
    rows = dest.read_text().splitlines()
    assert rows[0] == ",+,3,-"
    assert rows[1] == "+,0,0,-q"


def test_verify_exit_codes():
    code, out, _ = cli("verify", "--suite", "euclid-tensor", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["fail"] == 0 and doc["pass"] == len(doc["identities"])
    code, out, _ = cli("verify", "--suite", "controls")
    assert code == 1
    assert "FAIL" in out


def test_catalog():
    code, out, _ = cli("catalog", "--space", "euclid", "--suite", "euclid-tensor")
    assert code == 0
    assert out.splitlines()[0].startswith("E.2.1")
    code, out, _ = cli("catalog", "--format", "json", "--pattern", "^M\\.5\\.2")
    ids = [d["id"] for d in json.loads(out)]
    assert "M.5.21" in ids and all(i.startswith("M.5.2") for i in ids)
