import json
import random
from fractions import Fraction

import pytest

from cvect.cli import main
from cvect.exceptional.basis import euler
from cvect.exceptional.pairs import GluedPair
from cvect.expr import ParseError, format_poly, format_value, parse_field, parse_poly
from cvect.sampling import monomials
from cvect.superpoly import CHART_43, SuperPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    assert parse_poly("x2*x1") == -parse_poly("x1*x2")
    f = parse_poly("u1^2*x3 - 1/2*y")
    assert len(f) == 2 and dict(f.terms)[next(m for m in f.terms if m.odd == 0)] == Fraction(-1, 2)
    with pytest.raises(ParseError):
        parse_poly("x1^2")
    with pytest.raises(ParseError) as exc:
        parse_poly("u1 + * u2")
    assert exc.value.pos == 5


def test_format_examples():
    assert format_value(-parse_poly("x1*x2")) == "-x1*x2"
    rec = json.loads(format_value(euler(), structured=True))
    assert rec == {"P": ["x1", "x2", "x3"], "Q": ["u1", "u2", "u3"], "R": "y"}
    pair = GluedPair.parse("(u1, 0)")
    assert json.loads(format_value(pair, structured=True)) == {"f": "u1", "g": "0"}


def test_roundtrip_random_polynomials():
    rng = random.Random(99)
    pools = [monomials(CHART_43, de, do) for de in range(4) for do in range(4)]
    for _ in range(1000):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            m = rng.choice(rng.choice(pools))
            terms[m] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        f = SuperPoly(CHART_43, terms)
        text = format_poly(f)
        g = parse_poly(text)
        assert dict(g.terms) == dict(f.terms)
        assert format_poly(g) == text


def test_field_roundtrip():
    D = parse_field("(u1 - x1*x2)*d_u3 - 1/3*y^2*d_y + x3*d_x1")
    assert parse_field(format_value(D)) == D


def test_membership_command(capsys):
    code, out, _ = run(capsys, "membership", "--field", "d")
    assert code == 0
    lines = out.splitlines()
    assert lines[:6] == [f"eq{i}: pass" for i in range(1, 7)]
    assert lines[6].startswith("eq7: fail")
    code, out, _ = run(capsys, "membership", "--field", "d", "--variant", "vect", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["ok"] is False and rec["results"]["eq7"] is False


def test_prolong_command(capsys):
    code, out, _ = run(capsys, "prolong", "--input", "vect03", "--max-degree", "1")
    assert code == 0 and "g_0: (12|12)" in out
    code, out, _ = run(capsys, "prolong", "--input", "cvect03", "--max-degree", "0", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[1] == {"degree": 0, "even": 13, "odd": 12}


def test_bracket_command(capsys):
    code, out, _ = run(capsys, "bracket", "--left", "(0,u1)", "--right", "(0,x1)")
    assert code == 0 and out.strip() == "(0, 0)"
    code, out, _ = run(capsys, "bracket", "--left", "(u1,0)", "--right", "(u2*x1,0)", "--check")
    assert code == 0
    code, out, _ = run(capsys, "bracket", "--left", "d", "--right", "d_u1")
    assert out.strip() == "-d_u1"


def test_table_command(capsys):
    code, out, _ = run(capsys, "table", "--f", "u1*x1", "--h", "u2*x2*x3", "--check", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 16
    assert all(r["oracle_agrees"] for r in rows)
    assert rows[1 * 4 + 2] == {"cell": [1, 2], "f": "-u2*x2*x3", "g": "0", "oracle_agrees": True}


def test_unary_commands(capsys):
    cases = [
        (("i1", "--f", "u1"), "x3*d_u2 - x2*d_u3 - y*d_x1"),
        (("i2", "--f", "x1"), "-d_u1"),
        (("alpha", "--g", "u1*x1"), "d_y"),
        (("realize", "--pair", "(u1*x1*x2*x3, 0)"), "-u1*d_y"),
        (("decompose", "--field", "d_y"), "(-x1*x2*x3, 0)"),
        (("regrade", "--f", "x2*x3"), "-u1"),
        (("phi", "--pair", "(u1, 0)"), "(0, -u1)"),
        (("div", "--field", "x1*d_x1"), "-1"),
        (("buttin", "--f", "u1*u2", "--g", "x1"), "u2"),
    ]
    for argv, expected in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out.strip() == expected, argv


def test_file_input(capsys, tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("u1\n# comment\nx2*x3\n\nu1*x1*x2*x3\n", encoding="utf-8")
    code, out, _ = run(capsys, "i1", "--file", str(path), "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 3
    assert rows[2] == {"P": ["0", "0", "0"], "Q": ["0", "0", "0"], "R": "-u1"}


def test_usage_errors(capsys):
    assert run(capsys, "i1", "--f", "x1^2")[0] == 2
    assert run(capsys, "decompose", "--field", "x1*d_u1")[0] == 2
    assert run(capsys, "regrade", "--f", "u1*x1")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "i1")[0] == 2
    assert run(capsys, "prolong", "--input", "nope")[0] == 2
    assert run(capsys, "bracket", "--left", "(0,u1)", "--right", "d_u1")[0] == 2
    code, _, err = run(capsys, "i2", "--f", "q7")
    assert code == 2 and "error" in err


def test_selftest_single_suite(capsys):
    code, out, _ = run(capsys, "selftest", "--suite", "membership")
    assert code == 0 and out.startswith("PASS")
    assert run(capsys, "selftest", "--suite", "nope")[0] == 2


def test_selftest_reports_falsification(capsys):
    # the literal generation claim does not hold, and selftest must say so with exit code 1
    code, out, _ = run(capsys, "selftest", "--suite", "generation")
    assert code == 1 and out.startswith("FAIL")


def test_structured_output_is_stable(capsys):
    outs = {run(capsys, "realize", "--pair", "(u1*u2 + x1*x2, u3*x1)", "--json")[1] for _ in range(3)}
    assert len(outs) == 1
