import io
import random
from fractions import Fraction

import pytest

import helpers
from quatpoly.cli import ExpressionError, main, parse_expression
from quatpoly.freealg import Polynomial, Scalar, bracket
from quatpoly.qvars import QPolynomial


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def w(*letters):
    return Polynomial.from_word(letters)


def test_parse_simple():
    mode, p = parse_expression("v3*v2*v1 - v1*v2*v3")
    assert mode == "v"
    assert len(p.terms) == 2
    assert p == w(3, 2, 1) - w(1, 2, 3)


def test_parse_bracket_function():
    mode, p = parse_expression("S(v1*v2*v3)")
    assert mode == "v" and p == bracket((1, 2, 3))


def test_parse_q_mode():
    mode, p = parse_expression("q1*q1' - q1'*q1")
    assert mode == "q"
    assert p == QPolynomial({(1, -1): 1, (-1, 1): -1})


def test_parse_coefficients_and_functions():
    _, p = parse_expression("-1/2*v1*v2 + 3")
    assert p == w(1, 2) * Fraction(-1, 2) + Polynomial.constant(3)
    _, p = parse_expression("cross(v1, v2)")
    assert p == (w(1, 2) - w(2, 1)) * Fraction(1, 2)
    _, p = parse_expression("rev(v1*v2*v3)")
    assert p == w(3, 2, 1)
    _, p = parse_expression("A(v1*v2)")
    assert p == (w(1, 2) - w(2, 1)) * Fraction(1, 2)
    _, p = parse_expression("2*s1*v1")
    assert p == Polynomial({(1,): Scalar({(1,): 2})})


def test_parse_errors():
    with pytest.raises(ExpressionError):
        parse_expression("v1*+")
    with pytest.raises(ExpressionError):
        parse_expression("v1*q1")
    with pytest.raises(ExpressionError):
        parse_expression("w3")
    with pytest.raises(ExpressionError):
        parse_expression("(v1")
    with pytest.raises(ExpressionError):
        parse_expression("1/0")


def test_roundtrip_random_polynomials():
    rng = random.Random(6)
    for _ in range(150):
        p = helpers.random_poly(rng, n=4, max_degree=4)
        mode, back = parse_expression(str(p))
        assert mode == "v" and back == p
    # with scalar-symbol coefficients
    s = Scalar({(1, 1): Fraction(1, 2), (2,): -3})
    for p in (
        Polynomial({(1, 2): s, (): Scalar.symbol(2)}),
        Polynomial({(): s}),
        Polynomial.zero(),
    ):
        mode, back = parse_expression(str(p))
        assert back == p


def test_normalize_command():
    code, out = run(["normalize", "--vars", "3", "v3*v2*v1"])
    assert code == 0
    assert out == "-v2*v3*v1 + v1*v3*v2 + v1*v2*v3\n"
    code, out = run(["normalize", "v2*v2*v1"])
    assert code == 0 and out == "v1*v2*v2\n"
    code, out = run(["normalize", "q1*q1' - q1'*q1"])
    assert code == 0 and out == "0\n"


def test_check_normal_command():
    code, out = run(["check-normal", "--vars", "3", "v1*v2*v3"])
    assert code == 0 and out.strip() == "normal"
    code, out = run(["check-normal", "--vars", "3", "v3*v2*v1"])
    assert code == 1 and out.strip() == "not normal"
    code, _ = run(["check-normal", "--vars", "3", "--multilinear", "v1*v1"])
    assert code == 2


def test_gb_command():
    code, out = run(["gb", "--vars", "3", "--max-deg", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "v3*v2*v1 -> -v2*v3*v1 + v1*v3*v2 + v1*v2*v3"
    assert len(lines) == 8
    code, out2 = run(["gb", "--vars", "3", "--max-deg", "3", "--tail-reduce"])
    assert code == 0 and len(out2.splitlines()) == 8


def test_verify_groebner_command():
    code, out = run(["verify-groebner", "--vars", "3", "--max-deg", "5"])
    assert code == 0
    assert "all S-polynomials reduce to 0" in out
    code, out = run(["verify-groebner", "--vars", "4", "--max-deg", "5", "--multilinear"])
    assert code == 0


def test_zero_test_command():
    code, out = run(["zero-test", "v1*v1*v2 - v2*v1*v1"])
    assert code == 0 and "zero on all 100 trials" in out
    code, out = run(["zero-test", "--trials", "5", "v1*v2 - v2*v1"])
    assert code == 1 and out.startswith("counterexample at trial")


def test_dim_check_command():
    code, out = run(["dim-check", "--vars", "2", "--deg", "3"])
    assert code == 0
    assert "words 8  rank 2  normal 6  factor-free 6  structural 6" in out
    code, out = run(["dim-check", "--vars", "3", "--deg", "3", "--multilinear"])
    assert code == 0
    assert "words 6  rank 2  normal 4  factor-free 4  structural 4" in out


def test_identities_command_small():
    code, out = run(["identities", "--max-n", "2", "--trials", "20"])
    assert code == 0
    assert "0 failures" in out
    assert all(line.startswith(("ok ", "eq", "FAIL")) or "identities checked" in line
               for line in out.splitlines())


def test_complete_command():
    code, out = run(["complete", "--vars", "2", "--max-deg", "4"])
    assert code == 0
    assert out.splitlines() == [
        "v2*v1*v1 -> v1*v1*v2",
        "v2*v2*v1 -> v1*v2*v2",
    ]
    code, out = run(["complete", "--max-deg", "4", "v1*v1*v2 - v2*v1*v1"])
    assert code == 0 and "v2*v1*v1 -> v1*v1*v2" in out


def test_reports_are_deterministic():
    _, first = run(["identities", "--max-n", "2", "--trials", "10"])
    _, second = run(["identities", "--max-n", "2", "--trials", "10"])
    assert first == second


def test_stdin_expression(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("v3*v2*v1"))
    code, out = run(["normalize", "--vars", "3", "-"])
    assert code == 0 and out == "-v2*v3*v1 + v1*v3*v2 + v1*v2*v3\n"
    monkeypatch.setattr(
        "sys.stdin", io.StringIO("v1*v1*v2 - v2*v1*v1\nv2*v2*v1 - v1*v2*v2\n")
    )
    code, out = run(["complete", "--max-deg", "4", "-"])
    assert code == 0 and len(out.splitlines()) == 2


def test_usage_errors_exit_2():
    code, _ = run(["normalize", "v1*q1"])
    assert code == 2
    code, _ = run(["normalize", "v1*+"])
    assert code == 2
    code, _ = run(["no-such-command"])
    assert code == 2
