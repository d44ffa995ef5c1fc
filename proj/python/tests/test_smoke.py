import cmath
from fractions import Fraction

import pytest

import lojinf

HYPERBOLA = "vars: z1 z2\nF1 = z1\nF2 = z1*z2 - 1\n"
SQUARES = "vars: z1 z2\nF1 = z1^2\nF2 = z2^2\n"
LINE_FIBER = "vars: z1 z2\nF1 = z1\nF2 = z1*z2\n"


def test_analyze_hyperbola():
    r = lojinf.analyze(HYPERBOLA)
    assert r["d_of_F"] == "1"
    assert r["mu"] == "0"
    assert r["delta0"] == "1"
    assert r["thm11_exponent"] == "-1"


def test_analyze_not_certified():
    r = lojinf.analyze(LINE_FIBER)
    assert r["hypothesis_certified"] is False
    assert r["thm11_exponent"] == "not applicable"


def test_resultant():
    value, method = lojinf.resultant("vars: Z0 Z1\nA = Z0 + 2*Z1\nB = 3*Z0 + 4*Z1\n")
    assert value == Fraction(-2)
    assert method == "direct_quotient"


def test_pg_slice():
    s = lojinf.pg_slice(SQUARES, [1, Fraction(1)])
    assert s["deg_T"] == "4"


def test_verify():
    v = lojinf.verify(HYPERBOLA, samples=500)
    assert v["growth"]["verdict"] == "PASS"
    assert abs(v["growth"]["profile"]["fitted_exponent"] + 1) <= 0.15
    assert v["root_escape"]["verdict"] == "PASS"


def test_roots_and_sphere():
    r = sorted(lojinf.roots([-1, 0, 1]), key=lambda z: z.real)
    assert abs(r[0] + 1) < 1e-12 and abs(r[1] - 1) < 1e-12
    value, witness = lojinf.min_on_sphere(SQUARES, 10.0)
    assert value == pytest.approx(100.0)
    assert max(abs(z) for z in witness) == pytest.approx(10.0)


def test_errors():
    with pytest.raises(lojinf.ParseError):
        lojinf.analyze("vars: z1 z2\nF1 = z1\nF2 = z1 * * z2\n")
    with pytest.raises(lojinf.ArityError):
        lojinf.analyze("vars: z1 z2\nF1 = z1\n")
    with pytest.raises(lojinf.CertificationError):
        lojinf.pg_slice(LINE_FIBER, [1, 1])
