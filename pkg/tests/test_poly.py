from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from degprinc.poly import (Polynomial, PolynomialSyntaxError, elementary, parse,
                           power_sum)

NV = 3
SYMS = sympy.symbols("x1:4")

exps = st.tuples(*[st.integers(0, 3)] * NV)
terms = st.dictionaries(exps, st.fractions(-20, 20, max_denominator=9),
                        max_size=5)
polys = terms.map(lambda t: Polynomial(NV, t))


def to_sympy(p: Polynomial):
    out = sympy.Integer(0)
    for e, c in p.sorted_terms():
        mono = sympy.Mul(*[s ** k for s, k in zip(SYMS, e)])
        out += sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) * mono
    return sympy.expand(out)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@settings(max_examples=60, deadline=None)
@given(polys)
def test_derivative_matches_sympy(p):
    for i in range(NV):
        assert to_sympy(p.diff(i)) == sympy.diff(to_sympy(p), SYMS[i])


@settings(max_examples=60, deadline=None)
@given(polys)
def test_string_round_trip(p):
    assert parse(p.to_string(), nvars=NV) == p


@given(polys, st.lists(st.fractions(-4, 4, max_denominator=5),
                       min_size=NV, max_size=NV))
def test_exact_evaluation(p, x):
    expect = to_sympy(p).subs(dict(zip(SYMS, [sympy.Rational(v.numerator, v.denominator)
                                                for v in x])))
    got = p.eval_exact(x).to_fraction()
    assert got == Fraction(int(sympy.numer(expect)), int(sympy.denom(expect)))


def test_compose_and_canonical_output():
    p = parse("x1^2 + 3*x1*x2 - 1/2", nvars=2)
    assert p.to_string() == "x1^2 + 3*x1*x2 - 1/2"
    assert p.eval([1, 2]) == pytest.approx(6.5)
    x1, x2 = Polynomial.var(2, 0), Polynomial.var(2, 1)
    q = p.compose([x1 + x2, x1 - x2])
    assert q == parse("(x1+x2)^2 + 3*(x1+x2)*(x1-x2) - 1/2", nvars=2)


def test_newton_identity_three_vars():
    p1, p2, p3 = (power_sum(3, k) for k in (1, 2, 3))
    e3 = elementary(3, 3)
    assert e3 * 6 == p1 ** 3 - p1 * p2 * 3 + p3 * 2


def test_named_variables_and_errors():
    assert parse("y1*y2", "y", nvars=3) == Polynomial(3, {(1, 1, 0): 1})
    with pytest.raises(PolynomialSyntaxError):
        parse("x1+*", nvars=2)
