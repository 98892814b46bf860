from __future__ import annotations

import math
from fractions import Fraction

from hypothesis import given, strategies as st

from degprinc.field import Coefficient

fracs = st.fractions(-100, 100, max_denominator=50)
coeffs = st.builds(Coefficient, fracs, fracs)


def test_golden_ratio_identities():
    phi = Coefficient(Fraction(1, 2), Fraction(1, 2))
    assert phi * phi == phi + 1
    assert phi * phi.conjugate() == -1
    assert math.isclose(float(phi), (1 + math.sqrt(5)) / 2)


def test_rational_embedding():
    assert Coefficient(3) == 3
    assert hash(Coefficient(2)) == hash(2)
    assert Coefficient(Fraction(1, 2)).is_rational()
    assert Coefficient(Fraction(2, 3)).to_fraction() == Fraction(2, 3)
    assert not Coefficient(0, 1).is_rational()


def test_json_round_trip_form():
    assert Coefficient(1, 1).to_json() == {"a": "1", "b": "1"}


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(coeffs)
def test_inverse_and_norm(x):
    if x.is_zero():
        return
    assert x * (1 / x) == 1
    n = x * x.conjugate()
    assert n.is_rational()


@given(coeffs, coeffs)
def test_float_is_a_homomorphism(x, y):
    assert math.isclose(float(x * y), float(x) * float(y), rel_tol=1e-9, abs_tol=1e-9)
