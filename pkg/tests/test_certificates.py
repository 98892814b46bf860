from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy

from degprinc.certificates import f4_certificate, f4_triangle_poly, h4_evidence, orbit_distance
from degprinc.coxeter import catalog, generate_group
from degprinc.invariants import basic_invariants


@pytest.fixture(scope="module")
def cert():
    return f4_certificate()


def test_triangle_poly_is_the_sextic_on_squares():
    P = f4_triangle_poly()
    f = basic_invariants(catalog("F4")).polys[1]
    for s, t in [(0.1, 0.3), (0.2, 0.05), (0.4, 0.1)]:
        u = np.array([s, s, t, 1 - 2 * s - t])
        assert P.eval([s, t]) == pytest.approx(f.eval(np.sqrt(u)), rel=1e-12)


def test_interior_critical_values_match_sympy(cert):
    s, t = sympy.symbols("s t")
    P = sympy.sympify(f4_triangle_poly().to_string().replace("^", "**"),
                      locals={"x1": s, "x2": t})
    crit = sympy.solve([sympy.diff(P, s), sympy.diff(P, t)], [s, t], dict=True)
    inside = {P.subs(c) for c in crit
              if all(v.is_real for v in c.values()) and c[s] > 0 and c[t] > 0
              and 2 * c[s] + c[t] < 1}
    assert {Fraction(str(v)) for v in inside} == {Fraction(v) for v in cert["interior_values"]}


def test_extremes_on_the_sphere(cert):
    assert (cert["min"], cert["max"]) == ("1", "3/2")
    assert cert["resultant_degree"] == 3
    f = basic_invariants(catalog("F4")).polys[1].compiled()
    from degprinc.kernels import eval_values
    pts = np.random.default_rng(0).normal(size=(20000, 4))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    vals = eval_values(f, pts)
    assert vals.min() >= 1 - 1e-12 and vals.max() <= 1.5 + 1e-12
    ext = cert["sphere_extremizers"]
    assert ext["min"]["stratum_dim"] == ext["max"]["stratum_dim"] == 1


def test_orbit_distance():
    mats = generate_group(catalog("B", 2)).float_matrices()
    assert orbit_distance(mats, np.array([0.0, -1.0]), np.array([1.0, 0.0])) < 1e-12
    assert orbit_distance(mats, np.array([0.6, 0.8]), np.array([1.0, 0.0])) > 0.1


@pytest.mark.slow
def test_h4_surrogate_extremizers():
    r = h4_evidence(budget=32, seed=0)
    assert r["min"]["value"] < r["max"]["value"]
    assert r["min"]["stratum_dim"] == r["max"]["stratum_dim"] == 1
    assert r["max"]["orbit_distance"]["e1"] < 1e-8
    assert r["min"]["orbit_distance"]["e1+e2"] < 1e-8
