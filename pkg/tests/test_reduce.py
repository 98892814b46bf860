from __future__ import annotations

import math

import numpy as np
import pytest

from degprinc.coxeter import catalog
from degprinc.invariants import SparseObjective, VariantError, basic_invariants
from degprinc.poly import parse
from degprinc.reduce import (Constraint, PreconditionError, Problem, brute_oracle, brute_zero,
                             check_nonneg, find_zero, linear_index, nonempty_principal,
                             pattern_of_point, restrict_to_hyperplanes, solve_on_strata,
                             strata_slices, zero_on_hyperplanes)


def objective(g, text):
    b = basic_invariants(g)
    return SparseObjective(parse(text, "y", nvars=len(b)), b)


def solve(g, text, constraint, sense, **kw):
    obj = objective(g, text) if text else None
    return solve_on_strata(Problem(g, obj, Constraint.parse(constraint), sense,
                                   basis=basic_invariants(g), **kw))


@pytest.mark.parametrize("sense,value,witness", [
    ("min", 1.0, [1, 0, 0, 0]),
    ("max", 1.5, [math.sqrt(0.5), math.sqrt(0.5), 0, 0]),
])
def test_f4_sextic_on_the_sphere(sense, value, witness):
    s = solve(catalog("F4"), "y2", "sphere:1", sense)
    assert s.status == "solved"
    assert s.value == pytest.approx(value, abs=1e-9)
    assert s.stratum_dim == 1
    assert np.allclose(sorted(np.abs(s.witness)), sorted(np.abs(witness)), atol=1e-7)


def test_a2_cubic_with_fixed_norm():
    # x1 + x2 + x3 = 0 and |x|^2 = 1: the minimum of x1^3 + x2^3 + x3^3 is -1/sqrt(6)
    s = solve(catalog("A", 2), "y3", "principal:0,1", "min")
    assert s.value == pytest.approx(-1 / math.sqrt(6), abs=1e-9)
    w = np.array(s.witness)
    assert w.sum() == pytest.approx(0, abs=1e-9) and w @ w == pytest.approx(1, abs=1e-9)


def test_principal_feasibility():
    assert solve(catalog("B", 3), None, "principal:3,3", "feasible").status == "solved"
    # sum x^4 <= (sum x^2)^2 rules out (1, 2)
    assert solve(catalog("B", 2), None, "principal:1,2", "feasible").status == \
        "infeasible-numerically"
    g = catalog("B", 3)
    assert nonempty_principal(g, basic_invariants(g), [3, 3]).status == "solved"


def test_strata_agree_with_brute_force():
    g = catalog("B", 3)
    p = Problem(g, objective(g, "y3 - y2"), Constraint.sphere(1), "max", basis=basic_invariants(g))
    a, b = solve_on_strata(p), brute_oracle(p)
    assert a.value == pytest.approx(b.value, abs=1e-6)
    assert b.method == "brute"


def test_solutions_are_reproducible():
    g = catalog("D", 4)
    runs = [solve(g, "y3 - y2^2 + y4", "sphere:1", "min", seed=3).to_json() for _ in range(2)]
    for r in runs:
        r.pop("timing")
    assert runs[0] == runs[1]


def test_preconditions():
    with pytest.raises(PreconditionError):
        solve(catalog("B", 3), "y2", "none", "min")
    with pytest.raises(VariantError):
        solve(catalog("E6"), "y2", "sphere:1", "min")
    with pytest.raises(ValueError):
        Constraint.parse("cube:3")


def test_constraint_parsing():
    assert Constraint.parse("principal:1,2").to_json() == {"kind": "principal",
                                                           "targets": [1.0, 2.0]}
    assert Constraint.parse("sphere:2").radius == 2
    assert Constraint.parse("none").kind == "none"


def test_nonneg_verdicts():
    g = catalog("B", 3)
    # power mean inequality: 3 * sum x^4 >= (sum x^2)^2
    r = check_nonneg(objective(g, "y2 - 1/3*y1^2"), [], sphere=1.0)
    assert r["verdict"] == "nonneg" and r["min"] == pytest.approx(0, abs=1e-9)
    r = check_nonneg(objective(g, "y3 - y2"), [], sphere=1.0)
    assert r["verdict"] == "not-nonneg" and r["min"] == pytest.approx(-0.25, abs=1e-9)
    r = check_nonneg(objective(g, "y2"), [objective(g, "y1 - 1")])
    assert r["verdict"] == "nonneg" and r["min"] == pytest.approx(1 / 3, abs=1e-8)


def test_slices_and_patterns():
    g = catalog("B", 3)
    assert all(s.info["free"] == 2 for s in strata_slices(g, 2))
    pat = pattern_of_point(g, np.array([1.0, 1.0, 0.0]))
    assert pat["multiplicities"] == [2] and pat["zeros"] == 1


def test_hyperplane_restrictions_are_substitutions():
    g = catalog("B", 3)
    f = objective(g, "y2^2 - y3 + 1")
    assert linear_index(f.F, g, 3) == 3
    full = f.composed()
    for r in restrict_to_hyperplanes(f):
        t = np.random.default_rng(0).normal(size=r.basis.shape[1])
        assert r.poly.eval(t) == pytest.approx(full.eval(r.basis @ t), rel=1e-9)


def test_zero_search():
    z = find_zero(parse("x1^2 + x2^2 - 1", nvars=2))
    assert z["found"] and abs(np.linalg.norm(z["point"]) - 1) < 1e-9
    assert not find_zero(parse("x1^2 + x2^2 + 1", nvars=2))["found"]
    g = catalog("B", 3)
    f = objective(g, "y2 - 2*y3 + 1/5")
    h, b = zero_on_hyperplanes(f), brute_zero(f)
    assert h["found"] and b["found"]
    assert abs(f.composed().eval(h["point"])) < 1e-8
