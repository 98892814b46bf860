from __future__ import annotations

import numpy as np
import pytest

from degprinc.coxeter import catalog, generate_group, is_invariant
from degprinc.invariants import (SparseObjective, VariantError, basic_invariants, check_basic_set,
                                 elementary_in_power_sums, is_symmetric, newton_rewrite,
                                 sparsity_certificate)
from degprinc.poly import Polynomial, elementary, parse, power_sum

SPECS = [("A", 3), ("B", 3), ("D", 4), ("D", 5), ("I2", 5), ("I2", 6), ("H3",), ("F4",)]


@pytest.mark.parametrize("spec", SPECS)
def test_basic_sets_are_invariant_and_independent(spec):
    g = catalog(*spec)
    b = basic_invariants(g)
    assert tuple(p.degree() for p in b.polys) == g.degrees or g.family == "A"
    rep = check_basic_set(b)
    assert rep["invariant"] and rep["independent"] and rep["degrees_match"]


@pytest.mark.parametrize("spec", [("B", 3), ("H3",), ("F4",)])
def test_invariance_under_float_group(spec):
    g = catalog(*spec)
    mats = generate_group(g).float_matrices()
    x = np.random.default_rng(0).normal(size=g.ambient)
    for p in basic_invariants(g).polys:
        vals = [p.eval(M @ x) for M in mats[:200]]
        assert np.allclose(vals, vals[0], rtol=1e-9)


def test_type_a_starts_in_degree_one():
    assert basic_invariants(catalog("A", 3)).degrees == (1, 2, 3, 4)
    assert basic_invariants(catalog("A", 2), "elementary").polys[2] == elementary(3, 3)


def test_d_tie_breaks_the_repeated_degree():
    g = catalog("D", 4)
    q4 = power_sum(4, 2, squares=True)
    e4 = elementary(4, 4)
    assert basic_invariants(g).polys[1:3] == (q4, e4)
    assert basic_invariants(g, tie=(1, 3)).polys[1:3] == (q4 + e4 * 3, q4)
    with pytest.raises(VariantError):
        basic_invariants(g, tie=(0, 0))


def test_unknown_or_inapplicable_variants():
    with pytest.raises(VariantError):
        basic_invariants(catalog("B", 3), "nope")
    with pytest.raises(VariantError):
        basic_invariants(catalog("B", 3), "elementary")


def test_newton_rewrite_round_trip():
    n = 4
    ps = [power_sum(n, k) for k in range(1, n + 1)]
    for k in range(1, n + 1):
        rewritten = newton_rewrite(elementary(n, k), n)
        assert rewritten.compose(ps) == elementary(n, k)
    table = elementary_in_power_sums(3)
    assert len(table) == 4 and table[0] == 1
    assert is_symmetric(parse("x1*x2 + x2*x3 + x1*x3", nvars=3))
    assert not is_symmetric(parse("x1*x2", nvars=3))


def test_sparse_objective_composes():
    g = catalog("B", 3)
    b = basic_invariants(g)
    F = parse("y1^2 - 2*y3", "y", nvars=3)
    obj = SparseObjective(F, b)
    x = [0.3, -1.1, 0.7]
    direct = F.eval([p.eval(x) for p in b.polys])
    assert obj.composed().eval(x) == pytest.approx(direct)
    assert obj.k == 3


def test_sparsity_certificate():
    cert = sparsity_certificate(catalog("B", 4), 2)
    assert cert["status"] == "independent" and cert["degrees"] == [2, 4, 6, 8]


def test_is_invariant_rejects_noninvariants():
    assert not is_invariant(catalog("D", 4), Polynomial.var(4, 0))
