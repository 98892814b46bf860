from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
import sympy

from degprinc.arrangement import (count_flats_by_pairs, embed, flats, hyperplanes, jacobian_rank,
                                  maximal_patterns, patterns, random_rational_point, stratum_dim)
from degprinc.coxeter import catalog, root_system
from degprinc.invariants import basic_invariants


def _oracle_flat_counts(g) -> list[int]:
    """Distinct intersection subspaces, found by spanning subsets of normals."""
    normals = root_system(g).float_roots()
    normals = normals[[i for i in range(len(normals))
                       if not any(np.allclose(normals[i], -normals[j]) for j in range(i))]]
    seen = {0: {()}}
    for r in range(1, g.rank + 1):
        for sub in combinations(range(len(normals)), r):
            M = normals[list(sub)]
            if np.linalg.matrix_rank(M, tol=1e-9) < r:
                continue
            P = M.T @ np.linalg.pinv(M.T)
            seen.setdefault(r, set()).add(tuple(np.round(P, 8).ravel() + 0.0))
    return [len(seen.get(g.ambient - d, ())) for d in range(g.ambient - g.rank, g.ambient + 1)]


@pytest.mark.parametrize("spec", [("A", 3), ("B", 3), ("D", 4), ("H3",), ("I2", 5), ("F4",)])
def test_flat_counts_by_dimension(spec):
    g = catalog(*spec)
    got = [len(flats(g, d)) for d in range(g.rank + 1)]
    assert got == _oracle_flat_counts(g)


def test_known_counts():
    assert len(hyperplanes(catalog("H3"))) == 15
    assert [len(flats(catalog("A", 3), d)) for d in range(4)] == [1, 7, 6, 1]  # Stirling numbers
    assert count_flats_by_pairs(catalog("B", 3)) == len(flats(catalog("B", 3), 1))


def test_stratum_dim_examples():
    assert stratum_dim(catalog("D", 5), [1, 1, 1, 1, 0]) == 2
    assert stratum_dim(catalog("A", 3), [1, 1, 0, 0]) == 2
    assert stratum_dim(catalog("A", 3), [1, 1, 0, 0], essential=True) == 1


def test_stratum_dim_closed_forms():
    rng = np.random.default_rng(5)
    for _ in range(40):
        p = random_rational_point(rng, 5, "B", den=2, span=2)
        nonzero = {abs(v) for v in p if v != 0}
        assert stratum_dim(catalog("B", 5), p) == len(nonzero)
        assert stratum_dim(catalog("A", 4), p) == len(set(p))


def test_patterns_cover_strata():
    pats = patterns("B", 4, 2)
    assert all(p.free <= 2 for p in pats)
    assert {tuple(p.mult) for p in maximal_patterns("D", 4, 2)} >= {(3, 1), (2, 2)}
    p = patterns("A", 4, 2)[-1]
    assert embed(p, [1, 2]) == [1, 1, 2, 2]
    with pytest.raises(ValueError):
        embed(p, [1])


def test_jacobian_rank_against_sympy():
    g = catalog("B", 4)
    basics = basic_invariants(g).polys
    xs = sympy.symbols("x1:5")
    exprs = [sympy.sympify(q.to_string().replace("^", "**")) for q in basics]
    rng = np.random.default_rng(7)
    for _ in range(10):
        p = random_rational_point(rng, 4, "B", den=1, span=2)
        sub = {x: sympy.Rational(v.numerator, v.denominator) for x, v in zip(xs, p)}
        for k in range(1, 4):
            J = sympy.Matrix([[sympy.diff(e, x).subs(sub) for x in xs] for e in exprs[:k + 1]])
            assert jacobian_rank(basics, p, k) == J.rank()
