from __future__ import annotations

import math

import numpy as np
import pytest

from degprinc.lie import (LieError, brute_symmetric, lie_names, lie_reduce, lie_solve, parse_lie,
                          pfaffian, rotation_blocks, sym_tracefree_basis, trace_powers)


def random_skew(rng, n):
    M = rng.normal(size=(n, n))
    return M - M.T


def test_pfaffian_squares_to_determinant():
    rng = np.random.default_rng(0)
    for n in (2, 4, 6):
        for _ in range(10):
            A = random_skew(rng, n)
            assert pfaffian(A) ** 2 == pytest.approx(np.linalg.det(A), rel=1e-9, abs=1e-9)
    assert pfaffian(np.array([[0.0, 1.0], [-1.0, 0.0]])) == 1
    with pytest.raises(LieError):
        pfaffian(np.eye(2))
    with pytest.raises(LieError):
        pfaffian(np.zeros((3, 3)))


def test_rotation_blocks_invariants():
    a = [0.5, -2.0]
    A = rotation_blocks(a, 4)
    assert pfaffian(A) == pytest.approx(a[0] * a[1])
    # tr(A^{2p}) = 2 (-1)^p sum a_j^{2p}
    for p in (1, 2):
        assert trace_powers(A, [2 * p])[0] == pytest.approx(2 * (-1) ** p * sum(v ** (2 * p) for v in a))


def test_trace_powers_match_eigenvalues():
    A = np.diag([1.0, 2.0, -3.0])
    assert trace_powers(A, [3, 1, 2]) == [1 + 8 - 27, 0.0, 14.0]


def test_names():
    assert lie_names("sl", 4) == ["t2", "t3", "t4"]
    assert lie_names("so", 4) == ["t2", "pf"]
    assert lie_names("so", 7) == ["t2", "t4", "t6"]
    with pytest.raises(LieError):
        lie_names("gl", 3)


def test_sl3_cubic_trace():
    lp = lie_reduce("sl", 3, parse_lie("sl", 3, "t3"), {"t2": 1.0}, "min")
    out = lie_solve(lp)
    assert out["value"] == pytest.approx(-1 / math.sqrt(6), abs=1e-9)
    A = np.array(out["matrix"])
    assert np.trace(A) == pytest.approx(0, abs=1e-9)
    assert out["matrix_invariants"]["t2"] == pytest.approx(1, abs=1e-9)


def test_so4_pfaffian_with_fixed_trace():
    # tr(A^2) = -2 (a1^2 + a2^2) = -2 forces a1^2 + a2^2 = 1, so pf <= 1/2
    lp = lie_reduce("so", 4, parse_lie("so", 4, "pf"), {"t2": -2.0}, "max")
    out = lie_solve(lp)
    assert out["value"] == pytest.approx(0.5, abs=1e-9)
    assert out["matrix_invariants"]["pf"] == pytest.approx(0.5, abs=1e-9)


def test_prefix_targets_required():
    with pytest.raises(LieError):
        lie_reduce("sl", 4, parse_lie("sl", 4, "t4"), {"t3": 1.0})


def test_symmetric_basis_is_orthonormal():
    B = sym_tracefree_basis(4)
    assert len(B) == 9
    G = np.einsum("aij,bij->ab", B, B)
    assert np.allclose(G, np.eye(9))
    assert np.allclose(np.einsum("aii->a", B), 0)


def test_matrix_search_agrees_with_reduction():
    F = parse_lie("sl", 3, "t3")
    ref = brute_symmetric(3, F, 1.0, "min", starts=12, seed=1)
    assert ref["value"] == pytest.approx(-1 / math.sqrt(6), abs=1e-7)
