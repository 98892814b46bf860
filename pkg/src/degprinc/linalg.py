"""Exact Gaussian elimination over Q(sqrt5) and small numeric helpers."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import ONE, ZERO, Coefficient

Vector = tuple  # tuple of Coefficient


def vec(values) -> Vector:
    return tuple(Coefficient.coerce(v) for v in values)


def dot(u: Sequence[Coefficient], v: Sequence[Coefficient]) -> Coefficient:
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def rref(rows: Sequence[Sequence]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(vec(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def leading_ranks(rows: Sequence[Sequence]) -> list[int]:
    """``out[i]`` is the rank of ``rows[:i+1]`` (incremental elimination)."""
    basis: list[tuple[list[Coefficient], int]] = []
    out = []
    for row in rows:
        v = list(vec(row))
        for b, c in basis:
            if v[c]:
                f = v[c]
                v = [x - f * y if y else x for x, y in zip(v, b)]
        c = next((i for i, x in enumerate(v) if x), None)
        if c is not None:
            inv = v[c].inverse()
            basis.append(([x * inv for x in v], c))
        out.append(len(basis))
    return out


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Exact basis of ``{x : rows @ x = 0}``."""
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_square(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[Vector]:
    """Return X with A X = B for an invertible square A (columns of B as rows)."""
    n = len(a)
    aug = [list(vec(a[i])) + [Coefficient.coerce(bj[i]) for bj in b] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [tuple(red[i][n + j] for i in range(n)) for j in range(len(b))]


def to_float(rows) -> np.ndarray:
    return np.array([[float(x) for x in r] for r in rows], dtype=float)


def numeric_rank(m: np.ndarray, tol: float = 1e-9) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(np.atleast_2d(m), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * max(1.0, s[0])))
