"""Pure numpy implementation of the numeric polynomial kernels."""
from __future__ import annotations

import numpy as np


def _powers(x: np.ndarray, maxdeg: int) -> np.ndarray:
    pw = np.ones((x.shape[0], maxdeg + 1))
    for k in range(1, maxdeg + 1):
        pw[:, k] = pw[:, k - 1] * x
    return pw


def eval_grad(exps: np.ndarray, coeffs: np.ndarray, maxdeg: int, x: np.ndarray):
    n = x.shape[0]
    if exps.shape[0] == 0:
        return 0.0, np.zeros(n)
    pw = _powers(x, maxdeg)
    cols = pw[np.arange(n)[None, :], exps]  # (T, n)
    mono = coeffs * np.prod(cols, axis=1)
    grad = np.empty(n)
    for i in range(n):
        e = exps[:, i]
        mask = e > 0
        if not mask.any():
            grad[i] = 0.0
            continue
        others = np.prod(np.delete(cols[mask], i, axis=1), axis=1)
        grad[i] = np.sum(coeffs[mask] * e[mask] * pw[i, e[mask] - 1] * others)
    return float(mono.sum()), grad


def eval_system(exps, coeffs, offsets, maxdeg: int, x: np.ndarray):
    m = offsets.shape[0] - 1
    n = x.shape[0]
    vals = np.zeros(m)
    jac = np.zeros((m, n))
    for k in range(m):
        a, b = offsets[k], offsets[k + 1]
        vals[k], jac[k] = eval_grad(exps[a:b], coeffs[a:b], maxdeg, x)
    return vals, jac


def eval_values(exps, coeffs, maxdeg: int, pts: np.ndarray) -> np.ndarray:
    out = np.empty(pts.shape[0])
    n = pts.shape[1]
    for r in range(pts.shape[0]):
        pw = _powers(pts[r], maxdeg)
        out[r] = np.sum(coeffs * np.prod(pw[np.arange(n)[None, :], exps], axis=1)) if exps.shape[0] else 0.0
    return out
