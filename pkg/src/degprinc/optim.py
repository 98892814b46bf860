"""Multistart local optimization of invariant objectives on linear slices.

A slice is ``x = M t`` for an ``n x j`` matrix ``M`` (a stratum pattern, a
flat basis, or the identity).  Three modes are supported: the radius-``r``
sphere (through the retraction ``x = r M u / |M u|``), principal constraints
``pi_i(x) = v_i``, and unconstrained search.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import least_squares, minimize
from scipy.stats import qmc

from .kernels import CompiledSystem, eval_grad, eval_system, eval_values
from .poly import Polynomial


class InvariantObjective:
    """``F(pi_1(x), ..., pi_k(x))`` evaluated through the chain rule.

    Composition is never expanded, so high-degree basics stay cheap.
    """

    def __init__(self, F: Polynomial, basics: Sequence[Polynomial]):
        self.k = F.nvars
        if len(basics) < self.k:
            raise ValueError("not enough basic invariants for the objective")
        self.basics = list(basics[:self.k])
        self.n = self.basics[0].nvars if self.basics else 0
        self.F = F
        self._F = F.compiled()
        self._sys = CompiledSystem.from_polys(self.basics)
        self._cps = [p.compiled() for p in self.basics]

    @classmethod
    def plain(cls, f: Polynomial) -> "InvariantObjective":
        return cls(Polynomial.var(1, 0), [f])

    def invariants(self, x: np.ndarray):
        return eval_system(self._sys, x)

    def value_grad(self, x: np.ndarray):
        vals, jac = eval_system(self._sys, x)
        fv, fg = eval_grad(self._F, vals)
        return fv, jac.T @ fg

    def value(self, x: np.ndarray) -> float:
        return self.value_grad(x)[0]

    def values(self, pts: np.ndarray) -> np.ndarray:
        ys = np.column_stack([eval_values(cp, pts) for cp in self._cps])
        return eval_values(self._F, ys)

    def invariant_values(self, pts: np.ndarray) -> np.ndarray:
        return np.column_stack([eval_values(cp, pts) for cp in self._cps])


@dataclass
class LocalResult:
    value: float  # objective value f (not sign-adjusted)
    x: np.ndarray  # ambient point
    t: np.ndarray  # slice coordinates
    residual: float = 0.0


def low_discrepancy(j: int, count: int, seed: int) -> np.ndarray:
    """Scrambled Sobol points in ``[-1, 1]^j``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        s = qmc.Sobol(j, scramble=True, seed=seed).random(count)
    return 2.0 * s - 1.0


def _newton_polish(fun, u: np.ndarray, iters: int = 6, h: float = 1e-6):
    """Newton steps with a finite-difference Hessian; keeps only improvements."""
    best_v, g = fun(u)
    for _ in range(iters):
        j = u.size
        hess = np.empty((j, j))
        for i in range(j):
            e = np.zeros(j)
            e[i] = h
            hess[:, i] = (fun(u + e)[1] - fun(u - e)[1]) / (2 * h)
        hess = 0.5 * (hess + hess.T)
        step = np.linalg.pinv(hess, rcond=1e-10) @ g
        cand = u - step
        v, gc = fun(cand)
        if not np.isfinite(v) or v > best_v + 1e-15 * max(1.0, abs(best_v)):
            break
        done = np.linalg.norm(step) <= 1e-15 * max(1.0, np.linalg.norm(u))
        u, best_v, g = cand, v, gc
        if done:
            break
    return u


class SphereSlice:
    """Objective on ``{x = r M u / |M u|}``, minimized with sign ``sgn``."""

    def __init__(self, obj: InvariantObjective, M: np.ndarray, r: float, sgn: float):
        self.obj, self.M, self.r, self.sgn = obj, M, r, sgn

    def point(self, u: np.ndarray) -> np.ndarray:
        y = self.M @ u
        return self.r * y / np.linalg.norm(y)

    def fun(self, u: np.ndarray):
        y = self.M @ u
        ny = np.linalg.norm(y)
        if ny < 1e-300:
            return np.inf, np.zeros_like(u)
        x = self.r * y / ny
        f, gx = self.obj.value_grad(x)
        # d x / d y = r (I - y y^T / |y|^2) / |y|
        gy = self.r * (gx - x * (x @ gx) / (self.r ** 2)) / ny
        return self.sgn * f, self.sgn * (self.M.T @ gy)


def sphere_multistart(obj: InvariantObjective, M: np.ndarray, r: float, sense: str,
                      budget: int, seed: int, starts: np.ndarray | None = None) -> list[LocalResult]:
    """Local searches on the sphere slice; returns all end points."""
    sgn = 1.0 if sense == "min" else -1.0
    sl = SphereSlice(obj, M, r, sgn)
    j = M.shape[1]
    if j == 1:
        out = []
        for u in (np.array([1.0]), np.array([-1.0])):
            x = sl.point(u)
            out.append(LocalResult(obj.value(x), x, u))
        return out
    if starts is None:
        pool = low_discrepancy(j, max(16 * budget, 512), seed)
        pool = pool[np.linalg.norm(M @ pool.T, axis=0) > 1e-8]
        xs = np.array([sl.point(u) for u in pool])
        vals = sgn * obj.values(xs)
        order = np.argsort(vals, kind="stable")
        # half the starts from the best screened samples, half spread out
        half = budget // 2
        top = [int(i) for i in order[:budget - half]]
        chosen = set(top)
        spread = [i for i in range(len(pool)) if i not in chosen][:half]
        starts = pool[top + spread]
    out = []
    for u0 in starts:
        res = minimize(sl.fun, u0, jac=True, method="L-BFGS-B",
                       options={"maxiter": 400, "gtol": 1e-11, "ftol": 1e-15})
        u = res.x / np.linalg.norm(res.x)
        x = sl.point(u)
        out.append(LocalResult(obj.value(x), x, u))
    best = min(out, key=lambda r_: sgn * r_.value)
    u = _newton_polish(sl.fun, best.t)
    x = sl.point(u)
    v = obj.value(x)
    if sgn * v <= sgn * best.value:
        out.append(LocalResult(v, x, u / np.linalg.norm(u)))
    return out


def free_multistart(obj: InvariantObjective, M: np.ndarray, sense: str, budget: int, seed: int,
                    scale: float = 1.0) -> list[LocalResult]:
    """Unconstrained local searches on the slice."""
    sgn = 1.0 if sense == "min" else -1.0
    j = M.shape[1]

    def fun(t):
        f, g = obj.value_grad(M @ t)
        return sgn * f, sgn * (M.T @ g)

    starts = scale * low_discrepancy(j, budget, seed)
    starts[0] = 0.0
    out = []
    for t0 in starts:
        with np.errstate(all="ignore"):
            res = minimize(fun, t0, jac=True, method="L-BFGS-B",
                           options={"maxiter": 400, "gtol": 1e-11, "ftol": 1e-15})
        x = M @ res.x
        out.append(LocalResult(obj.value(x), x, res.x))
    return out


class PrincipalSlice:
    """Residuals ``pi_i(M t) - v_i`` for the leading basics."""

    def __init__(self, basics: Sequence[Polynomial], targets: Sequence[float], M: np.ndarray):
        self.sys = CompiledSystem.from_polys(list(basics[:len(targets)]))
        self.v = np.asarray(targets, dtype=float)
        self.M = M

    def res(self, t):
        vals, _ = eval_system(self.sys, self.M @ t)
        return vals - self.v

    def jac(self, t):
        _, jac = eval_system(self.sys, self.M @ t)
        return jac @ self.M

    def norm(self, t) -> float:
        return float(np.linalg.norm(self.res(t)))


def _project(ps: PrincipalSlice, t: np.ndarray, iters: int = 20) -> np.ndarray:
    """Gauss-Newton (minimum-norm steps) onto the constraint set."""
    best, bn = t, ps.norm(t)
    if not np.all(np.isfinite(t)):
        return t
    for _ in range(iters):
        r = ps.res(best)
        step = np.linalg.lstsq(ps.jac(best), r, rcond=None)[0]
        cand = best - step
        cn = ps.norm(cand)
        if not cn < bn:
            break
        best, bn = cand, cn
        if bn < 1e-15:
            break
    return best


def principal_feasible(basics, targets, M: np.ndarray, budget: int, seed: int,
                       scale: float) -> list[LocalResult]:
    """Least-squares searches for ``pi_i(M t) = v_i``; residual is the 2-norm."""
    ps = PrincipalSlice(basics, targets, M)
    j = M.shape[1]
    starts = scale * low_discrepancy(j, budget, seed)
    out = []
    for t0 in starts:
        sol = least_squares(ps.res, t0, jac=ps.jac, method="trf", xtol=1e-15, ftol=1e-15,
                            gtol=1e-15, max_nfev=400 * (j + 1))
        t = _project(ps, sol.x)
        out.append(LocalResult(0.0, M @ t, t, ps.norm(t)))
    return out


def principal_optimize(obj: InvariantObjective, basics, targets, M: np.ndarray, sense: str,
                       budget: int, seed: int, scale: float) -> list[LocalResult]:
    """Optimize on ``pi_i(M t) = v_i`` starting from feasible points."""
    sgn = 1.0 if sense == "min" else -1.0
    ps = PrincipalSlice(basics, targets, M)
    feas = principal_feasible(basics, targets, M, budget, seed, scale)
    feas = [f for f in feas if f.residual < 1e-8]
    out = []

    def fun(t):
        f, g = obj.value_grad(M @ t)
        return sgn * f, sgn * (M.T @ g)

    cons = {"type": "eq", "fun": ps.res, "jac": ps.jac}
    for f0 in feas:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            res = minimize(fun, f0.t, jac=True, method="SLSQP", constraints=[cons],
                           options={"maxiter": 200, "ftol": 1e-12})
        t = _project(ps, res.x) if np.all(np.isfinite(res.x)) else f0.t
        if not ps.norm(t) <= 1e-8:
            t = f0.t
        x = M @ t
        out.append(LocalResult(obj.value(x), x, t, ps.norm(t)))
    return out


def best_of(results: list[LocalResult], sense: str) -> LocalResult | None:
    if not results:
        return None
    sgn = 1.0 if sense == "min" else -1.0
    return min(results, key=lambda r: (sgn * r.value, r.residual))
