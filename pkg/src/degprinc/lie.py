"""Matrix problems on sl_n and so_n reduced to their Weyl groups.

On ``sl_n`` the invariants ``tr(A^k)`` are the power sums of the eigenvalues,
so a problem in them becomes an A_{n-1} problem on the diagonal.  On
``so_{2m}`` / ``so_{2m+1}`` a skew matrix is conjugate to a block diagonal of
rotations ``[[0, a], [-a, 0]]``; then ``tr(A^{2p}) = 2 (-1)^p s_{2p}(a)`` and
``pf(A) = a_1 ... a_m``, which gives a D_m / B_m problem.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coxeter import catalog
from .kernels import eval_grad
from .invariants import BasicInvariantSet, SparseObjective, basic_invariants
from .optim import low_discrepancy
from .poly import Polynomial, elementary, parse, power_sum
from .reduce import Constraint, Problem, Solution, solve_on_strata


class LieError(ValueError):
    pass


def trace_powers(A, ks: Sequence[int]) -> list[float]:
    """``tr(A^k)`` for each ``k`` by repeated multiplication."""
    A = np.asarray(A, dtype=float)
    out, P, cur = [], np.eye(len(A)), 0
    for k in sorted(set(ks)):
        while cur < k:
            P, cur = P @ A, cur + 1
        out.append((k, float(np.trace(P))))
    vals = dict(out)
    return [vals[k] for k in ks]


def pfaffian(A) -> float:
    """Pfaffian by expansion along the first row; ``pf([[0, 1], [-1, 0]]) = 1``."""
    A = np.asarray(A, dtype=float)
    n = len(A)
    if n % 2:
        raise LieError("the Pfaffian needs an even-sized matrix")
    if not np.allclose(A, -A.T, atol=1e-12):
        raise LieError("matrix is not skew-symmetric")
    return _pf(A)


def _pf(A: np.ndarray) -> float:
    n = len(A)
    if n == 0:
        return 1.0
    total = 0.0
    for j in range(1, n):
        if A[0, j] == 0:
            continue
        keep = [i for i in range(1, n) if i != j]
        total += (-1) ** (j - 1) * A[0, j] * _pf(A[np.ix_(keep, keep)])
    return total


def rotation_blocks(a: Sequence[float], n: int) -> np.ndarray:
    """Block diagonal skew matrix with blocks ``[[0, a_j], [-a_j, 0]]`` (zero-padded to ``n``)."""
    A = np.zeros((n, n))
    for j, v in enumerate(a):
        A[2 * j, 2 * j + 1] = v
        A[2 * j + 1, 2 * j] = -v
    return A


def _so_basis(m: int, odd: bool) -> tuple[BasicInvariantSet, dict]:
    """Block-parameter invariants, with the matrix name each one stands for."""
    g = catalog("B" if odd else "D", m)
    polys = [(2 * p, power_sum(m, 2 * p), f"t{2 * p}") for p in range(1, m if not odd else m + 1)]
    if not odd:
        polys.append((m, elementary(m, m), "pf"))
    polys.sort(key=lambda e: e[0])
    names = {name: i for i, (_, _, name) in enumerate(polys)}
    return BasicInvariantSet(g, "lie-blocks", tuple(p for _, p, _ in polys)), names


@dataclass
class LieProblem:
    kind: str
    n: int
    problem: Problem
    names: list  # matrix invariant names, in basis order

    def back_map(self, sol: Solution) -> np.ndarray | None:
        """Canonical matrix for a Weyl witness: diagonal (sl) or rotation blocks (so)."""
        if sol.witness is None:
            return None
        w = np.asarray(sol.witness)
        if self.kind == "sl":
            return np.diag(w)
        return rotation_blocks(w, self.n)

    def matrix_invariants(self, A: np.ndarray) -> dict:
        out = {}
        for name in self.names:
            out[name] = pfaffian(A) if name == "pf" else trace_powers(A, [int(name[1:])])[0]
        return out


def lie_names(kind: str, n: int) -> list[str]:
    """Variable names accepted in objectives, in order."""
    if kind == "sl":
        return [f"t{k}" for k in range(2, n + 1)]
    if kind == "so":
        m = n // 2
        names = [f"t{2 * p}" for p in range(1, m if n % 2 == 0 else m + 1)]
        return names + (["pf"] if n % 2 == 0 else [])
    raise LieError(f"unknown kind {kind!r}")


def lie_reduce(kind: str, n: int, F: Polynomial, targets: dict | None = None,
               sense: str = "min", seed: int = 0, budget: int | None = None) -> LieProblem:
    """Translate a problem in matrix invariants into a Weyl-group :class:`Problem`.

    ``F`` is a polynomial in :func:`lie_names`; ``targets`` fixes matrix
    invariants (by name) and must cover a prefix of the basis order.
    """
    targets = dict(targets or {})
    names = lie_names(kind, n)
    if F.nvars > len(names):
        raise LieError(f"objective has {F.nvars} variables; {kind}_{n} has {len(names)}")
    if kind == "sl":
        if n < 2:
            raise LieError("sl_n needs n >= 2")
        g = catalog("A", n - 1)
        basis = basic_invariants(g)
        # t_k = s_k(eigenvalues); y_1 = s_1 is pinned to 0
        subs = [Polynomial.var(n, k - 1) for k in range(2, n + 1)]
        order = ["t1"] + names
        conv = {name: 1.0 for name in order}
        targets = {"t1": 0.0, **targets}
    else:
        m = n // 2
        if m < 1 or (n % 2 == 0 and m < 2):
            raise LieError("so_n needs n >= 3")
        basis, pos = _so_basis(m, n % 2 == 1)
        size = len(basis)
        conv = {}
        subs = []
        for name in names:
            if name == "pf":
                conv[name] = 1
            else:
                p = int(name[1:]) // 2
                conv[name] = 2 * (-1) ** p
            subs.append(Polynomial.var(size, pos[name]).scale(conv[name]))
        order = sorted(names, key=lambda nm: pos[nm])
    G = F.compose(subs[:F.nvars]) if F.nvars else Polynomial.constant(len(basis), F.coefficient(()))
    unknown = set(targets) - set(order)
    if unknown:
        raise LieError(f"unsupported invariant(s) {sorted(unknown)}")
    prefix = order[:len(targets)]
    if set(prefix) != set(targets):
        raise LieError(f"targets must fix a prefix of {order}")
    vals = [targets[nm] / conv[nm] for nm in prefix]
    obj = SparseObjective(G, basis)
    c = Constraint.principal(vals) if vals else Constraint()
    p = Problem(basis.group, obj, c, sense, budget=budget, seed=seed, basis=basis)
    return LieProblem(kind, n, p, order if kind == "so" else names)


def lie_solve(lp: LieProblem) -> dict:
    sol = solve_on_strata(lp.problem)
    A = lp.back_map(sol)
    out = sol.to_json()
    if A is not None:
        out["matrix"] = [[float(f"{v:.12g}") for v in row] for row in A]
        out["matrix_invariants"] = {k: float(f"{v:.12g}")
                                    for k, v in lp.matrix_invariants(A).items()}
    out["solution"] = sol
    return out


def sym_tracefree_basis(n: int) -> np.ndarray:
    """Frobenius-orthonormal basis of symmetric trace-zero ``n x n`` matrices."""
    mats = []
    for i in range(n):
        for j in range(i, n):
            E = np.zeros((n, n))
            E[i, j] = E[j, i] = 1.0 if i == j else np.sqrt(0.5)
            mats.append(E.ravel())
    V = np.array(mats).T
    ident = np.eye(n).ravel() / np.sqrt(n)
    V = V - np.outer(ident, ident @ V)
    u, sv, _ = np.linalg.svd(V, full_matrices=False)
    return u[:, sv > 1e-10].T.reshape(-1, n, n)


def brute_symmetric(n: int, F: Polynomial, t2: float = 1.0, sense: str = "min",
                    starts: int = 48, seed: int = 0) -> dict:
    """Multistart over symmetric trace-zero matrices with ``tr(A^2) = t2``.

    Independent of the eigenvalue reduction: for symmetric ``A`` the
    constraint is the Frobenius sphere of radius ``sqrt(t2)``.
    """
    from scipy.optimize import minimize

    B = sym_tracefree_basis(n)
    r = float(np.sqrt(t2))
    names = lie_names("sl", n)[:F.nvars]
    ks = [int(nm[1:]) for nm in names]
    Fc = F.compiled()
    sgn = 1.0 if sense == "min" else -1.0

    def value_grad(A):
        pw = [np.eye(n)]
        for _ in range(max(ks, default=1)):
            pw.append(pw[-1] @ A)
        tv = np.array([np.trace(pw[k]) for k in ks])
        f, gf = eval_grad(Fc, tv)
        G = sum(gk * k * pw[k - 1] for gk, k in zip(gf, ks)) if ks else np.zeros((n, n))
        return f, G

    def fun(u):
        nu = np.linalg.norm(u)
        if nu < 1e-300:
            return np.inf, np.zeros_like(u)
        v = r * u / nu
        f, G = value_grad(np.tensordot(v, B, axes=1))
        gv = np.tensordot(B, G, axes=([1, 2], [0, 1]))
        gu = r * (gv - v * (v @ gv) / r ** 2) / nu
        return sgn * f, sgn * gu

    rng = np.random.default_rng(seed + 31)
    best = None
    for u0 in rng.normal(size=(starts, len(B))):
        res = minimize(fun, u0, jac=True, method="L-BFGS-B",
                       options={"maxiter": 500, "gtol": 1e-11, "ftol": 1e-15})
        v = sgn * fun(res.x)[0]
        if np.isfinite(v) and (best is None or sgn * v < sgn * best[0]):
            best = (v, res.x)
    if best is None:
        return {"status": "infeasible-numerically", "value": None}
    u = best[1]
    A = np.tensordot(r * u / np.linalg.norm(u), B, axes=1)
    return {"status": "solved", "value": float(best[0]), "matrix": A}


def parse_lie(kind: str, n: int, text: str) -> Polynomial:
    """Parse an objective written in :func:`lie_names` (e.g. ``"t3 + pf^2"``)."""
    names = lie_names(kind, n)
    return parse(text, {nm: i for i, nm in enumerate(names)}, nvars=len(names))


__all__ = ["LieError", "LieProblem", "brute_symmetric", "lie_names", "lie_reduce", "lie_solve",
           "parse_lie", "pfaffian", "rotation_blocks", "sym_tracefree_basis", "trace_powers"]
