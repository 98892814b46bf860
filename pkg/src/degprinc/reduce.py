"""Invariant optimization and feasibility restricted to low-dimensional strata.

The solvers here take a problem on R^n whose data depend only on the first
``k`` basic invariants and search the ``k``-dimensional strata of the
reflection arrangement instead of the whole space.  A direct multistart search
on R^n (:func:`brute_oracle`) is kept alongside as an independent check.
"""
from __future__ import annotations

import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .arrangement import StratumPattern, flat_representatives, maximal_patterns, stratum_dim
from .coxeter import GroupDescriptor, root_system
from .invariants import BasicInvariantSet, SparseObjective, basic_invariants
from .optim import (InvariantObjective, LocalResult, PrincipalSlice, _project, best_of,
                    free_multistart, principal_feasible, principal_optimize, sphere_multistart)
from .poly import Polynomial

FEAS_TOL = 1e-10
VALUE_TOL = 1e-9


class PreconditionError(ValueError):
    """The degree-principle route does not apply to this problem."""


class ConjectureWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Constraint:
    """``sphere`` (radius), ``principal`` (targets for pi_1..pi_j), or ``none``."""

    kind: str = "none"
    radius: float = 1.0
    targets: tuple = ()

    @classmethod
    def sphere(cls, r: float = 1.0) -> "Constraint":
        return cls("sphere", float(r))

    @classmethod
    def principal(cls, targets: Sequence[float]) -> "Constraint":
        return cls("principal", targets=tuple(float(v) for v in targets))

    @classmethod
    def parse(cls, text: str | None) -> "Constraint":
        if not text or text == "none":
            return cls()
        kind, _, rest = text.partition(":")
        if kind == "sphere":
            return cls.sphere(float(rest) if rest else 1.0)
        if kind == "principal":
            return cls.principal([float(v) for v in rest.split(",") if v.strip()])
        raise ValueError(f"unknown constraint {text!r}")

    def to_json(self):
        if self.kind == "sphere":
            return {"kind": "sphere", "radius": self.radius}
        if self.kind == "principal":
            return {"kind": "principal", "targets": list(self.targets)}
        return {"kind": "none"}


@dataclass
class Problem:
    group: GroupDescriptor
    objective: SparseObjective | None
    constraint: Constraint = field(default_factory=Constraint)
    sense: str = "min"
    coercive: bool = False
    budget: int | None = None
    seed: int = 0
    basis: BasicInvariantSet | None = None

    def __post_init__(self):
        if self.sense not in ("min", "max", "feasible"):
            raise ValueError(f"sense must be min, max or feasible, not {self.sense!r}")
        if self.basis is None:
            self.basis = self.objective.basis if self.objective else basic_invariants(self.group)
        if self.sense != "feasible" and self.objective is None:
            raise ValueError("an objective is needed for min/max")


@dataclass
class Solution:
    status: str
    value: float | None
    witness: list | None
    pattern: dict | None
    residual: float
    stratum_dim: int | None = None
    k: int | None = None
    timing: float = 0.0
    warnings: list = field(default_factory=list)
    method: str = "strata"
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "value": _num(self.value),
            "witness": None if self.witness is None else [_num(v) for v in self.witness],
            "pattern": self.pattern,
            "residual": _num(self.residual),
            "stratum_dim": self.stratum_dim,
            "k": self.k,
            "method": self.method,
            "timing": round(self.timing, 3),
            "warnings": list(self.warnings),
        }
        out.update(self.extra)
        return out


def _num(v):
    if v is None:
        return None
    return float(f"{float(v):.12g}")


# ---------------------------------------------------------------------------
# helpers


def norm_index(g: GroupDescriptor) -> int:
    """1-based position of the squared norm among the basic invariants."""
    return 2 if g.family == "A" else 1


def effective_k(p: Problem) -> int:
    k = p.objective.k if p.objective else 0
    if p.constraint.kind == "sphere":
        k = max(k, norm_index(p.group))
    elif p.constraint.kind == "principal":
        k = max(k, len(p.constraint.targets))
    return max(k, 1)


def _check_route(g: GroupDescriptor) -> list[str]:
    if g.extra_dims:
        raise PreconditionError(
            f"{g.label} acts non-essentially with a trivial factor; the strata reduction does not"
            " apply (use brute_oracle)")
    if g.family in ("E6", "E7", "E8"):
        raise PreconditionError(f"no invariant polynomials are available for {g.label}")
    notes = []
    if g.family == "H4":
        msg = "H4: reduction to strata is conjectural for k = 2; compare with brute_oracle"
        warnings.warn(msg, ConjectureWarning, stacklevel=3)
        notes.append(msg)
    return notes


@dataclass
class Slice:
    """A linear parameterization ``x = M t`` with a printable description."""

    M: np.ndarray
    info: dict
    pattern: StratumPattern | None = None


def strata_slices(g: GroupDescriptor, k: int) -> list[Slice]:
    """Slices whose group translates cover the ``k``-stratum."""
    n = root_system(g).ambient
    if k >= n:
        return [Slice(np.eye(n), {"kind": "full", "dim": n})]
    if g.family in ("A", "B", "D"):
        return [Slice(p.matrix(), {"kind": "pattern", **p.to_json()}, p)
                for p in maximal_patterns(g.family, n, k)]
    out = []
    for nodes, flat in flat_representatives(g, k):
        out.append(Slice(flat.basis_matrix(), {"kind": "flat", "dim": flat.dim,
                                               "fixed_by_nodes": list(nodes)}))
    return out


def pattern_of_point(g: GroupDescriptor, x: np.ndarray, tol: float = 1e-9) -> dict:
    """The finest stratum description of ``x`` (blocks of equal coordinates)."""
    scale = max(1.0, float(np.max(np.abs(x)))) if len(x) else 1.0
    if g.family == "A":
        vals = sorted(x, reverse=True)
        mult = []
        for v in vals:
            if mult and abs(v - mult[-1][0]) <= tol * scale:
                mult[-1][1] += 1
            else:
                mult.append([v, 1])
        return {"kind": "pattern", "family": "A", "multiplicities": sorted((m for _, m in mult),
                                                                            reverse=True)}
    if g.family in ("B", "D"):
        a = np.abs(x)
        zeros = int(np.sum(a <= tol * scale))
        vals = sorted((v for v in a if v > tol * scale), reverse=True)
        mult = []
        for v in vals:
            if mult and abs(v - mult[-1][0]) <= tol * scale:
                mult[-1][1] += 1
            else:
                mult.append([v, 1])
        ms = sorted((m for _, m in mult), reverse=True)
        out = {"kind": "pattern", "family": g.family, "multiplicities": ms, "zeros": zeros}
        if g.family == "D":
            neg = int(np.sum(x < -tol * scale))
            out["sign"] = -1 if (zeros == 0 and neg % 2 == 1 and all(m % 2 == 0 for m in ms)) else 1
        return out
    return {"kind": "flat", "dim": stratum_dim(g, list(x))}


def _snap(g: GroupDescriptor, obj: InvariantObjective, x: np.ndarray, value: float,
          constraint: Constraint, basis, tol: float = 1e-6) -> tuple[np.ndarray, float]:
    """Move ``x`` onto the flat of nearly-vanishing roots when the value is unchanged."""
    rs = root_system(g)
    fr = rs.float_roots()[rs.positive]
    nx = np.linalg.norm(x)
    if nx == 0:
        return x, value
    rel = np.abs(fr @ x) / (np.linalg.norm(fr, axis=1) * nx)
    near = fr[(rel < tol) & (rel > 0)]
    if not len(near):
        return x, value
    exact = fr[rel == 0]
    normals = np.vstack([near, exact]) if len(exact) else near
    # orthonormal basis of the flat cut out by the (nearly) vanishing roots
    _, sv, vt = np.linalg.svd(normals)
    r = int(np.sum(sv > 1e-12 * sv[0]))
    Q = vt[r:].T
    if Q.shape[1] == 0:
        return x, value
    y = Q @ (Q.T @ x)
    if np.linalg.norm(y) < 1e-12 * nx:
        return x, value
    if constraint.kind == "sphere":
        y = constraint.radius * y / np.linalg.norm(y)
    elif constraint.kind == "principal":
        ps = PrincipalSlice(basis, constraint.targets, Q)
        t = _project(ps, Q.T @ x)
        if ps.norm(t) >= FEAS_TOL:
            return x, value
        y = Q @ t
    v = obj.value(y)
    if abs(v - value) <= VALUE_TOL * max(1.0, abs(value)):
        return y, v
    return x, value


def _scale_from_targets(g: GroupDescriptor, basis, targets) -> float:
    degs = [p.degree() for p in basis.polys[:len(targets)]]
    s = [abs(v) ** (1.0 / d) for v, d in zip(targets, degs) if d > 0]
    return 1.0 + max(s, default=1.0)


def _objective(p: Problem) -> InvariantObjective:
    if p.objective is None:
        # feasibility: a constant objective over the first invariant
        return InvariantObjective(Polynomial.constant(1, 0), list(p.basis.polys[:1]))
    F = p.objective.y_poly()
    k = max(p.objective.k, 1)
    Fk = Polynomial(k, {e[:k]: c for e, c in F.terms.items()})
    return InvariantObjective(Fk, list(p.basis.polys))


def _run_slice(p: Problem, obj: InvariantObjective, sl: Slice, budget: int, seed: int):
    c = p.constraint
    j = sl.M.shape[1]
    if c.kind == "sphere":
        return sphere_multistart(obj, sl.M, c.radius, p.sense, budget, seed)
    if c.kind == "principal":
        scale = _scale_from_targets(p.group, p.basis, c.targets)
        if p.sense == "feasible":
            return principal_feasible(p.basis.polys, c.targets, sl.M, budget, seed, scale)
        return principal_optimize(obj, p.basis.polys, c.targets, sl.M, p.sense, budget, seed, scale)
    return free_multistart(obj, sl.M, "min" if p.sense == "feasible" else p.sense, budget, seed)


def _finish(p: Problem, obj, results: list[tuple[LocalResult, Slice]], k: int, t0: float,
            notes: list, method: str) -> Solution:
    if not results:
        return Solution("infeasible-numerically", None, None, None, float("inf"), k=k,
                        timing=time.perf_counter() - t0, warnings=notes, method=method)
    if p.sense == "feasible" or p.constraint.kind == "principal":
        feas = [r for r in results if r[0].residual < FEAS_TOL]
        if not feas:
            best = min(results, key=lambda r: r[0].residual)
            x = best[0].x
            return Solution("infeasible-numerically", None, [float(v) for v in x],
                            best[1].info, best[0].residual, stratum_dim(p.group, list(x)), k,
                            time.perf_counter() - t0, notes, method)
        results = feas
    sgn = -1.0 if p.sense == "max" else 1.0
    if p.sense == "feasible":
        pick = min(results, key=lambda r: r[0].residual)
        cands = [pick]
    else:
        bestv = min(sgn * r[0].value for r in results)
        cands = [r for r in results if sgn * r[0].value <= bestv + VALUE_TOL * max(1.0, abs(bestv))]
    # deepest stratum first, then the smallest slice
    scored = []
    for r, sl in cands:
        x, v = _snap(p.group, obj, r.x, r.value, p.constraint, p.basis.polys)
        scored.append((stratum_dim(p.group, list(x)), sl.M.shape[1], sgn * v, x, v, r, sl))
    scored.sort(key=lambda s: (s[0], s[1], s[2]))
    sd, _, _, x, v, r, sl = scored[0]
    residual = r.residual
    if p.constraint.kind == "principal":
        residual = PrincipalSlice(p.basis.polys, p.constraint.targets, np.eye(len(x))).norm(x)
    elif p.constraint.kind == "sphere":
        residual = abs(float(np.linalg.norm(x)) - p.constraint.radius)
    status = "solved"
    if p.constraint.kind == "none" and np.linalg.norm(x) > 1e6:
        status = "unbounded-suspected"
    pattern = pattern_of_point(p.group, x) if method == "strata" else {"kind": "full"}
    pattern["slice"] = sl.info
    return Solution(status, None if p.sense == "feasible" else float(v), [float(c) for c in x],
                    pattern, float(residual), sd, k, time.perf_counter() - t0, notes, method)


def _sphere_form(p: Problem) -> tuple[Problem, bool]:
    """Principal targets fixing only the squared norm (and ``s_1 = 0`` for A) are a sphere."""
    c = p.constraint
    ni = norm_index(p.group)
    if (c.kind != "principal" or p.sense == "feasible" or len(c.targets) != ni
            or c.targets[ni - 1] <= 0 or (ni == 2 and c.targets[0] != 0)):
        return p, False
    q = Problem(p.group, p.objective, Constraint.sphere(float(np.sqrt(c.targets[ni - 1]))),
                p.sense, p.coercive, p.budget, p.seed, p.basis)
    return q, ni == 2


def _centered(sl: Slice) -> Slice | None:
    """Restrict a slice to coordinate sum zero."""
    ones = sl.M.sum(axis=0)
    if np.allclose(ones, 0):
        return sl
    _, sv, vt = np.linalg.svd(ones[None, :])
    N = vt[1:].T
    if N.shape[1] == 0:
        return None
    return Slice(sl.M @ N, sl.info, sl.pattern)


def solve_on_strata(p: Problem, jobs: int = 1) -> Solution:
    """Optimize (or find a feasible point) over the ``k``-stratum only.

    Slices are searched independently (``jobs`` worker threads); results are
    merged in slice order, so the outcome does not depend on ``jobs``.
    """
    t0 = time.perf_counter()
    notes = _check_route(p.group)
    if p.constraint.kind == "none" and p.sense != "feasible" and not p.coercive:
        raise PreconditionError("unconstrained problems need a sphere or principal constraint"
                                " (or the coercive flag)")
    if (p.constraint.kind == "principal" and p.sense != "feasible" and not p.coercive
            and len(p.constraint.targets) < norm_index(p.group)):
        raise PreconditionError("principal targets must fix the squared norm for min/max")
    k = effective_k(p)
    slices = strata_slices(p.group, k)
    if not slices:
        raise PreconditionError(f"no strata of dimension {k} for {p.group.label}")
    q, centered = _sphere_form(p)
    if q.constraint.kind != "principal":
        # every lower layer lies in the k-stratum; searching each one separately
        # reaches optima in narrow basins near deeper strata
        lower = [sl for j in range(1, min(k, root_system(p.group).ambient))
                 for sl in strata_slices(p.group, j)]
        slices = lower + [sl for sl in slices if sl.M.shape[1] == k or not lower]
    if centered:
        slices = [s for s in (_centered(sl) for sl in slices) if s is not None]
    obj = _objective(p)

    def run(item):
        idx, sl = item
        budget = p.budget or 16 * sl.M.shape[1]
        return [(r, sl) for r in _run_slice(q, obj, sl, budget, p.seed + 7919 * idx)]

    if jobs > 1 and len(slices) > 1:
        with ThreadPoolExecutor(jobs) as ex:
            chunks = list(ex.map(run, enumerate(slices)))
    else:
        chunks = [run(item) for item in enumerate(slices)]
    results = [r for chunk in chunks for r in chunk]
    return _finish(p, obj, results, k, t0, notes, "strata")


def brute_oracle(p: Problem, budget: int | None = None) -> Solution:
    """Multistart search directly on R^n with random (Gaussian) starts."""
    t0 = time.perf_counter()
    n = root_system(p.group).ambient
    if n > 8:
        raise PreconditionError("brute_oracle is limited to n <= 8")
    obj = _objective(p)
    M = np.eye(n)
    budget = budget or p.budget or 48 * n
    rng = np.random.default_rng(p.seed + 104729)
    c = p.constraint
    sl = Slice(M, {"kind": "full", "dim": n})
    if c.kind == "sphere":
        pool = rng.normal(size=(8 * budget, n))
        pool /= np.linalg.norm(pool, axis=1, keepdims=True)
        sgn = -1.0 if p.sense == "max" else 1.0
        vals = sgn * obj.values(c.radius * pool)
        order = np.argsort(vals, kind="stable")
        starts = np.vstack([pool[order[:budget // 2]], pool[rng.choice(len(pool), budget - budget // 2,
                                                                        replace=False)]])
        res = sphere_multistart(obj, M, c.radius, p.sense, budget, 0, starts=starts)
    else:
        res = _run_slice(p, obj, sl, budget, p.seed + 104729)
    sol = _finish(p, obj, [(r, sl) for r in res], n, t0, [], "brute")
    if sol.value is not None and p.sense != "feasible":
        sgn = -1.0 if p.sense == "max" else 1.0
        hits = sum(1 for r in res if abs(r.value - sol.value) <= 1e-7 * max(1.0, abs(sol.value)))
        sol.extra["hits"] = hits
        if hits < 2:
            sol.warnings.append("low confidence: optimum reached from a single start")
    return sol


def nonempty_principal(g: GroupDescriptor, basis: BasicInvariantSet, targets: Sequence[float],
                       budget: int | None = None, seed: int = 0) -> Solution:
    """Search the ``k``-stratum for a point with ``pi_i = v_i`` (``i <= k``).

    ``infeasible-numerically`` means nothing was found within the budget.
    """
    p = Problem(g, None, Constraint.principal(targets), "feasible", budget=budget, seed=seed,
                basis=basis)
    return solve_on_strata(p)


# ---------------------------------------------------------------------------
# nonnegativity


def check_nonneg(f: SparseObjective, constraints: Sequence[SparseObjective] = (),
                 sphere: float | None = None, budget: int | None = None, seed: int = 0) -> dict:
    """Minimize ``f`` over the stratum intersected with ``{g_i >= 0}`` (and a sphere)."""
    from scipy.optimize import minimize

    t0 = time.perf_counter()
    g = f.basis.group
    notes = _check_route(g)
    k = max([f.k] + [c.k for c in constraints])
    if sphere is not None:
        k = max(k, norm_index(g))
    obj = InvariantObjective(f.y_poly(), list(f.basis.polys))
    cons = [InvariantObjective(c.y_poly(), list(c.basis.polys)) for c in constraints]
    best = None
    for idx, sl in enumerate(strata_slices(g, k)):
        M = sl.M
        j = M.shape[1]
        b = budget or 16 * j
        seed_i = seed + 7919 * idx
        if not cons:
            if sphere is not None:
                res = sphere_multistart(obj, M, sphere, "min", b, seed_i)
            else:
                res = free_multistart(obj, M, "min", b, seed_i)
        else:
            res = _ineq_multistart(obj, cons, M, sphere, b, seed_i, minimize)
        for r in res:
            if best is None or r.value < best[0].value:
                best = (r, sl)
    if best is None:
        return {"verdict": "empty", "min": None, "witness": None, "warnings": notes}
    r, sl = best
    x = r.x
    unbounded = not np.isfinite(r.value) or np.linalg.norm(x) > 1e6
    return {
        "verdict": "nonneg" if r.value >= -1e-8 else "not-nonneg",
        "min": _num(r.value),
        "witness": [_num(v) for v in x],
        "stratum_dim": stratum_dim(g, list(x)) if np.all(np.isfinite(x)) else None,
        "k": k,
        "unbounded_suspected": bool(unbounded),
        "slice": sl.info,
        "timing": round(time.perf_counter() - t0, 3),
        "warnings": notes,
    }


def _ineq_multistart(obj, cons, M, sphere, budget, seed, minimize):
    from .optim import low_discrepancy

    j = M.shape[1]

    def point(u):
        y = M @ u
        return sphere * y / np.linalg.norm(y) if sphere is not None else y

    def fun(u):
        return obj.value(point(u))

    cfun = [{"type": "ineq", "fun": (lambda u, c=c: c.value(point(u)))} for c in cons]
    out = []
    for u0 in low_discrepancy(j, budget, seed):
        if np.linalg.norm(M @ u0) < 1e-8:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            res = minimize(fun, u0, method="SLSQP", constraints=cfun,
                           options={"maxiter": 300, "ftol": 1e-14})
        x = point(res.x)
        if all(c.value(x) >= -1e-9 for c in cons):
            out.append(LocalResult(obj.value(x), x, res.x))
    return out


# ---------------------------------------------------------------------------
# restriction to reflection hyperplanes


@dataclass
class HyperplaneRestriction:
    nodes: tuple
    basis: np.ndarray  # ambient x (n-1)
    poly: Polynomial  # in the n-1 flat coordinates

    def to_json(self):
        return {"fixed_by_nodes": list(self.nodes), "restricted": self.poly.to_string("t")}


def linear_index(F: Polynomial, g: GroupDescriptor, nbasics: int) -> int | None:
    """A basic invariant (1-based, not the squared norm) in which ``F`` is at most linear."""
    for k in range(1, nbasics + 1):
        if k == norm_index(g):
            continue
        if k > F.nvars or F.degree_in(k - 1) <= 1:
            return k
    return None


def restrict_to_hyperplanes(f: SparseObjective) -> list[HyperplaneRestriction]:
    """Restrict ``f = F(pi)`` to one reflection hyperplane per orbit."""
    g = f.basis.group
    if g.extra_dims:
        raise PreconditionError("hyperplane restriction needs an essential action")
    if linear_index(f.y_poly(), g, len(f.basis)) is None:
        raise PreconditionError("F must be at most linear in some basic invariant other than"
                                " the squared norm")
    poly = f.composed()
    n = root_system(g).ambient
    out = []
    for nodes, flat in flat_representatives(g, n - 1):
        if not root_system(g).exact:
            raise PreconditionError("exact restriction needs an exact realization")
        rows = [[flat.basis[j][i] for j in range(flat.dim)] for i in range(n)]
        out.append(HyperplaneRestriction(nodes, flat.basis_matrix(),
                                         poly.linear_substitute(rows, flat.dim)))
    return out


def find_zero(f: Polynomial, seed: int = 0, samples: int = 600, tol: float = 1e-9) -> dict:
    """Look for a real zero of ``f``: sign change plus bisection, else local minimization of |f|."""
    from scipy.optimize import minimize

    n = f.nvars
    obj = InvariantObjective.plain(f)
    rng = np.random.default_rng(seed)
    scales = np.repeat([0.1, 0.5, 1.0, 2.0, 4.0], samples // 5)
    pts = rng.normal(size=(len(scales), n)) * scales[:, None]
    pts = np.vstack([np.zeros((1, n)), pts])
    vals = obj.values(pts)
    if np.any(vals == 0):
        i = int(np.flatnonzero(vals == 0)[0])
        return {"found": True, "point": pts[i].tolist(), "value": 0.0, "method": "sample"}

    def bisect(a, b):
        fa = obj.value(a)
        for _ in range(200):
            m = 0.5 * (a + b)
            fm = obj.value(m)
            if fm == 0:
                return m
            if (fm < 0) == (fa < 0):
                a, fa = m, fm
            else:
                b = m
        return 0.5 * (a + b)

    def sign_change(vs, ps):
        neg, pos = np.flatnonzero(vs < 0), np.flatnonzero(vs > 0)
        if len(neg) and len(pos):
            z = bisect(ps[neg[0]], ps[pos[0]])
            return {"found": True, "point": z.tolist(), "value": float(obj.value(z)),
                    "method": "sign-change"}
        return None

    hit = sign_change(vals, pts)
    if hit:
        return hit
    sgn = 1.0 if np.all(vals > 0) else -1.0

    def fun(x):
        v, gr = obj.value_grad(x)
        return sgn * v, sgn * gr

    order = np.argsort(sgn * vals)[:24]
    best = None
    for i in order:
        with np.errstate(all="ignore"):
            res = minimize(fun, pts[i], jac=True, method="L-BFGS-B",
                           options={"maxiter": 1000, "gtol": 1e-14, "ftol": 1e-16})
        v = obj.value(res.x)
        if sgn * v < 0:
            both = np.vstack([res.x, pts[i]])
            return sign_change(np.array([v, vals[i]]), both)
        if best is None or abs(v) < abs(best[0]):
            best = (v, res.x)
    v, x = best
    return {"found": bool(abs(v) <= tol), "point": x.tolist(), "value": float(v),
            "method": "local-min"}


def zero_on_hyperplanes(f: SparseObjective, seed: int = 0) -> dict:
    """Zero of ``f`` searched on one hyperplane per orbit; point returned in R^n."""
    out = {"found": False, "restrictions": []}
    for i, hr in enumerate(restrict_to_hyperplanes(f)):
        z = find_zero(hr.poly, seed + i)
        rec = {"fixed_by_nodes": list(hr.nodes), "found": z["found"], "value": z["value"]}
        out["restrictions"].append(rec)
        if z["found"] and not out["found"]:
            out["found"] = True
            out["point"] = (hr.basis @ np.array(z["point"])).tolist()
    return out


def brute_zero(f: SparseObjective, seed: int = 0) -> dict:
    return find_zero(f.composed(), seed + 1000)


__all__ = [
    "ConjectureWarning", "Constraint", "HyperplaneRestriction", "PreconditionError", "Problem",
    "Solution", "brute_oracle", "brute_zero", "check_nonneg", "effective_k", "find_zero",
    "linear_index", "nonempty_principal", "norm_index", "pattern_of_point",
    "restrict_to_hyperplanes", "solve_on_strata", "strata_slices", "zero_on_hyperplanes",
]
