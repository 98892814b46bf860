"""End-to-end acceptance checks, shared by the test suite and ``degprinc selftest``.

Each ``criterion_N`` returns a :class:`CriterionResult`; tolerances and
runtime limits are fixed here.
"""
from __future__ import annotations

import itertools
import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arrangement import hyperplanes, jacobian_rank, random_rational_point, stratum_dim
from .certificates import f4_certificate, h4_evidence
from .coxeter import catalog, generate_group
from .invariants import SparseObjective, basic_invariants
from .lie import brute_symmetric, lie_reduce, lie_solve, pfaffian
from .parabolic import normalize_type, table1
from .poly import Polynomial, power_sum
from .reduce import (Constraint, Problem, brute_oracle, brute_zero, linear_index, norm_index,
                     solve_on_strata, zero_on_hyperplanes)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    elapsed: float
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.elapsed:.1f} s) {self.detail}"


def _timed(number, title, limit=None):
    def wrap(fn):
        def run(*args, **kwargs) -> CriterionResult:
            t0 = time.perf_counter()
            ok, detail, failures = fn(*args, **kwargs)
            el = time.perf_counter() - t0
            if limit is not None and el > limit:
                ok = False
                detail += f"; runtime {el:.1f} s exceeds {limit} s"
            return CriterionResult(number, title, ok, detail, el, failures)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# ---------------------------------------------------------------------------
# 1: the parabolic bound table


def _wname(family, param=None) -> str:
    g = catalog(family, param) if param is not None else catalog(family)
    return normalize_type(g).label


def _d_name(m: int) -> str:
    if m == 2:
        return "A1xA1"
    return _wname("D", m)


def expected_table(g) -> tuple[dict, dict]:
    """Printed bound table: ``d -> (value, W, top)`` and ``k -> SecParNum``."""
    f = g.family
    rows, sec = {}, {}
    if f == "A":
        n = g.param + 1
        for d in range(0, 2 * n):
            r = d // 2
            rows[d] = (r, "A0" if r == 0 else _wname("A", r), r + 1)
        sec = {k: k for k in range(1, n)}
    elif f == "B":
        n = g.param
        for d in range(0, 4 * n):
            r = d // 4
            rows[d] = (r, _wname("B", r + 1), 2 * (r + 1))
        sec = {k: k for k in range(1, n)}
    elif f == "D":
        n = g.param
        for d in range(0, 4 * n - 4):
            r = d // 4
            rows[d] = (r + 1, _d_name(r + 2), 2 * (r + 1))
        sec = {k: (k + 1 if k <= n // 2 else k) for k in range(1, n + 1)}
    elif f == "I2":
        m = g.param
        for d in range(1, 2 * m):
            rows[d] = (1, _wname("I2", m), m)
        sec = {1: 1}
    else:
        blocks = {
            "E6": ([(1, 5, 1, "A2", 3), (6, 7, 2, "A3", 4), (8, 11, 3, "D4", 6),
                    (12, 15, 4, "D5", 8), (16, 23, 5, "E6", 12)], [1, 3, 4, 5, 5]),
            "E7": ([(1, 5, 1, "A2", 3), (6, 7, 2, "A3", 4), (8, 11, 3, "D4", 6),
                    (12, 15, 4, "D5", 8), (16, 23, 5, "E6", 12), (24, 35, 6, "E7", 18)],
                   [1, 4, 5, 5, 6, 6]),
            "E8": ([(1, 5, 1, "A2", 3), (6, 7, 2, "A3", 4), (8, 11, 3, "D4", 6),
                    (12, 15, 4, "D5", 8), (16, 23, 5, "E6", 12), (24, 35, 6, "E7", 18),
                    (36, 59, 7, "E8", 30)], [1, 5, 6, 6, 7, 7, 7]),
            "F4": ([(1, 7, 1, "B2", 4), (8, 11, 2, "B3", 6), (12, 23, 3, "F4", 12)], [1, 3, 3]),
            "H3": ([(1, 9, 1, "I2(5)", 5), (10, 19, 2, "H3", 10)], [1, 2]),
            "H4": ([(1, 9, 1, "I2(5)", 5), (10, 19, 2, "H3", 10), (20, 59, 3, "H4", 30)],
                   [1, 3, 3]),
        }
        spans, secs = blocks[f]
        for lo, hi, v, w, top in spans:
            for d in range(lo, hi + 1):
                rows[d] = (v, w, top)
        sec = {k + 1: v for k, v in enumerate(secs)}
    return rows, sec


def table_groups() -> list:
    gs = [catalog("A", m) for m in range(2, 8)]
    gs += [catalog("B", n) for n in range(2, 9)]
    gs += [catalog("D", n) for n in range(4, 9)]
    gs += [catalog("I2", m) for m in range(3, 11)]
    gs += [catalog(x) for x in ("E6", "E7", "E8", "F4", "H3", "H4")]
    return gs


def compare_table(g) -> list[str]:
    rows, sec = expected_table(g)
    got = table1(g)
    bad = []
    for d, (v, w, top) in rows.items():
        r = got.table.get(d)
        have = None if r is None else (r.value, r.witness_type, r.witness_top)
        if have != (v, w, top):
            bad.append(f"{g.label} d={d}: expected {(v, w, top)}, got {have}")
    for k, v in sec.items():
        if got.sec.get(k) != v:
            bad.append(f"{g.label} SecParNum k={k}: expected {v}, got {got.sec.get(k)}")
    return bad


@_timed(1, "bound table reproduction", limit=5.0)
def criterion_1():
    bad, total = [], 0
    for g in table_groups():
        rows, sec = expected_table(g)
        total += len(rows) + len(sec)
        bad += compare_table(g)
    return not bad, f"{total - len(bad)}/{total} entries match", bad


# ---------------------------------------------------------------------------
# 2: F4 certificate


@_timed(2, "F4 degree-6 invariant on the sphere", limit=10.0)
def criterion_2(seed: int = 0):
    cert = f4_certificate()
    bad = []
    g = catalog("F4")
    b = basic_invariants(g)
    F = Polynomial.var(2, 1)
    sols = {}
    for sense, want in (("min", 1.0), ("max", 1.5)):
        s = solve_on_strata(Problem(g, SparseObjective(F, b), Constraint.sphere(1.0), sense,
                                    seed=seed))
        sols[sense] = s
        if abs(s.value - want) > 1e-8:
            bad.append(f"{sense}: {s.value} != {want}")
        if s.stratum_dim > 1:
            bad.append(f"{sense} witness stratum_dim {s.stratum_dim}")
    vals = sorted(float(Fraction(v)) for v in cert["interior_values"])
    if len(vals) != 2 or abs(vals[0] - 1) > 1e-8 or abs(vals[1] - 11 / 9) > 1e-8:
        bad.append(f"interior critical values {cert['interior_values']}")
    if Fraction(cert["min"]) != 1 or Fraction(cert["max"]) != Fraction(3, 2):
        bad.append(f"exact extremes {cert['min']}, {cert['max']}")
    for key, w in cert["sphere_extremizers"].items():
        if w["stratum_dim"] > 1:
            bad.append(f"exact {key} witness stratum_dim {w['stratum_dim']}")
    detail = (f"min {sols['min'].value:.12g}, max {sols['max'].value:.12g}, interior "
              f"{cert['interior_values']}")
    return not bad, detail, bad


# ---------------------------------------------------------------------------
# 3: D5 Jacobian counterexample


@_timed(3, "D5 Jacobian counterexample")
def criterion_3():
    p = [Fraction(v) for v in (1, 1, 1, 1, 0)]
    basics = [power_sum(5, 2), power_sum(5, 4)]
    r = jacobian_rank(basics, p, 1)
    sd_d = stratum_dim(catalog("D", 5), p)
    sd_b = stratum_dim(catalog("B", 5), p)
    bad = []
    if r != 1:
        bad.append(f"rank {r} != 1")
    if sd_d != 2:
        bad.append(f"D5 stratum_dim {sd_d} != 2")
    if sd_b != 1:
        bad.append(f"B5 stratum_dim {sd_b} != 1")
    return not bad, f"rank {r}, D5 stratum {sd_d}, B5 stratum {sd_b}", bad


# ---------------------------------------------------------------------------
# 4: strata solver against brute force


def random_objective(rng: np.random.Generator, k: int, terms: int = 4) -> Polynomial:
    """Random integer polynomial of degree <= 3 in ``y_1..y_k`` that involves ``y_k``."""
    exps = [e for d in range(1, 4) for e in itertools.product(range(4), repeat=k) if sum(e) == d]
    must = [e for e in exps if e[k - 1] > 0]
    out = {must[int(rng.integers(len(must)))]: int(rng.choice([-3, -2, -1, 1, 2, 3]))}
    for _ in range(terms - 1):
        e = exps[int(rng.integers(len(exps)))]
        out[e] = out.get(e, 0) + int(rng.integers(-3, 4))
    return Polynomial(k, out)


def degree_principle_cases(count: int = 100):
    """(group, k) cycling through A/B/D with n in {4, 5, 6} and every k in 1..n.

    For type A, ``n`` is the dimension of the permuted space (the group A_{n-1}).
    """
    combos = [(f, n, k) for f in "ABD" for n in (4, 5, 6) for k in range(1, n + 1)]
    for i in range(count):
        f, n, k = combos[i % len(combos)]
        yield i, (catalog("A", n - 1) if f == "A" else catalog(f, n)), k


@_timed(4, "strata solver equals brute force (A/B/D)", limit=300.0)
def criterion_4(count: int = 100, seed: int = 0, tol: float = 1e-6):
    rng = np.random.default_rng(seed)
    bad, worst = [], 0.0
    for i, g, k in degree_principle_cases(count):
        b = basic_invariants(g)
        F = random_objective(rng, k)
        for sense in ("min", "max"):
            p = Problem(g, SparseObjective(F, b, k), Constraint.sphere(1.0), sense, seed=seed + i)
            a, c = solve_on_strata(p), brute_oracle(p)
            diff = abs(a.value - c.value)
            worst = max(worst, diff)
            if diff > tol:
                bad.append(f"{g.label} k={k} {sense} F={F.to_string('y')}: strata {a.value!r}, "
                           f"brute {c.value!r}")
    return not bad, f"{2 * count - len(bad)}/{2 * count} agree, worst gap {worst:.1e}", bad


# ---------------------------------------------------------------------------
# 5: Jacobian criterion for A and B


@_timed(5, "Jacobian rank criterion (A, B)")
def criterion_5(points: int = 500, seed: int = 0):
    rng = np.random.default_rng(seed)
    bad, checks = [], 0
    for family in "AB":
        for n in range(3, 8):
            g = catalog("A", n - 1) if family == "A" else catalog("B", n)
            basics = (list(basic_invariants(g).polys) if family == "A"
                      else [power_sum(n, 2 * i) for i in range(1, n + 1)])
            for _ in range(points):
                p = random_rational_point(rng, n, family)
                sd = stratum_dim(g, p)
                for k in range(0, n):
                    checks += 1
                    r = jacobian_rank(basics, p, k)
                    if (r <= k) != (sd <= k):
                        bad.append(f"{g.label} p={[str(v) for v in p]} k={k}: rank {r}, "
                                   f"stratum {sd}")
    return not bad, f"{checks} checks, {len(bad)} violations", bad


# ---------------------------------------------------------------------------
# 6: zeros on hyperplanes


def hyperplane_cases(count: int = 50, seed: int = 0):
    """Invariant polynomials at most linear in one non-norm basic invariant.

    The kinds cycle through sums of squares with a reachable target, sums of
    squares with an unreachable one, indefinite combinations, and positive
    forms whose positivity rests on an inequality between invariants.
    """
    rng = np.random.default_rng(seed)
    groups = [catalog("B", 3), catalog("A", 3)]
    kinds = ("sos-feasible", "sos-infeasible", "indefinite", "positive")
    for i in range(count):
        g = groups[i % 2]
        b = basic_invariants(g)
        m = len(b)
        norm = norm_index(g) - 1
        other = norm + 1  # s4 for B3, s3 for A3
        y = [Polynomial.var(m, j) for j in range(m)]
        kind = kinds[(i // 2) % 4]
        if kind == "sos-feasible":
            xr = [Fraction(int(v), 4) for v in rng.integers(-8, 9, size=g.ambient)]
            v0 = b.polys[norm].eval_exact(xr).to_fraction()
            v1 = b.polys[other].eval_exact(xr).to_fraction()
            F = (y[norm] - v0) ** 2 + (y[other] - v1) ** 2
        elif kind == "sos-infeasible":
            v0 = Fraction(int(rng.integers(2, 9)), 2)
            # s4 <= s2^2 and |s3| <= s2^(3/2) <= s2^2 (s2 >= 1): out of reach
            v1 = v0 ** 2 + Fraction(int(rng.integers(1, 5)), 2)
            F = (y[norm] - v0) ** 2 + (y[other] - v1) ** 2
        elif kind == "indefinite":
            F = y[norm] ** 2 * int(rng.integers(0, 3)) - int(rng.integers(1, 6))
            for j in range(m):
                if j != norm:
                    F = F + y[j] * int(rng.integers(-3, 4))
        else:
            # 1 + s2^2 - s4 >= 1 on R^3 and 1 + s2^2 +- s3 > 0 on R^4
            sign = -1 if g.family == "B" else int(rng.choice([-1, 1]))
            F = 1 + y[norm] ** 2 + sign * y[other]
        if linear_index(F, g, m) is None:
            continue
        yield i, g, kind, SparseObjective(F, b, m)


@_timed(6, "hyperplane restriction finds zeros iff brute force does")
def criterion_6(count: int = 50, seed: int = 0):
    bad, agree = [], 0
    for i, g, kind, f in hyperplane_cases(count, seed):
        hz = zero_on_hyperplanes(f, seed + i)
        bz = brute_zero(f, seed + i)
        if hz["found"] == bz["found"]:
            agree += 1
        else:
            bad.append(f"case {i} {g.label} {kind}: hyperplanes {hz['found']}, brute {bz['found']}")
    return not bad, f"agreement {agree}/{count}", bad


# ---------------------------------------------------------------------------
# 7: H4 evidence


@_timed(7, "H4 surrogate extremizers", limit=120.0)
def criterion_7(seed: int = 0):
    ev = h4_evidence(seed=seed)
    bad = []
    if ev["invariance_error"] > 1e-10:
        bad.append(f"invariance error {ev['invariance_error']:.1e}")
    dists = []
    for sense in ("min", "max"):
        r = ev[sense]
        if r["stratum_dim"] > 2:
            bad.append(f"{sense} stratum_dim {r['stratum_dim']}")
        dists.append(min(r["orbit_distance"].values()))
    # both special directions must be hit, one by each extreme
    mn, mx = ev["min"]["orbit_distance"], ev["max"]["orbit_distance"]
    pair = min(max(mn["e1"], mx["e1+e2"]), max(mn["e1+e2"], mx["e1"]))
    if pair > 1e-6:
        bad.append(f"extremizers not equivalent to e1 and (e1+e2)/sqrt2 (distance {pair:.1e})")
    detail = (f"strata dims {ev['min']['stratum_dim']}/{ev['max']['stratum_dim']}, "
              f"orbit distance {pair:.1e}")
    return not bad, detail, bad


# ---------------------------------------------------------------------------
# 8: Lie adapter


def lie_cases(count: int = 20, seed: int = 0):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = 4 + i % 2
        names = [f"t{k}" for k in range(2, n + 1)]
        # objective in t3..tn (t2 is pinned by the constraint)
        k = int(rng.integers(3, n + 1))
        F = random_objective(rng, k - 2)
        # objective variable j stands for t_{j+3}
        pad = (0,) * (len(names) - 1 - F.nvars)
        terms = {(0,) + e + pad: c for e, c in F.terms.items()}
        yield i, n, Polynomial(len(names), terms)


@_timed(8, "Lie adapter and Pfaffian")
def criterion_8(count: int = 20, seed: int = 0, tol: float = 1e-6):
    bad, worst = [], 0.0
    for i, n, F in lie_cases(count, seed):
        for sense in ("min", "max"):
            lp = lie_reduce("sl", n, F, {"t2": 1.0}, sense, seed=seed + i)
            r = lie_solve(lp)
            br = brute_symmetric(n, F, 1.0, sense, seed=seed + i)
            diff = abs(r["value"] - br["value"])
            worst = max(worst, diff)
            if diff > tol:
                bad.append(f"sl{n} {sense} F={F.to_string(['t2', 't3', 't4', 't5'])}: reduced "
                           f"{r['value']!r}, brute {br['value']!r}")
    rng = np.random.default_rng(seed)
    pf_worst = 0.0
    for j in range(100):
        n = 4 if j % 2 == 0 else 6
        X = rng.normal(size=(n, n))
        A = X - X.T
        err = abs(pfaffian(A) ** 2 - np.linalg.det(A))
        pf_worst = max(pf_worst, err)
        if err > 1e-8:
            bad.append(f"pf^2 - det = {err:.1e} for n={n}")
    return not bad, f"worst gap {worst:.1e}, worst pf^2-det {pf_worst:.1e}", bad


# ---------------------------------------------------------------------------
# 9: group sanity


def small_groups() -> list:
    gs = [catalog("A", n) for n in range(1, 5)]
    gs += [catalog("B", n) for n in range(2, 5)]
    gs += [catalog("D", n) for n in range(2, 5)]
    gs += [catalog("I2", m) for m in range(3, 11)]
    gs += [catalog("F4"), catalog("H3"), catalog("H4")]
    return gs


@_timed(9, "group orders and hyperplane counts")
def criterion_9():
    bad = []
    for g in small_groups():
        order = len(generate_group(g))
        if order != g.order:
            bad.append(f"|{g.label}| = {order}, degree product {g.order}")
    counts = {catalog("B", n): n * n for n in range(2, 6)}
    counts.update({catalog("D", n): n * (n - 1) for n in range(2, 6)})
    counts.update({catalog("F4"): 24, catalog("H3"): 15, catalog("H4"): 60})
    for g, want in counts.items():
        have = len(hyperplanes(g))
        if have != want:
            bad.append(f"{g.label}: {have} hyperplanes, expected {want}")
    return not bad, f"{len(small_groups())} orders, {len(counts)} arrangements", bad


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


def run_all(selected=None, stream=None) -> list[CriterionResult]:
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for i, fn in enumerate(CRITERIA, start=1):
            if selected and i not in selected:
                continue
            r = fn()
            out.append(r)
            if stream is not None:
                print(r.line(), file=stream, flush=True)
    return out
