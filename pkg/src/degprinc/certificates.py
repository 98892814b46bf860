"""Worked certificates: the F4 degree-6 invariant on the sphere, and numeric
evidence for the H4 degree-12 surrogate."""
from __future__ import annotations

import time
from fractions import Fraction

import numpy as np

from .arrangement import stratum_dim
from .coxeter import catalog, generate_group
from .invariants import basic_invariants, f4_second
from .optim import InvariantObjective, sphere_multistart
from .poly import Polynomial, parse, power_sum
from .reduce import Constraint, _snap

# ---------------------------------------------------------------------------
# univariate helpers over Q (coefficient lists, lowest degree first)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _ueval(p, x):
    v = Fraction(0) if isinstance(x, Fraction) else 0.0
    for c in reversed(p):
        v = v * x + c
    return v


def _uderiv(p):
    return [i * c for i, c in enumerate(p)][1:]


def _det(m):
    """Exact determinant by elimination over Fractions."""
    m = [list(r) for r in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _sylvester(p, q):
    """Sylvester matrix of two univariate coefficient lists."""
    p, q = _trim(p), _trim(q)
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(reversed(p)) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(reversed(q)) + [Fraction(0)] * (size - n - 1 - i))
    return rows


def _interpolate(xs, ys):
    """Coefficients of the interpolating polynomial (Newton form, exact)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out
        for k in range(len(out)):
            shifted[k] -= xs[i] * out[k]
        shifted[0] += coef[i]
        out = shifted
    return _trim(out)


def _real_roots(p, lo, hi, slack=1e-9):
    """Real roots in ``[lo, hi]``; rational ones are recovered exactly."""
    p = _trim(p)
    if len(p) <= 1:
        return []
    roots = np.roots([float(c) for c in reversed(p)])
    out = []
    for r in roots:
        if abs(r.imag) > 1e-7 * max(1.0, abs(r)):
            continue
        x = float(r.real)
        if not lo - slack <= x <= hi + slack:
            continue
        q = Fraction(x).limit_denominator(10 ** 4)
        out.append(q if _ueval(p, q) == 0 else x)
    uniq = []
    for x in out:
        if all(abs(float(x) - float(y)) > 1e-9 for y in uniq):
            uniq.append(x)
    return uniq


# ---------------------------------------------------------------------------
# bivariate pieces, stored as {(i, j): Fraction}


def _to_bivariate(p: Polynomial) -> dict:
    return {e: c.to_fraction() for e, c in p.terms.items()}


def _coeffs_in_t(h: dict, s) -> list:
    deg = max((j for _, j in h), default=0)
    out = [Fraction(0) if isinstance(s, Fraction) else 0.0] * (deg + 1)
    for (i, j), c in h.items():
        out[j] += c * s ** i
    return out


def _resultant_in_t(p: dict, q: dict) -> list:
    """Res_t(p, q) as a polynomial in ``s`` (evaluation and interpolation)."""
    dt_p = max(j for _, j in p)
    dt_q = max(j for _, j in q)
    ds_p = max(i for i, _ in p)
    ds_q = max(i for i, _ in q)
    bound = dt_q * ds_p + dt_p * ds_q
    xs = [Fraction(k, 7) for k in range(bound + 1)]
    ys = [_det(_sylvester(_coeffs_in_t(p, x), _coeffs_in_t(q, x))) for x in xs]
    return _interpolate(xs, ys)


def _beval(h: dict, s, t):
    return sum(c * s ** i * t ** j for (i, j), c in h.items())


def _bdiff(h: dict, var: int) -> dict:
    out = {}
    for (i, j), c in h.items():
        e = (i, j)[var]
        if e:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            out[key] = out.get(key, 0) + e * c
    return {k: v for k, v in out.items() if v}


def _fmt(x):
    return str(x) if isinstance(x, Fraction) else float(f"{x:.12g}")


def f4_triangle_poly() -> Polynomial:
    """The F4 degree-6 invariant written in the squares ``u`` and restricted to
    ``u = (s, s, t, 1 - 2s - t)``."""
    g = parse("5 y1 y2 - 4 y3", "y", nvars=3).compose([power_sum(4, k) for k in (1, 2, 3)])
    s, t = Polynomial.var(2, 0), Polynomial.var(2, 1)
    one = Polynomial.constant(2, 1)
    return g.compose([s, s, t, one - 2 * s - t])


def f4_certificate() -> dict:
    """Exact critical values of the F4 degree-6 invariant on the unit sphere.

    On ``S^3`` the invariant is a cubic in the squared coordinates, which run
    over the standard simplex.  The stratum with two equal squares is a
    triangle; its interior critical points come from a resultant, and the
    extremes over the sphere from comparing them with edges and vertices.
    """
    t0 = time.perf_counter()
    h = _to_bivariate(f4_triangle_poly())
    hs, ht = _bdiff(h, 0), _bdiff(h, 1)
    res = _resultant_in_t(hs, ht)
    interior = []
    for s in _real_roots(res, 0, Fraction(1, 2)):
        if not 0 < float(s) < 0.5:
            continue
        for poly_t in (_coeffs_in_t(hs, s), _coeffs_in_t(ht, s)):
            if any(abs(float(c)) > 1e-12 for c in poly_t):
                break
        for t in _real_roots(poly_t, 0, 1):
            if not (0 < float(t) and 2 * float(s) + float(t) < 1):
                continue
            if isinstance(s, Fraction) and isinstance(t, Fraction):
                ok = _beval(hs, s, t) == 0 and _beval(ht, s, t) == 0
            else:
                ok = abs(_beval(hs, float(s), float(t))) < 1e-9 and abs(
                    _beval(ht, float(s), float(t))) < 1e-9
            if ok:
                interior.append({"s": _fmt(s), "t": _fmt(t), "value": _fmt(_beval(h, s, t)),
                                 "exact": isinstance(s, Fraction) and isinstance(t, Fraction)})
    # edges: s = 0, t = 0, 2s + t = 1, each as a univariate polynomial
    edges = {
        "s=0": (lambda a: (Fraction(0), a), (0, 1)),
        "t=0": (lambda a: (a, Fraction(0)), (0, Fraction(1, 2))),
        "2s+t=1": (lambda a: (a, 1 - 2 * a), (0, Fraction(1, 2))),
    }
    boundary = []
    for name, (param, (lo, hi)) in edges.items():
        deg = 3
        xs = [Fraction(k, 5) for k in range(deg + 1)]
        uni = _interpolate(xs, [_beval(h, *param(x)) for x in xs])
        for a in _real_roots(_uderiv(uni), lo, hi):
            if lo < float(a) < hi:
                s, t = param(a)
                boundary.append({"edge": name, "s": _fmt(s), "t": _fmt(t),
                                 "value": _fmt(_ueval(uni, a))})
    vertices = [{"s": _fmt(Fraction(s)), "t": _fmt(Fraction(t)),
                 "value": _fmt(_beval(h, Fraction(s), Fraction(t)))}
                for s, t in ((0, 0), (Fraction(1, 2), 0), (0, 1))]
    allv = [Fraction(v["value"]) if isinstance(v["value"], str) else v["value"]
            for v in interior + boundary + vertices]
    vmin, vmax = min(allv), max(allv)
    # the extremes on the sphere, lifted from the simplex, and their strata
    g = catalog("F4")
    witnesses = {"min": [1, 0, 0, 0], "max": [1, 1, 0, 0]}
    f = f4_second()
    lifted = {}
    for key, w in witnesses.items():
        r2 = sum(Fraction(c) ** 2 for c in w)
        val = f.eval_exact([Fraction(c) for c in w]).to_fraction() / r2 ** 3
        lifted[key] = {"point_direction": w, "value": _fmt(val),
                       "stratum_dim": stratum_dim(g, [Fraction(c) for c in w])}
    return {
        "group": "F4",
        "resultant_degree": len(res) - 1,
        "interior_critical": interior,
        "interior_values": sorted({v["value"] for v in interior}, key=lambda s: Fraction(s)),
        "boundary_critical": boundary,
        "vertices": vertices,
        "min": _fmt(vmin),
        "max": _fmt(vmax),
        "sphere_extremizers": lifted,
        "timing": round(time.perf_counter() - t0, 3),
    }


# ---------------------------------------------------------------------------
# H4


def orbit_distance(mats: np.ndarray, w: np.ndarray, target: np.ndarray) -> float:
    """``min_g |g target - w|`` over the given group matrices."""
    imgs = mats @ target
    return float(np.min(np.linalg.norm(imgs - w, axis=1)))


def h4_evidence(budget: int = 64, seed: int = 0, invariance_points: int = 20) -> dict:
    """Global extremes of the degree-12 H4 surrogate on ``S^3`` by dense multistart.

    Reports where the extremizers sit: their stratum dimension and their
    distance to the orbits of a vertex-type and an edge-type direction.
    """
    t0 = time.perf_counter()
    g = catalog("H4")
    basis = basic_invariants(g, count=2)
    P = basis.polys[1]
    obj = InvariantObjective.plain(P)
    mats = generate_group(g).float_matrices()
    rng = np.random.default_rng(seed)
    # invariance of the surrogate under random group elements
    pts = rng.normal(size=(invariance_points, 4))
    worst = 0.0
    base = obj.values(pts)
    for _ in range(5):
        gs = mats[rng.integers(len(mats), size=invariance_points)]
        moved = np.einsum("kij,kj->ki", gs, pts)
        worst = max(worst, float(np.max(np.abs(obj.values(moved) - base) /
                                         np.maximum(1.0, np.abs(base)))))
    targets = {"e1": np.array([1.0, 0, 0, 0]), "e1+e2": np.array([1.0, 1, 0, 0]) / np.sqrt(2)}
    out = {"group": "H4", "surrogate_degree": P.degree(), "invariance_error": worst}
    for sense in ("min", "max"):
        res = sphere_multistart(obj, np.eye(4), 1.0, sense, budget, seed)
        sgn = 1.0 if sense == "min" else -1.0
        best = min(res, key=lambda r: sgn * r.value)
        hits = [r for r in res if abs(r.value - best.value) <= 1e-8 * max(1.0, abs(best.value))]
        w, v = _snap(g, obj, best.x, best.value, Constraint.sphere(1.0), basis.polys)
        out[sense] = {
            "value": float(v),
            "witness": [float(v) for v in w],
            "stratum_dim": stratum_dim(g, list(w)),
            "hits": len(hits),
            "orbit_distance": {k: orbit_distance(mats, w, t) for k, t in targets.items()},
        }
    out["timing"] = round(time.perf_counter() - t0, 3)
    return out


__all__ = ["f4_certificate", "f4_triangle_poly", "h4_evidence", "orbit_distance"]
