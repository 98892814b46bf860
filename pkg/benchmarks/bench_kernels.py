"""Compiled kernels against the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends are called
directly on the same arrays, so one process measures both; results are
checked for agreement before timing.  A second section times a whole strata
solve under each backend in a subprocess (``DEGPRINC_PURE=1`` for the
fallback).
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from degprinc import _pykernels
from degprinc.coxeter import catalog
from degprinc.invariants import basic_invariants
from degprinc.kernels import CompiledSystem

try:
    from degprinc import _ckernels
except ImportError:  # not built
    _ckernels = None


def cases():
    h4 = basic_invariants(catalog("H4"), count=2)
    b6 = basic_invariants(catalog("B", 6))
    f4 = basic_invariants(catalog("F4"))
    return [
        ("H4 degree-12 surrogate", [h4.polys[1]]),
        ("F4 basic invariants", list(f4.polys)),
        ("B6 power sums", list(b6.polys)),
    ]


def _parts(r):
    return r if isinstance(r, tuple) else (r,)


def best(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


def bench_kernels(number: int) -> list[tuple]:
    rng = np.random.default_rng(0)
    rows = []
    for name, polys in cases():
        cs = CompiledSystem.from_polys(polys)
        cp = polys[0].compiled()
        x = rng.normal(size=cs.nvars)
        pts = rng.normal(size=(2000, cs.nvars))
        calls = {
            "eval_grad": lambda m: m.eval_grad(cp.exps, cp.coeffs, cp.maxdeg, x),
            "eval_system": lambda m: m.eval_system(cs.exps, cs.coeffs, cs.offsets, cs.maxdeg, x),
            "eval_values(2000)": lambda m: m.eval_values(cp.exps, cp.coeffs, cp.maxdeg, pts),
        }
        for op, call in calls.items():
            ref = call(_pykernels)
            tp = best(lambda: call(_pykernels), number)
            if _ckernels is None:
                rows.append((name, op, tp, None, None))
                continue
            got = call(_ckernels)
            for a, b in zip(_parts(ref), _parts(got)):
                assert np.allclose(a, b, rtol=1e-10, atol=1e-12), (name, op)
            tc = best(lambda: call(_ckernels), number)
            rows.append((name, op, tp, tc, tp / tc))
    return rows


SOLVE = ("from degprinc.coxeter import catalog;"
         "from degprinc.invariants import basic_invariants, SparseObjective;"
         "from degprinc.poly import parse;"
         "from degprinc.reduce import Problem, Constraint, solve_on_strata;"
         "import time;"
         "g = catalog('B', 6); b = basic_invariants(g);"
         "F = parse('y3*y2 - 2*y3 + y2', 'y', nvars=6);"
         "t = time.perf_counter();"
         "[solve_on_strata(Problem(g, SparseObjective(F, b), Constraint.sphere(1), s))"
         " for s in ('min', 'max')];"
         "print(time.perf_counter() - t)")


def bench_solve() -> dict:
    out = {}
    for label, env in (("cython", {}), ("python", {"DEGPRINC_PURE": "1"})):
        if label == "cython" and _ckernels is None:
            continue
        res = subprocess.run([sys.executable, "-c", SOLVE], capture_output=True, text=True,
                             env={**os.environ, **env}, check=True)
        out[label] = float(res.stdout.strip())
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=200, help="calls per timing sample")
    ap.add_argument("--no-solve", action="store_true", help="skip the end-to-end solve timing")
    args = ap.parse_args(argv)
    print(f"{'case':<24} {'kernel':<18} {'numpy (us)':>11} {'cython (us)':>12} {'speedup':>8}")
    for name, op, tp, tc, sp in bench_kernels(args.number):
        tcs = f"{tc * 1e6:12.1f}" if tc is not None else f"{'n/a':>12}"
        sps = f"{sp:7.1f}x" if sp is not None else f"{'':>8}"
        print(f"{name:<24} {op:<18} {tp * 1e6:11.1f} {tcs} {sps}")
    if not args.no_solve:
        t = bench_solve()
        print()
        for k, v in t.items():
            print(f"B6 sphere solve (min+max), {k:<7} backend: {v:6.2f} s")
        if len(t) == 2:
            print(f"end-to-end speedup: {t['python'] / t['cython']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
